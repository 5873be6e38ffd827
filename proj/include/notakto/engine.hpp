#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "notakto/monoid.hpp"
#include "notakto/oracle.hpp"
#include "notakto/position.hpp"
#include "notakto/quotient.hpp"

namespace notakto {

struct Recommendation {
  std::optional<Move> move;  // empty only for terminal positions
  Outcome outcome_now = Outcome::N;
  MonoidElement value_now;
  std::string rationale;
};

// Winning positions: the first move (by board, then cell) whose successor
// value is in P. Losing positions: the move leaving the opponent the fewest
// winning replies, same tie-break, with moves that end the game ranked last.
// If the table offers no winning move from an N value and an oracle is
// supplied, the oracle's first winning move is used.
Recommendation recommend(const Position& p, const ValueTable& t, Oracle* fallback = nullptr);

// A player: picks a legal move given the position and the opponent's last move.
using Strategy = std::function<Move(const Position&, const std::optional<Move>& last)>;

Strategy engine_strategy(const ValueTable& t);
Strategy random_strategy(std::uint64_t seed);
// Copies the opponent's last cell onto another board where it is legal,
// else plays the first legal move.
Strategy mimic_strategy();
// Plays the given moves in order; throws IllegalMove if one is illegal or the script runs out.
Strategy scripted_strategy(std::vector<Move> moves);

struct Transcript {
  std::vector<Position> positions;  // start position, then after each move
  std::vector<Move> moves;
  // Player (0 = first to move) who completed the last line; with no moves
  // at all the nominal previous player, 1, loses.
  int loser = 1;
};

Transcript play_out(const Position& start, const Strategy& first, const Strategy& second);

}  // namespace notakto
