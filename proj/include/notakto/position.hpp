#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "notakto/board.hpp"

namespace notakto {

struct Move {
  int board_index = 0;
  int cell = 0;

  friend constexpr auto operator<=>(const Move&, const Move&) = default;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Outcome { N, P };

inline const char* to_string(Outcome o) { return o == Outcome::N ? "N" : "P"; }

// A disjunctive sum of boards. Dead boards stay in the list (so board
// indices remain stable) but never take part in play.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<Board> boards) : boards_(std::move(boards)) {}
  static Position empty_boards(int count);

  const std::vector<Board>& boards() const { return boards_; }
  std::size_t size() const { return boards_.size(); }
  const Board& operator[](std::size_t i) const { return boards_.at(i); }

  bool terminal() const;
  bool is_legal(const Move& m) const;
  std::vector<Move> legal_moves() const;

  // Sorted canonical codes of the live boards only.
  std::vector<std::uint16_t> key() const;

  // '/'-joined 9-character boards.
  std::string str() const;
  std::string masks_str() const;

 private:
  std::vector<Board> boards_;
};

Position apply(const Position& p, const Move& m);

// Accepts "....X..../........." or "16,0" forms.
Position parse_position(std::string_view text);

}  // namespace notakto
