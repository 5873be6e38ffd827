#include "notakto/engine.hpp"

#include <limits>
#include <memory>
#include <random>

namespace notakto {

namespace {

int winning_reply_count(const Position& p, const ValueTable& t) {
  int count = 0;
  for (const Move& m : p.legal_moves())
    if (is_p(position_value(apply(p, m), t))) ++count;
  return count;
}

std::string describe(const Move& m) {
  return "board " + std::to_string(m.board_index) + " cell " + std::to_string(m.cell);
}

}  // namespace

Recommendation recommend(const Position& p, const ValueTable& t, Oracle* fallback) {
  Recommendation rec;
  rec.value_now = position_value(p, t);
  rec.outcome_now = is_p(rec.value_now) ? Outcome::P : Outcome::N;
  if (p.terminal()) {
    rec.rationale = "no legal moves";
    return rec;
  }

  const std::vector<Move> moves = p.legal_moves();
  if (rec.outcome_now == Outcome::N) {
    for (const Move& m : moves) {
      const MonoidElement next = position_value(apply(p, m), t);
      if (is_p(next)) {
        rec.move = m;
        rec.rationale = "moves to value " + render_element(next) + " in P";
        return rec;
      }
    }
    if (fallback) {
      const auto wins = fallback->winning_moves(p);
      if (!wins.empty()) {
        rec.move = wins.front();
        rec.rationale = "oracle winning move (table offered none)";
        return rec;
      }
    }
  }

  // Moving into a terminal position completes the last line, so it ranks
  // below every move that leaves the opponent something to get wrong.
  int best = std::numeric_limits<int>::max();
  for (const Move& m : moves) {
    const Position next = apply(p, m);
    const int replies = next.terminal() ? std::numeric_limits<int>::max() - 1 : winning_reply_count(next, t);
    if (replies < best) {
      best = replies;
      rec.move = m;
    }
  }
  rec.rationale = best == std::numeric_limits<int>::max() - 1
                      ? "every move loses; " + describe(*rec.move) + " completes the last line"
                      : "every move loses; " + describe(*rec.move) + " leaves " + std::to_string(best) +
                            " winning replies";
  return rec;
}

Strategy engine_strategy(const ValueTable& t) {
  return [&t](const Position& p, const std::optional<Move>&) { return *recommend(p, t).move; };
}

Strategy random_strategy(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const Position& p, const std::optional<Move>&) {
    const auto moves = p.legal_moves();
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return moves[pick(*rng)];
  };
}

Strategy mimic_strategy() {
  return [](const Position& p, const std::optional<Move>& last) {
    if (last) {
      for (int b = 0; b < static_cast<int>(p.size()); ++b) {
        const Move copy{b, last->cell};
        if (b != last->board_index && p.is_legal(copy)) return copy;
      }
    }
    return p.legal_moves().front();
  };
}

Strategy scripted_strategy(std::vector<Move> moves) {
  auto script = std::make_shared<std::vector<Move>>(std::move(moves));
  auto next = std::make_shared<std::size_t>(0);
  return [script, next](const Position& p, const std::optional<Move>&) {
    if (*next >= script->size()) throw IllegalMove("scripted player ran out of moves");
    const Move m = (*script)[(*next)++];
    if (!p.is_legal(m)) throw IllegalMove("scripted move " + describe(m) + " is illegal");
    return m;
  };
}

Transcript play_out(const Position& start, const Strategy& first, const Strategy& second) {
  Transcript tr;
  tr.positions.push_back(start);
  std::optional<Move> last;
  int mover = 0;
  while (!tr.positions.back().terminal()) {
    const Position& now = tr.positions.back();
    const Move m = (mover == 0 ? first : second)(now, last);
    Position next = apply(now, m);
    tr.moves.push_back(m);
    tr.positions.push_back(std::move(next));
    last = m;
    tr.loser = mover;
    mover ^= 1;
  }
  return tr;
}

}  // namespace notakto
