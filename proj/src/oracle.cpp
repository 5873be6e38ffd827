#include "notakto/oracle.hpp"

#include <algorithm>
#include <array>

namespace notakto {

namespace {

constexpr std::size_t kMaxPacked = 7;

std::uint64_t pack(const std::vector<std::uint16_t>& live) {
  std::uint64_t key = 0;
  for (std::uint16_t code : live) key = (key << 9) | static_cast<std::uint64_t>(code + 1);
  return key;
}

struct ChildTable {
  std::array<std::vector<std::uint16_t>, 512> children;

  ChildTable() {
    for (const CanonicalBoard& cb : enumerate_canonical()) {
      const Board b = cb.board();
      if (b.dead()) continue;
      auto& out = children[cb.code];
      for (int cell : legal_cells(b)) {
        const Board next = b.with(cell);
        out.push_back(next.dead() ? Oracle::kDeadChild : canonicalize(next).code);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }
};

const ChildTable& child_table() {
  static const ChildTable t;
  return t;
}

}  // namespace

Oracle::Oracle() { packed_.reserve(1 << 16); }

const std::vector<std::uint16_t>& Oracle::children(std::uint16_t code) {
  return child_table().children.at(code);
}

bool Oracle::solve_p(std::vector<std::uint16_t>& live) {
  if (live.empty()) return false;

  const bool small = live.size() <= kMaxPacked;
  std::uint64_t packed_key = 0;
  if (small) {
    packed_key = pack(live);
    if (auto it = packed_.find(packed_key); it != packed_.end()) return it->second;
  } else if (auto it = wide_.find(live); it != wide_.end()) {
    return it->second;
  }

  bool is_p = true;
  for (std::size_t i = 0; i < live.size() && is_p; ++i) {
    if (i > 0 && live[i] == live[i - 1]) continue;
    for (std::uint16_t child : children(live[i])) {
      std::vector<std::uint16_t> next;
      next.reserve(live.size());
      for (std::size_t j = 0; j < live.size(); ++j)
        if (j != i) next.push_back(live[j]);
      if (child != kDeadChild) next.insert(std::upper_bound(next.begin(), next.end(), child), child);
      if (solve_p(next)) {
        is_p = false;
        break;
      }
    }
  }

  if (small)
    packed_.emplace(packed_key, is_p);
  else
    wide_.emplace(live, is_p);
  return is_p;
}

Outcome Oracle::outcome_of(std::span<const std::uint16_t> codes) {
  std::vector<std::uint16_t> live;
  live.reserve(codes.size());
  for (std::uint16_t code : codes) {
    const Board b(code);
    if (!b.dead()) live.push_back(canonicalize(b).code);
  }
  std::sort(live.begin(), live.end());
  std::lock_guard lock(mutex_);
  return solve_p(live) ? Outcome::P : Outcome::N;
}

Outcome Oracle::outcome(const Position& p) {
  const auto key = p.key();
  return outcome_of(key);
}

std::vector<Move> Oracle::winning_moves(const Position& p) {
  if (p.terminal()) throw IllegalMove("no legal moves in terminal position " + p.str());
  std::vector<Move> wins;
  for (const Move& m : p.legal_moves())
    if (outcome(apply(p, m)) == Outcome::P) wins.push_back(m);
  return wins;
}

std::size_t Oracle::cache_size() const {
  std::lock_guard lock(mutex_);
  return packed_.size() + wide_.size();
}

}  // namespace notakto
