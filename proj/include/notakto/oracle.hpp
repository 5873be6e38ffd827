#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "notakto/position.hpp"

namespace notakto {

// Exhaustive misere solver for sums of boards. A position with no legal
// move is N: whoever moved last completed the final line and lost.
//
// Results are memoized on the sorted canonical codes of the live boards.
// Public queries serialize on an internal mutex, so concurrent callers see
// only fully computed entries.
class Oracle {
 public:
  Oracle();

  Outcome outcome(const Position& p);

  // Codes may be in any order and may include dead classes.
  Outcome outcome_of(std::span<const std::uint16_t> codes);

  // Legal moves leading to a P position. Throws if p is terminal.
  std::vector<Move> winning_moves(const Position& p);

  std::size_t cache_size() const;

  // Distinct canonical successors of a live canonical board; dead
  // successors are reported as kDeadChild.
  static constexpr std::uint16_t kDeadChild = 0xffff;
  static const std::vector<std::uint16_t>& children(std::uint16_t code);

 private:
  bool solve_p(std::vector<std::uint16_t>& live);

  mutable std::mutex mutex_;
  // Up to 7 live boards pack into one word as 9-bit (code + 1) fields.
  std::unordered_map<std::uint64_t, bool> packed_;
  std::map<std::vector<std::uint16_t>, bool> wide_;
};

}  // namespace notakto
