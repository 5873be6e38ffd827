#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "notakto/board.hpp"
#include "notakto/monoid.hpp"
#include "notakto/oracle.hpp"
#include "notakto/position.hpp"

namespace notakto {

// Dictionary from canonical board class to its quotient value.
class ValueTable {
 public:
  // Ordered by entry values in ascending class-code order.
  friend bool operator<(const ValueTable& x, const ValueTable& y);

  ValueTable() = default;

  const MonoidElement& at(CanonicalBoard cb) const;
  const MonoidElement& operator[](Board b) const { return at(canonicalize(b)); }
  void set(CanonicalBoard cb, const MonoidElement& value);
  bool has(CanonicalBoard cb) const { return has_[cb.code]; }
  // True once every one of the 102 classes carries a value.
  bool complete() const;

  friend bool operator==(const ValueTable&, const ValueTable&) = default;

 private:
  std::array<MonoidElement, 512> values_{};
  std::array<bool, 512> has_{};
};

struct InferenceConfig {
  int max_context_size = 3;
  int max_unknowns_per_constraint = 2;
  int verify_size = 3;
  // Reverse the constraint sweep; the result must not depend on it.
  bool reverse_order = false;
  // When every surviving labeling is the image of one other under a
  // P-preserving automorphism of Q fixing c, outcomes cannot tell them
  // apart; pick the lexicographically least one instead of throwing.
  bool resolve_automorphic = true;
};

class NoConsistentAssignment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbiguousAssignment : public std::runtime_error {
 public:
  AmbiguousAssignment(std::string what, std::vector<ValueTable> survivors)
      : std::runtime_error(std::move(what)), survivors(std::move(survivors)) {}
  std::vector<ValueTable> survivors;
};

struct InferenceStats {
  std::size_t constraints = 0;     // multisets generated
  std::size_t sweeps = 0;          // propagation passes at the root
  std::size_t branches = 0;        // backtracking nodes
  std::size_t pinned_by_propagation = 0;
  std::size_t survivors = 0;       // labelings passing verification
};

// Images of the generators a, b, c, d under a monoid endomorphism.
using GeneratorImages = std::array<MonoidElement, 4>;

// Extends generator images to all 18 elements if they define an
// automorphism of Q that maps the P-set onto itself.
std::optional<std::vector<MonoidElement>> p_automorphism(const GeneratorImages& images);

// The automorphism carrying `from` onto `to` entry by entry, if any.
std::optional<std::vector<MonoidElement>> relating_automorphism(const ValueTable& from,
                                                                const ValueTable& to);

ValueTable infer_value_table(Oracle& oracle, const InferenceConfig& cfg = {},
                             InferenceStats* stats = nullptr);

MonoidElement position_value(const Position& p, const ValueTable& t);
Outcome outcome_via_quotient(const Position& p, const ValueTable& t);

// Moves whose successor value lies in the P-set.
std::vector<Move> quotient_winning_moves(const Position& p, const ValueTable& t);

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::optional<std::vector<std::uint16_t>> first_mismatch;
  double seconds = 0.0;

  bool ok() const { return mismatches == 0; }
};

// Compares the quotient outcome with the oracle on every multiset of 1..size_limit
// canonical classes (dead ones included).
VerifyReport verify_table(const ValueTable& t, Oracle& oracle, int size_limit,
                          bool stop_at_first = false);

// Persistence. The JSON document carries a checksum over its entries.
std::string table_checksum(const ValueTable& t);
std::string to_json(const ValueTable& t);
std::string to_csv(const ValueTable& t);
// Throws std::runtime_error on malformed documents or checksum mismatch.
ValueTable table_from_json(const std::string& text);

}  // namespace notakto
