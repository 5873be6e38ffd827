#include "notakto/quotient.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <sstream>

namespace notakto {

const MonoidElement& ValueTable::at(CanonicalBoard cb) const {
  if (cb.code > kFullMask || !has_[cb.code])
    throw std::out_of_range("no table entry for class " + std::to_string(cb.code));
  return values_[cb.code];
}

void ValueTable::set(CanonicalBoard cb, const MonoidElement& value) {
  if (canonicalize(cb.board()) != cb)
    throw std::invalid_argument("code " + std::to_string(cb.code) + " is not canonical");
  values_[cb.code] = value;
  has_[cb.code] = true;
}

bool ValueTable::complete() const {
  const auto& classes = enumerate_canonical();
  return std::all_of(classes.begin(), classes.end(), [this](CanonicalBoard cb) { return has(cb); });
}

bool operator<(const ValueTable& x, const ValueTable& y) {
  for (CanonicalBoard cb : enumerate_canonical()) {
    const bool hx = x.has(cb), hy = y.has(cb);
    if (hx != hy) return hx < hy;
    if (hx && x.at(cb) != y.at(cb)) return x.at(cb) < y.at(cb);
  }
  return false;
}

std::optional<std::vector<MonoidElement>> p_automorphism(const GeneratorImages& images) {
  const auto& all = elements();
  std::vector<MonoidElement> phi;
  phi.reserve(all.size());
  for (const MonoidElement& x : all) {
    MonoidElement y;
    for (int g = 0; g < 4; ++g) y *= images[g].pow(x.exponents()[g]);
    phi.push_back(y);
  }
  std::vector<MonoidElement> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != all) return std::nullopt;  // not a bijection
  for (std::size_t x = 0; x < all.size(); ++x) {
    if (is_p(all[x]) != is_p(phi[x])) return std::nullopt;
    for (std::size_t y = 0; y < all.size(); ++y)
      if (phi[(all[x] * all[y]).index()] != phi[x] * phi[y]) return std::nullopt;
  }
  return phi;
}

std::optional<std::vector<MonoidElement>> relating_automorphism(const ValueTable& from,
                                                                const ValueTable& to) {
  // Every generator must occur as some entry of `from` for the images to be pinned.
  std::array<std::optional<MonoidElement>, 4> images;
  const std::array<MonoidElement, 4> gens = {MonoidElement::a(), MonoidElement::b(),
                                             MonoidElement::c(), MonoidElement::d()};
  for (CanonicalBoard cb : enumerate_canonical()) {
    for (int g = 0; g < 4; ++g)
      if (!images[g] && from.at(cb) == gens[g]) images[g] = to.at(cb);
  }
  GeneratorImages pinned;
  for (int g = 0; g < 4; ++g) {
    if (!images[g]) return std::nullopt;
    pinned[g] = *images[g];
  }
  auto phi = p_automorphism(pinned);
  if (!phi) return std::nullopt;
  for (CanonicalBoard cb : enumerate_canonical())
    if ((*phi)[from.at(cb).index()] != to.at(cb)) return std::nullopt;
  return phi;
}

MonoidElement position_value(const Position& p, const ValueTable& t) {
  MonoidElement v;
  for (Board b : p.boards())
    if (!b.dead()) v *= t[b];
  return v;
}

Outcome outcome_via_quotient(const Position& p, const ValueTable& t) {
  return is_p(position_value(p, t)) ? Outcome::P : Outcome::N;
}

std::vector<Move> quotient_winning_moves(const Position& p, const ValueTable& t) {
  std::vector<Move> wins;
  for (const Move& m : p.legal_moves())
    if (is_p(position_value(apply(p, m), t))) wins.push_back(m);
  return wins;
}

namespace {

using Candidates = std::bitset<18>;

// One multiset of live classes (indices into the live-class list) and the
// oracle's verdict on the sum.
struct Constraint {
  std::vector<int> members;  // sorted, may repeat
  bool p = false;
};

class Inference {
 public:
  Inference(Oracle& oracle, const InferenceConfig& cfg) : cfg_(cfg) {
    for (CanonicalBoard cb : enumerate_canonical())
      if (!cb.board().dead()) live_.push_back(cb.code);

    std::vector<int> members;
    generate(oracle, members, 0);
    std::stable_sort(constraints_.begin(), constraints_.end(),
                     [](const Constraint& x, const Constraint& y) {
                       return x.members.size() < y.members.size();
                     });
    if (cfg_.reverse_order) std::reverse(constraints_.begin(), constraints_.end());
  }

  std::size_t constraint_count() const { return constraints_.size(); }
  const std::vector<std::uint16_t>& live() const { return live_; }

  // Returns false on a wipe-out.
  bool propagate(std::vector<Candidates>& cand, std::size_t* sweeps = nullptr) const {
    bool changed = true;
    while (changed) {
      changed = false;
      if (sweeps) ++*sweeps;
      for (const Constraint& con : constraints_) {
        int result = revise(con, cand);
        if (result < 0) return false;
        if (result > 0) changed = true;
      }
    }
    return true;
  }

  // Collects complete labelings accepted by `accept`, at most `limit`.
  template <typename Accept>
  void search(std::vector<Candidates> cand, std::vector<std::vector<Candidates>>& out,
              std::size_t limit, std::size_t& branches, const Accept& accept) const {
    if (out.size() >= limit) return;
    ++branches;
    if (!propagate(cand)) return;
    int pick = -1;
    for (std::size_t v = 0; v < cand.size(); ++v) {
      if (cand[v].count() > 1 && (pick < 0 || cand[v].count() < cand[pick].count()))
        pick = static_cast<int>(v);
    }
    if (pick < 0) {
      if (accept(cand)) out.push_back(std::move(cand));
      return;
    }
    for (int e = 0; e < 18; ++e) {
      if (!cand[pick].test(e)) continue;
      auto next = cand;
      next[pick].reset();
      next[pick].set(e);
      search(std::move(next), out, limit, branches, accept);
    }
  }

 private:
  void generate(Oracle& oracle, std::vector<int>& members, int from) {
    if (!members.empty()) {
      std::vector<std::uint16_t> codes;
      for (int m : members) codes.push_back(live_[m]);
      constraints_.push_back({members, oracle.outcome_of(codes) == Outcome::P});
    }
    if (static_cast<int>(members.size()) == cfg_.max_context_size) return;
    for (int m = from; m < static_cast<int>(live_.size()); ++m) {
      members.push_back(m);
      generate(oracle, members, m);
      members.pop_back();
    }
  }

  // Arc-consistency on one constraint. -1 wipe-out, 0 no change, 1 pruned.
  int revise(const Constraint& con, std::vector<Candidates>& cand) const {
    const auto& all = elements();
    MonoidElement known;
    std::array<int, 8> unknown{};
    std::array<int, 8> mult{};
    int unknowns = 0;
    for (std::size_t i = 0; i < con.members.size(); ++i) {
      const int m = con.members[i];
      if (cand[m].count() == 1) {
        known *= all[first_bit(cand[m])];
      } else if (unknowns > 0 && unknown[unknowns - 1] == m) {
        ++mult[unknowns - 1];
      } else {
        if (unknowns == cfg_.max_unknowns_per_constraint) return 0;
        unknown[unknowns] = m;
        mult[unknowns] = 1;
        ++unknowns;
      }
    }
    if (unknowns == 0) return is_p(known) == con.p ? 0 : -1;

    std::vector<Candidates> supported(unknowns);
    std::array<int, 8> choice{};
    label(con, cand, known, unknown, mult, unknowns, 0, choice, supported);

    int result = 0;
    for (int u = 0; u < unknowns; ++u) {
      if (supported[u] != cand[unknown[u]]) {
        cand[unknown[u]] = supported[u];
        if (supported[u].none()) return -1;
        result = 1;
      }
    }
    return result;
  }

  void label(const Constraint& con, const std::vector<Candidates>& cand, const MonoidElement& acc,
             const std::array<int, 8>& unknown, const std::array<int, 8>& mult, int unknowns,
             int depth, std::array<int, 8>& choice, std::vector<Candidates>& supported) const {
    const auto& all = elements();
    if (depth == unknowns) {
      if (is_p(acc) == con.p)
        for (int u = 0; u < unknowns; ++u) supported[u].set(choice[u]);
      return;
    }
    for (int e = 0; e < 18; ++e) {
      if (!cand[unknown[depth]].test(e)) continue;
      choice[depth] = e;
      label(con, cand, acc * all[e].pow(mult[depth]), unknown, mult, unknowns, depth + 1, choice,
            supported);
    }
  }

  static int first_bit(const Candidates& c) {
    for (int e = 0; e < 18; ++e)
      if (c.test(e)) return e;
    return -1;
  }

  InferenceConfig cfg_;
  std::vector<std::uint16_t> live_;
  std::vector<Constraint> constraints_;
};

ValueTable to_table(const std::vector<std::uint16_t>& live, const std::vector<Candidates>& cand) {
  ValueTable t;
  for (CanonicalBoard cb : enumerate_canonical())
    if (cb.board().dead()) t.set(cb, MonoidElement::identity());
  for (std::size_t v = 0; v < live.size(); ++v)
    for (int e = 0; e < 18; ++e)
      if (cand[v].test(e)) t.set({live[v]}, elements()[e]);
  return t;
}

}  // namespace

ValueTable infer_value_table(Oracle& oracle, const InferenceConfig& cfg, InferenceStats* stats) {
  if (cfg.max_context_size < 1 || cfg.max_unknowns_per_constraint < 1 || cfg.verify_size < 1)
    throw std::invalid_argument("inference parameters must be >= 1");
  if (cfg.max_unknowns_per_constraint > 8)
    throw std::invalid_argument("at most 8 unknowns per constraint are supported");

  Inference inf(oracle, cfg);
  const auto& live = inf.live();

  std::vector<Candidates> cand(live.size());
  for (auto& c : cand) c.set();
  cand[0].reset();  // live[0] is the empty board, code 0
  cand[0].set(MonoidElement::c().index());

  InferenceStats local;
  local.constraints = inf.constraint_count();
  if (!inf.propagate(cand, &local.sweeps))
    throw NoConsistentAssignment("constraint propagation emptied a candidate set");
  for (const auto& c : cand)
    if (c.count() == 1) ++local.pinned_by_propagation;

  // Leaves are checked against the full verification envelope as they are found.
  constexpr std::size_t kSurvivorLimit = 16;
  std::vector<std::vector<Candidates>> labelings;
  inf.search(cand, labelings, kSurvivorLimit, local.branches, [&](const std::vector<Candidates>& leaf) {
    return verify_table(to_table(live, leaf), oracle, cfg.verify_size, true).ok();
  });
  local.survivors = labelings.size();
  if (stats) *stats = local;

  std::vector<ValueTable> survivors;
  for (const auto& labeling : labelings) survivors.push_back(to_table(live, labeling));
  if (survivors.empty())
    throw NoConsistentAssignment("no labeling survives verification over sums of up to " +
                                 std::to_string(cfg.verify_size) + " boards");
  std::sort(survivors.begin(), survivors.end());
  if (survivors.size() > 1 && cfg.resolve_automorphic) {
    const bool related = std::all_of(survivors.begin() + 1, survivors.end(), [&](const ValueTable& t) {
      return relating_automorphism(survivors.front(), t).has_value();
    });
    if (related) return survivors.front();
  }
  if (survivors.size() > 1) {
    std::string what = std::to_string(survivors.size()) + " labelings survive verification";
    throw AmbiguousAssignment(std::move(what), std::move(survivors));
  }
  return survivors.front();
}

VerifyReport verify_table(const ValueTable& t, Oracle& oracle, int size_limit, bool stop_at_first) {
  const auto start = std::chrono::steady_clock::now();
  const auto& classes = enumerate_canonical();
  const int n = static_cast<int>(classes.size());
  VerifyReport report;
  std::vector<std::uint16_t> codes;

  // Depth-first over non-decreasing class indices, carrying the running product.
  auto visit = [&](auto&& self, int from, const MonoidElement& acc) -> bool {
    if (!codes.empty()) {
      ++report.checked;
      const bool quotient_p = is_p(acc);
      const bool oracle_p = oracle.outcome_of(codes) == Outcome::P;
      if (quotient_p != oracle_p) {
        ++report.mismatches;
        if (!report.first_mismatch) report.first_mismatch = codes;
        if (stop_at_first) return false;
      }
    }
    if (static_cast<int>(codes.size()) == size_limit) return true;
    for (int c = from; c < n; ++c) {
      codes.push_back(classes[c].code);
      const bool keep_going = self(self, c, acc * t.at(classes[c]));
      codes.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  visit(visit, 0, MonoidElement::identity());

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace notakto
