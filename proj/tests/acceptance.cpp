// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Pass --extended to add the four-board exhaustive sweep.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "harness.hpp"
#include "notakto/engine.hpp"
#include "notakto/service.hpp"

using namespace notakto;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < limit_seconds, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << name << " (" << secs << " s)";
  if (!c.ok) std::cout << ": " << c.detail;
  std::cout << std::endl;
}

MonoidElement el(const char* text) { return parse_element(text); }

Position pos(std::initializer_list<std::uint16_t> masks) {
  std::vector<Board> boards;
  for (auto m : masks) boards.emplace_back(m);
  return Position(boards);
}

bool contains(const std::vector<Move>& moves, Move m) {
  return std::find(moves.begin(), moves.end(), m) != moves.end();
}

constexpr std::uint16_t kCenter = 1u << 4;

}  // namespace

int main(int argc, char** argv) {
  const bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;

  Oracle shared;
  const ValueTable table = infer_value_table(shared);

  criterion("monoid structure: 18 elements, relations, commutative and associative, P-set", 1.0, [](Check& c) {
    std::set<std::string> names;
    for (const auto& x : elements()) names.insert(render_element(x));
    const std::set<std::string> listed = {"1",  "a",  "b",  "ab",  "b^2", "ab^2",  "c",  "ac", "bc",
                                          "abc", "c^2", "ac^2", "bc^2", "abc^2", "d", "ad", "bd", "abd"};
    c.expect(elements().size() == 18 && names == listed, "element list differs");
    const std::pair<const char*, const char*> relations[] = {
        {"a^2", "1"}, {"b^3", "b"}, {"b^2c", "c"}, {"c^3", "ac^2"}, {"b^2d", "d"}, {"cd", "ad"}, {"d^2", "c^2"}};
    for (auto [lhs, rhs] : relations) c.expect(el(lhs) == el(rhs), std::string("relation ") + lhs + "=" + rhs);
    std::size_t triples = 0;
    for (const auto& x : elements())
      for (const auto& y : elements()) {
        c.expect(x * y == y * x, "not commutative");
        for (const auto& z : elements()) {
          c.expect((x * y) * z == x * (y * z), "not associative");
          ++triples;
        }
      }
    c.expect(triples == 5832, "triple count");
    std::set<std::string> p;
    for (const auto& x : elements())
      if (is_p(x)) p.insert(render_element(x));
    c.expect(p == std::set<std::string>{"a", "b^2", "bc", "c^2"}, "P-set differs");
  });

  criterion("worked derivation: c^4 = c^3 c = ac^2 c = ac^3 = aac^2 = c^2", 0.1, [](Check& c) {
    const auto a = MonoidElement::a(), cc = MonoidElement::c();
    c.expect(cc.pow(3) == a * cc.pow(2), "c^3 != ac^2");
    c.expect(cc.pow(3) * cc == (a * cc.pow(2)) * cc, "c^3 c != ac^2 c");
    c.expect(a * cc.pow(3) == a * a * cc.pow(2), "ac^3 != aac^2");
    c.expect(a * a * cc.pow(2) == cc.pow(2), "aac^2 != c^2");
    c.expect(MonoidElement::reduce(0, 0, 4, 0) == el("c^2"), "reduce(c^4) != c^2");
  });

  criterion("board combinatorics: 102 classes, Burnside (512+8+32+8+256)/8", 1.0, [](Check& c) {
    c.expect(enumerate_canonical().size() == 102, "class count");
    // Fixed points of each symmetry counted directly.
    int fixed = 0;
    for (int t = 0; t < kSymmetries; ++t)
      for (unsigned m = 0; m < 512; ++m)
        fixed += transform(Board(static_cast<std::uint16_t>(m)), t).mask() == m;
    c.expect(fixed == 512 + 8 + 32 + 8 + 256, "fixed-point total " + std::to_string(fixed));
    c.expect(fixed / 8 == 102, "Burnside count");
  });

  criterion("single-board strategy: center unique win, other openings lose, knight replies win", 1.0,
            [](Check& c) {
              Oracle o;
              c.expect(o.outcome(Position::empty_boards(1)) == Outcome::N, "empty board not N");
              c.expect(o.winning_moves(Position::empty_boards(1)) == std::vector<Move>{{0, 4}},
                       "winning openings != {center}");
              for (int first = 0; first < kCells; ++first) {
                if (first == 4) continue;
                const Position p = pos({static_cast<std::uint16_t>(1u << first)});
                c.expect(o.outcome(p) == Outcome::N, "opening " + std::to_string(first) + " does not lose");
                c.expect(contains(o.winning_moves(p), {0, 8 - first}), "diametric reply not winning");
              }
              for (int reply = 0; reply < kCells; ++reply) {
                if (reply == 4) continue;
                const auto wins = o.winning_moves(pos({static_cast<std::uint16_t>(kCenter | (1u << reply))}));
                for (int cell = 0; cell < kCells; ++cell) {
                  const int dr = std::abs(cell / 3 - reply / 3), dc = std::abs(cell % 3 - reply % 3);
                  if (dr * dc == 2)
                    c.expect(contains(wins, {0, cell}), "knight reply " + std::to_string(cell) + " to " +
                                                            std::to_string(reply) + " not winning");
                }
              }
            });

  criterion("two-board start: P by oracle and quotient; center+empty is N, mirror center wins", 1.0,
            [&](Check& c) {
              Oracle o;
              const Position two = Position::empty_boards(2);
              c.expect(o.outcome(two) == Outcome::P, "oracle: two empty boards not P");
              c.expect(outcome_via_quotient(two, table) == Outcome::P, "quotient: two empty boards not P");
              const Position mirror = pos({kCenter, 0});
              c.expect(o.outcome(mirror) == Outcome::N, "oracle: center+empty not N");
              c.expect(outcome_via_quotient(mirror, table) == Outcome::N, "quotient: center+empty not N");
              c.expect(contains(o.winning_moves(mirror), {1, 4}), "mirror center not winning");
              c.expect(is_p(position_value(apply(mirror, {1, 4}), table)), "mirror center value not in P");
            });

  criterion("dictionary soundness: anchors, dead classes = 1, zero mismatches on <=3 boards", 120.0,
            [](Check& c) {
              Oracle o;
              const ValueTable t = infer_value_table(o);
              c.expect(t.at({0}) == el("c"), "empty board != c");
              c.expect(t.at({kCenter}) == el("c^2"), "center-only != c^2");
              for (CanonicalBoard cb : enumerate_canonical())
                if (cb.board().dead()) c.expect(t.at(cb) == MonoidElement::identity(), "dead class not 1");
              const auto r = verify_table(t, o, 3);
              c.expect(r.checked == 187459, "checked " + std::to_string(r.checked));
              c.expect(r.mismatches == 0, std::to_string(r.mismatches) + " mismatches");
              std::cout << "       sums checked: " << r.checked << ", mismatches: " << r.mismatches << "\n";
            });

  if (extended) {
    criterion("dictionary soundness, extended: zero mismatches on <=4 boards", 1800.0, [&](Check& c) {
      Oracle o;
      const auto r = verify_table(table, o, 4);
      c.expect(r.mismatches == 0, std::to_string(r.mismatches) + " mismatches");
      std::cout << "       sums checked: " << r.checked << ", mismatches: " << r.mismatches << "\n";
    });
  }

  criterion("mimicry fails: reachable two-board N-position where copying loses", 10.0, [](Check& c) {
    Oracle o;
    const auto failures = harness::find_mimicry_failures(o);
    c.expect(!failures.empty(), "no counterexample found");
    if (failures.empty()) return;
    // Prefer the line-completion trap: the opponent kills a board and the copy kills the other.
    const auto& f = *std::find_if(failures.begin(), failures.end(), [&](const auto& g) {
      return apply(g.before, g.opponent)[0].dead() || &g == &failures.back();
    });
    const Position after = apply(f.before, f.opponent);
    c.expect(o.outcome(after) == Outcome::N && !f.winning.empty(), "not an N-position");
    c.expect(o.outcome(apply(after, f.mimic)) == Outcome::N, "mimic move does not lose");
    std::cout << "       e.g. " << after.str() << ": copying to board 1 cell " << f.mimic.cell
              << " loses; " << f.winning.size() << " winning moves exist (" << failures.size()
              << " such positions)\n";
  });

  criterion("engine never blunders on any N-position of <=2 boards", 60.0, [&](Check& c) {
    Oracle o;
    std::size_t checked = 0;
    for (const Position& p : harness::class_multisets(2)) {
      if (o.outcome(p) != Outcome::N || p.terminal()) continue;
      const auto rec = recommend(p, table);
      ++checked;
      c.expect(rec.move && o.outcome(apply(p, *rec.move)) == Outcome::P, "blunder at " + p.str());
    }
    std::cout << "       N-positions checked: " << checked << "\n";
  });

  criterion("k empty boards, k=1..6: c^k in P iff k even; self-play winners match", 60.0, [&](Check& c) {
    const Strategy engine = engine_strategy(table);
    for (int k = 1; k <= 6; ++k) {
      const MonoidElement v = position_value(Position::empty_boards(k), table);
      c.expect(v == MonoidElement::c().pow(k), "value of " + std::to_string(k) + " boards");
      c.expect(is_p(v) == (k % 2 == 0), "parity of c^" + std::to_string(k));
      const auto tr = play_out(Position::empty_boards(k), engine, engine);
      c.expect(tr.loser == (is_p(v) ? 0 : 1), "self-play winner for k=" + std::to_string(k));
    }
  });

  criterion("fault injection: 12 random single-entry corruptions all caught by verify <=3", 120.0,
            [&](Check& c) {
              std::mt19937 rng(20260101);
              const auto& classes = enumerate_canonical();
              std::uniform_int_distribution<std::size_t> pick_class(0, classes.size() - 1);
              std::uniform_int_distribution<std::size_t> pick_elem(0, elements().size() - 1);
              for (int trial = 0; trial < 12; ++trial) {
                const CanonicalBoard cb = classes[pick_class(rng)];
                MonoidElement wrong = elements()[pick_elem(rng)];
                while (wrong == table.at(cb)) wrong = elements()[pick_elem(rng)];
                ValueTable bad = table;
                bad.set(cb, wrong);
                std::ostringstream out, err;
                const int code = cmd_verify(3, bad, shared, out, err);
                c.expect(code == kExitMismatch && out.str().find("counterexample") != std::string::npos,
                         "corruption of class " + std::to_string(cb.code) + " to " + render_element(wrong) +
                             " went unnoticed");
              }
            });

  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : std::string("ALL CRITERIA PASSED"))
            << std::endl;
  return failures ? 1 : 0;
}
