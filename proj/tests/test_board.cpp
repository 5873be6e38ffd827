#include <doctest.h>

#include <bit>
#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "notakto/board.hpp"

using namespace notakto;

namespace {

std::uint16_t bits(std::initializer_list<int> cells) {
  std::uint16_t m = 0;
  for (int c : cells) m |= static_cast<std::uint16_t>(1u << c);
  return m;
}

// Orbit count by union-find over an independently written set of
// coordinate maps (rotate 90 clockwise and mirror left-right generate D4).
int count_orbits_directly() {
  auto rotate = [](unsigned m) {
    unsigned out = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (m & (1u << (r * 3 + c))) out |= 1u << (c * 3 + (2 - r));
    return out;
  };
  auto mirror = [](unsigned m) {
    unsigned out = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (m & (1u << (r * 3 + c))) out |= 1u << (r * 3 + (2 - c));
    return out;
  };
  std::vector<unsigned> parent(512);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned m = 0; m < 512; ++m) {
    parent[find(m)] = find(rotate(m));
    parent[find(m)] = find(mirror(m));
  }
  std::set<unsigned> roots;
  for (unsigned m = 0; m < 512; ++m) roots.insert(find(m));
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("line masks") {
  const auto& ls = lines();
  CHECK(ls.size() == 8);
  CHECK(ls[0] == 0b000000111);
  CHECK(std::find(ls.begin(), ls.end(), bits({0, 4, 8})) != ls.end());
  for (auto line : ls) CHECK(std::popcount(line) == 3);
}

TEST_CASE("dead boards") {
  CHECK_FALSE(is_dead(Board(0)));
  CHECK(is_dead(Board(bits({0, 1, 2}))));
  CHECK_FALSE(is_dead(Board(bits({0, 1, 3, 4}))));
  // Any seven cells contain a line.
  for (unsigned m = 0; m < 512; ++m)
    if (std::popcount(m) >= 7) CHECK(is_dead(Board(static_cast<std::uint16_t>(m))));
}

TEST_CASE("legal cells") {
  CHECK(legal_cells(Board(0)).size() == 9);
  CHECK(legal_cells(Board(bits({0, 1, 2}))).empty());
  const auto around_center = legal_cells(Board(bits({4})));
  CHECK(around_center == std::vector<int>{0, 1, 2, 3, 5, 6, 7, 8});
  for (unsigned m = 0; m < 512; ++m) {
    const Board b(static_cast<std::uint16_t>(m));
    if (!b.dead()) CHECK(static_cast<int>(legal_cells(b).size()) == 9 - b.count());
  }
}

TEST_CASE("transforms form the dihedral group") {
  for (int t = 0; t < kSymmetries; ++t) {
    CHECK(transform(Board(0), t).mask() == 0);
    CHECK(transform(Board(bits({4})), t).mask() == bits({4}));
    std::set<std::uint16_t> image;
    for (unsigned m = 0; m < 512; ++m) {
      const Board b(static_cast<std::uint16_t>(m));
      const Board tb = transform(b, t);
      image.insert(tb.mask());
      CHECK(tb.dead() == b.dead());
      CHECK(tb.count() == b.count());
    }
    CHECK(image.size() == 512);
  }
  for (unsigned m = 0; m < 512; ++m)
    CHECK(transform(Board(static_cast<std::uint16_t>(m)), 0).mask() == m);

  // Closure: every composition is again one of the eight.
  for (int s = 0; s < kSymmetries; ++s)
    for (int t = 0; t < kSymmetries; ++t) {
      bool found = false;
      for (int u = 0; u < kSymmetries && !found; ++u) {
        bool same = true;
        for (int cell = 0; cell < kCells; ++cell)
          same = same && transform_cell(transform_cell(cell, s), t) == transform_cell(cell, u);
        found = same;
      }
      CHECK(found);
    }

  const std::set<int> corners = {0, 2, 6, 8};
  CHECK(corners.count(transform_cell(0, 1)) == 1);
  CHECK(transform_cell(0, 1) == 2);  // clockwise quarter turn
}

TEST_CASE("canonicalization") {
  CHECK(canonicalize(Board(0)).code == 0);
  CHECK(canonicalize(Board(kFullMask)).code == kFullMask);
  for (int corner : {0, 2, 6, 8}) CHECK(canonicalize(Board(bits({corner}))).code == 1);
  for (unsigned m = 0; m < 512; ++m) {
    const Board b(static_cast<std::uint16_t>(m));
    const CanonicalBoard cb = canonicalize(b);
    CHECK(cb.code <= m);
    CHECK(canonicalize(cb.board()) == cb);
    for (int t = 0; t < kSymmetries; ++t) CHECK(canonicalize(transform(b, t)) == cb);
  }
}

TEST_CASE("102 canonical classes") {
  const auto& classes = enumerate_canonical();
  CHECK(classes.size() == 102);
  CHECK(std::is_sorted(classes.begin(), classes.end()));
  CHECK(classes.front().code == 0);
  CHECK(classes.back().code == kFullMask);
  // Burnside over D4: fixed points 512 (identity), 8 + 8 (quarter turns),
  // 32 (half turn), 64 for each of the four reflections.
  CHECK((512 + 8 + 32 + 8 + 64 * 4) / 8 == 102);
  CHECK(count_orbits_directly() == 102);
  std::set<std::uint16_t> codes;
  for (unsigned m = 0; m < 512; ++m) codes.insert(canonicalize(Board(static_cast<std::uint16_t>(m))).code);
  CHECK(codes.size() == 102);
}

TEST_CASE("board text format") {
  CHECK(Board::parse("....X....").mask() == bits({4}));
  CHECK(Board(bits({0, 1, 2})).str() == "XXX......");
  for (unsigned m = 0; m < 512; ++m) {
    const Board b(static_cast<std::uint16_t>(m));
    CHECK(Board::parse(b.str()) == b);
  }
  CHECK_THROWS_AS(Board::parse("...."), std::invalid_argument);
  CHECK_THROWS_AS(Board::parse("...O....."), std::invalid_argument);
  CHECK_THROWS_AS(Board(512), std::out_of_range);
}
