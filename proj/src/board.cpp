#include "notakto/board.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace notakto {

namespace {

constexpr std::array<std::uint16_t, 8> kLines = {
    0b000000111, 0b000111000, 0b111000000,  // rows
    0b001001001, 0b010010010, 0b100100100,  // columns
    0b100010001, 0b001010100,               // diagonals
};

// Cell permutation for each symmetry, derived from (row, col) maps.
constexpr std::array<std::array<std::uint8_t, kCells>, kSymmetries> make_permutations() {
  std::array<std::array<std::uint8_t, kCells>, kSymmetries> perms{};
  for (int t = 0; t < kSymmetries; ++t) {
    for (int cell = 0; cell < kCells; ++cell) {
      const int r = cell / 3, c = cell % 3;
      int nr = r, nc = c;
      switch (t) {
        case 0: nr = r;     nc = c;     break;
        case 1: nr = c;     nc = 2 - r; break;
        case 2: nr = 2 - r; nc = 2 - c; break;
        case 3: nr = 2 - c; nc = r;     break;
        case 4: nr = r;     nc = 2 - c; break;
        case 5: nr = 2 - r; nc = c;     break;
        case 6: nr = c;     nc = r;     break;
        case 7: nr = 2 - c; nc = 2 - r; break;
      }
      perms[t][cell] = static_cast<std::uint8_t>(nr * 3 + nc);
    }
  }
  return perms;
}

constexpr auto kPermutations = make_permutations();

struct Tables {
  std::array<std::array<std::uint16_t, 512>, kSymmetries> transformed{};
  std::array<std::uint16_t, 512> canonical{};
  std::array<bool, 512> dead{};
  std::vector<CanonicalBoard> classes;

  Tables() {
    for (unsigned m = 0; m < 512; ++m) {
      for (int t = 0; t < kSymmetries; ++t) {
        unsigned out = 0;
        for (int cell = 0; cell < kCells; ++cell)
          if ((m >> cell) & 1u) out |= 1u << kPermutations[t][cell];
        transformed[t][m] = static_cast<std::uint16_t>(out);
      }
      std::uint16_t best = static_cast<std::uint16_t>(m);
      for (int t = 1; t < kSymmetries; ++t) best = std::min(best, transformed[t][m]);
      canonical[m] = best;
      dead[m] = std::any_of(kLines.begin(), kLines.end(),
                            [m](std::uint16_t line) { return (m & line) == line; });
      if (best == m) classes.push_back({static_cast<std::uint16_t>(m)});
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

Board::Board(std::uint16_t mask) : mask_(mask) {
  if (mask > kFullMask) throw std::out_of_range("board mask out of range: " + std::to_string(mask));
}

int Board::count() const { return std::popcount(mask_); }

bool Board::dead() const { return tables().dead[mask_]; }

Board Board::with(int cell) const {
  if (cell < 0 || cell >= kCells) throw std::out_of_range("cell out of range: " + std::to_string(cell));
  return Board(static_cast<std::uint16_t>(mask_ | (1u << cell)));
}

std::string Board::str() const {
  std::string s(kCells, '.');
  for (int cell = 0; cell < kCells; ++cell)
    if (occupied(cell)) s[cell] = 'X';
  return s;
}

Board Board::parse(std::string_view text) {
  if (text.size() != kCells)
    throw std::invalid_argument("board must be 9 characters, got " + std::to_string(text.size()) +
                                ": \"" + std::string(text) + "\"");
  std::uint16_t mask = 0;
  for (int cell = 0; cell < kCells; ++cell) {
    const char ch = text[cell];
    if (ch == 'X' || ch == 'x')
      mask |= static_cast<std::uint16_t>(1u << cell);
    else if (ch != '.')
      throw std::invalid_argument("bad character '" + std::string(1, ch) + "' at cell " +
                                  std::to_string(cell) + " of board \"" + std::string(text) + "\"");
  }
  return Board(mask);
}

const std::array<std::uint16_t, 8>& lines() { return kLines; }

bool is_dead(Board b) { return b.dead(); }

std::vector<int> legal_cells(Board b) {
  std::vector<int> cells;
  if (b.dead()) return cells;
  for (int cell = 0; cell < kCells; ++cell)
    if (!b.occupied(cell)) cells.push_back(cell);
  return cells;
}

Board transform(Board b, int t) {
  if (t < 0 || t >= kSymmetries) throw std::out_of_range("symmetry index out of range");
  return Board(tables().transformed[t][b.mask()]);
}

int transform_cell(int cell, int t) {
  if (t < 0 || t >= kSymmetries) throw std::out_of_range("symmetry index out of range");
  return kPermutations[t][cell];
}

CanonicalBoard canonicalize(Board b) { return {tables().canonical[b.mask()]}; }

const std::vector<CanonicalBoard>& enumerate_canonical() { return tables().classes; }

}  // namespace notakto
