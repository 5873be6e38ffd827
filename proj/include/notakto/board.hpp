#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace notakto {

inline constexpr int kCells = 9;
inline constexpr int kSymmetries = 8;
inline constexpr std::uint16_t kFullMask = 0x1ff;

// One 3x3 grid. Bit i set means cell i holds an X; cells are row-major,
// 0 = top-left, 4 = center, 8 = bottom-right.
class Board {
 public:
  constexpr Board() = default;
  explicit Board(std::uint16_t mask);

  constexpr std::uint16_t mask() const { return mask_; }
  int count() const;
  bool occupied(int cell) const { return (mask_ >> cell) & 1u; }
  bool dead() const;
  Board with(int cell) const;

  // 9 characters, 'X' occupied, '.' empty.
  std::string str() const;
  static Board parse(std::string_view text);

  friend constexpr bool operator==(Board, Board) = default;

 private:
  std::uint16_t mask_ = 0;
};

// Orbit representative under the dihedral group: the minimum mask.
struct CanonicalBoard {
  std::uint16_t code = 0;

  Board board() const { return Board(code); }
  friend constexpr auto operator<=>(CanonicalBoard, CanonicalBoard) = default;
};

// The 8 three-in-a-row masks: rows, columns, then the two diagonals.
const std::array<std::uint16_t, 8>& lines();

bool is_dead(Board b);
std::vector<int> legal_cells(Board b);

// t: 0 identity, 1..3 rotations by 90/180/270 degrees clockwise,
// 4 horizontal flip, 5 vertical flip, 6 main diagonal, 7 anti-diagonal.
Board transform(Board b, int t);
int transform_cell(int cell, int t);

CanonicalBoard canonicalize(Board b);

// All 102 orbit representatives, ascending.
const std::vector<CanonicalBoard>& enumerate_canonical();

}  // namespace notakto
