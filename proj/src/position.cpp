#include "notakto/position.hpp"

#include <algorithm>
#include <charconv>

namespace notakto {

Position Position::empty_boards(int count) {
  return Position(std::vector<Board>(static_cast<std::size_t>(count)));
}

bool Position::terminal() const {
  return std::all_of(boards_.begin(), boards_.end(), [](Board b) { return b.dead(); });
}

bool Position::is_legal(const Move& m) const {
  if (m.board_index < 0 || m.board_index >= static_cast<int>(boards_.size())) return false;
  if (m.cell < 0 || m.cell >= kCells) return false;
  const Board b = boards_[m.board_index];
  return !b.dead() && !b.occupied(m.cell);
}

std::vector<Move> Position::legal_moves() const {
  std::vector<Move> moves;
  for (int i = 0; i < static_cast<int>(boards_.size()); ++i)
    for (int cell : legal_cells(boards_[i])) moves.push_back({i, cell});
  return moves;
}

std::vector<std::uint16_t> Position::key() const {
  std::vector<std::uint16_t> codes;
  for (Board b : boards_)
    if (!b.dead()) codes.push_back(canonicalize(b).code);
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::string Position::str() const {
  std::string out;
  for (std::size_t i = 0; i < boards_.size(); ++i) {
    if (i) out += '/';
    out += boards_[i].str();
  }
  return out;
}

std::string Position::masks_str() const {
  std::string out;
  for (std::size_t i = 0; i < boards_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(boards_[i].mask());
  }
  return out;
}

Position apply(const Position& p, const Move& m) {
  if (m.board_index < 0 || m.board_index >= static_cast<int>(p.size()))
    throw IllegalMove("board index " + std::to_string(m.board_index) + " out of range");
  if (m.cell < 0 || m.cell >= kCells)
    throw IllegalMove("cell " + std::to_string(m.cell) + " out of range");
  const Board b = p[m.board_index];
  if (b.dead()) throw IllegalMove("board " + std::to_string(m.board_index) + " is dead");
  if (b.occupied(m.cell))
    throw IllegalMove("cell " + std::to_string(m.cell) + " on board " +
                      std::to_string(m.board_index) + " is occupied");
  std::vector<Board> boards = p.boards();
  boards[m.board_index] = b.with(m.cell);
  return Position(std::move(boards));
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

}  // namespace

Position parse_position(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty position");
  const bool numeric = std::all_of(text.begin(), text.end(), [](char ch) {
    return (ch >= '0' && ch <= '9') || ch == ',';
  });
  std::vector<Board> boards;
  if (numeric) {
    int index = 0;
    for (std::string_view part : split(text, ',')) {
      unsigned mask = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), mask);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
        throw std::invalid_argument("board " + std::to_string(index) + ": bad mask \"" +
                                    std::string(part) + "\"");
      if (mask > kFullMask)
        throw std::invalid_argument("board " + std::to_string(index) + ": mask " +
                                    std::to_string(mask) + " exceeds 511");
      boards.emplace_back(static_cast<std::uint16_t>(mask));
      ++index;
    }
  } else {
    int index = 0;
    for (std::string_view part : split(text, '/')) {
      try {
        boards.push_back(Board::parse(part));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("board " + std::to_string(index) + ": " + e.what());
      }
      ++index;
    }
  }
  return Position(std::move(boards));
}

}  // namespace notakto
