#include "notakto/service.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "notakto/engine.hpp"

namespace notakto {

namespace {

std::string format_move(const Move& m) {
  return "(" + std::to_string(m.board_index) + "," + std::to_string(m.cell) + ")";
}

std::string format_moves(const std::vector<Move>& moves) {
  if (moves.empty()) return "none";
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out += ' ';
    out += format_move(m);
  }
  return out;
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << contents;
  return static_cast<bool>(f);
}

}  // namespace

std::optional<std::string> dictionary_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return flag;
  if (const char* env = std::getenv("NOTAKTO_DICT"); env && *env) return std::string(env);
  return std::nullopt;
}

ValueTable load_or_infer(Oracle& oracle, const std::optional<std::string>& cache_path,
                         std::ostream& log) {
  if (cache_path && std::filesystem::exists(*cache_path)) {
    std::ifstream f(*cache_path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    try {
      return table_from_json(buf.str());
    } catch (const std::exception& e) {
      log << "dictionary cache " << *cache_path << " rejected (" << e.what() << "); regenerating\n";
    }
  }
  ValueTable t = infer_value_table(oracle);
  if (cache_path && !write_file(*cache_path, to_json(t)))
    log << "could not write dictionary cache " << *cache_path << "\n";
  return t;
}

int cmd_solve(std::string_view text, const ValueTable& t, std::ostream& out, std::ostream& err) {
  Position p;
  try {
    p = parse_position(text);
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  const MonoidElement value = position_value(p, t);
  out << "position: " << p.str() << "\n"
      << "outcome: " << to_string(is_p(value) ? Outcome::P : Outcome::N) << "\n"
      << "value: " << render_element(value) << "\n"
      << "winning_moves: " << format_moves(quotient_winning_moves(p, t)) << "\n";
  return kExitOk;
}

int cmd_best(std::string_view text, const ValueTable& t, std::ostream& out, std::ostream& err) {
  Position p;
  try {
    p = parse_position(text);
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (p.terminal()) {
    err << "position is terminal: no legal moves\n";
    return kExitTerminal;
  }
  const Recommendation rec = recommend(p, t);
  const MonoidElement after = position_value(apply(p, *rec.move), t);
  out << "move: board " << rec.move->board_index << " cell " << rec.move->cell << "\n"
      << "outcome_now: " << to_string(rec.outcome_now) << "\n"
      << "value_now: " << render_element(rec.value_now) << "\n"
      << "value_after: " << render_element(after) << "\n"
      << "rationale: " << rec.rationale << "\n";
  return kExitOk;
}

int cmd_dict(const ValueTable& t, std::string_view format, const std::optional<std::string>& out_path,
             std::ostream& out, std::ostream& err) {
  std::string doc;
  if (format == "json") {
    doc = to_json(t);
  } else if (format == "csv") {
    doc = to_csv(t);
  } else {
    err << "unknown format \"" << format << "\" (expected json or csv)\n";
    return kExitUsage;
  }
  if (out_path) {
    if (!write_file(*out_path, doc)) {
      err << "cannot write " << *out_path << "\n";
      return kExitMismatch;
    }
  } else {
    out << doc;
  }
  return kExitOk;
}

int cmd_verify(int max_boards, const ValueTable& t, Oracle& oracle, std::ostream& out,
               std::ostream& err) {
  if (max_boards < 1 || max_boards > 4) {
    err << "usage: verify --max-boards N with N in 1..4\n";
    return kExitUsage;
  }
  const VerifyReport r = verify_table(t, oracle, max_boards);
  out << "checked: " << r.checked << "\n"
      << "mismatches: " << r.mismatches << "\n"
      << "seconds: " << r.seconds << "\n";
  if (!r.ok()) {
    std::vector<Board> boards;
    for (std::uint16_t code : *r.first_mismatch) boards.emplace_back(code);
    out << "counterexample: " << Position(boards).str() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

std::string render_boards(const Position& p) {
  std::ostringstream out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    out << (b ? "   " : "") << "board " << b << (p[b].dead() ? "*" : " ");
  }
  out << "\n";
  for (int row = 0; row < 3; ++row) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      out << (b ? "   " : "");
      for (int col = 0; col < 3; ++col) {
        const int cell = row * 3 + col;
        out << (p[b].occupied(cell) ? 'X' : static_cast<char>('0' + cell)) << (col < 2 ? " " : "");
      }
      out << "   ";
    }
    out << "\n";
  }
  return out.str();
}

int cmd_play(int boards, bool human_first, const ValueTable& t, std::istream& in, std::ostream& out) {
  if (boards < 1 || boards > 6) {
    out << "boards must be between 1 and 6\n";
    return kExitUsage;
  }
  Position p = Position::empty_boards(boards);
  bool human_turn = human_first;
  bool human_moved_last = false;
  out << "Notakto: " << boards << " board(s). Completing the last line on the last live board loses.\n"
      << "Dead boards are marked with *. Enter moves as \"board cell\".\n";
  while (!p.terminal()) {
    if (human_turn) {
      out << render_boards(p) << "your move (board cell): " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\ninput closed; game abandoned\n";
        return kExitMismatch;
      }
      std::istringstream fields(line);
      Move m{-1, -1};
      std::string extra;
      if (!(fields >> m.board_index >> m.cell) || (fields >> extra) || !p.is_legal(m)) {
        out << "illegal move \"" << line << "\"; try again\n";
        continue;
      }
      p = apply(p, m);
      human_moved_last = true;
    } else {
      const Recommendation rec = recommend(p, t);
      out << "engine plays board " << rec.move->board_index << " cell " << rec.move->cell << "\n";
      p = apply(p, *rec.move);
      human_moved_last = false;
    }
    human_turn = !human_turn;
  }
  out << render_boards(p) << (human_moved_last ? "You lose." : "Engine loses.") << "\n";
  return kExitOk;
}

namespace {

ApiResponse bad_request(const std::string& message) { return {400, {{"error", message}}}; }

// Parses {"boards":[mask,...]}; returns an error response on failure.
std::variant<Position, ApiResponse> parse_request(const std::string& body) {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded()) return bad_request("malformed JSON");
  if (!doc.is_object() || !doc.contains("boards") || !doc["boards"].is_array())
    return bad_request("expected {\"boards\": [mask, ...]}");
  const auto& arr = doc["boards"];
  if (arr.empty()) return bad_request("board list is empty");
  std::vector<Board> boards;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number_integer()) return bad_request("board " + std::to_string(i) + ": mask must be an integer");
    const auto mask = arr[i].get<long long>();
    if (mask < 0 || mask > kFullMask)
      return bad_request("board " + std::to_string(i) + ": mask " + std::to_string(mask) + " out of range 0..511");
    boards.emplace_back(static_cast<std::uint16_t>(mask));
  }
  return Position(std::move(boards));
}

nlohmann::json move_json(const Move& m) { return {{"board", m.board_index}, {"cell", m.cell}}; }

}  // namespace

ApiResponse api_health() { return {200, {{"ok", true}}}; }

ApiResponse api_analyze(const std::string& request_body, const ValueTable& t) {
  auto parsed = parse_request(request_body);
  if (auto* err = std::get_if<ApiResponse>(&parsed)) return *err;
  const Position& p = std::get<Position>(parsed);
  const MonoidElement value = position_value(p, t);
  nlohmann::json wins = nlohmann::json::array();
  for (const Move& m : quotient_winning_moves(p, t)) wins.push_back(move_json(m));
  return {200,
          {{"outcome", to_string(is_p(value) ? Outcome::P : Outcome::N)},
           {"value", render_element(value)},
           {"winning_moves", wins}}};
}

ApiResponse api_bestmove(const std::string& request_body, const ValueTable& t) {
  auto parsed = parse_request(request_body);
  if (auto* err = std::get_if<ApiResponse>(&parsed)) return *err;
  const Recommendation rec = recommend(std::get<Position>(parsed), t);
  return {200,
          {{"move", rec.move ? move_json(*rec.move) : nlohmann::json(nullptr)},
           {"outcome", to_string(rec.outcome_now)}}};
}

}  // namespace notakto
