#include <cinttypes>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "notakto/quotient.hpp"

namespace notakto {

namespace {

// FNV-1a, 64-bit.
std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string table_checksum(const ValueTable& t) {
  std::string canonical;
  for (CanonicalBoard cb : enumerate_canonical()) {
    canonical += std::to_string(cb.code) + ':' + render_element(t.at(cb)) + ':' +
                 (cb.board().dead() ? '1' : '0') + ';';
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, fnv1a(canonical));
  return buf;
}

std::string to_json(const ValueTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (CanonicalBoard cb : enumerate_canonical()) {
    entries.push_back({{"code", cb.code},
                       {"board", cb.board().str()},
                       {"value", render_element(t.at(cb))},
                       {"dead", cb.board().dead()}});
  }
  nlohmann::json doc = {{"checksum", table_checksum(t)}, {"entries", entries}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const ValueTable& t) {
  std::ostringstream out;
  out << "code,board,value,dead\n";
  for (CanonicalBoard cb : enumerate_canonical()) {
    out << cb.code << ',' << cb.board().str() << ',' << render_element(t.at(cb)) << ','
        << (cb.board().dead() ? "true" : "false") << '\n';
  }
  return out.str();
}

ValueTable table_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("dictionary is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array() ||
      !doc.contains("checksum") || !doc["checksum"].is_string())
    throw std::runtime_error("dictionary must be an object with \"checksum\" and \"entries\"");

  ValueTable t;
  try {
    for (const auto& entry : doc["entries"]) {
      const int code = entry.at("code").get<int>();
      if (code < 0 || code > kFullMask) throw std::runtime_error("code out of range");
      const Board board = Board::parse(entry.at("board").get<std::string>());
      if (board.mask() != code) throw std::runtime_error("board does not match code " + std::to_string(code));
      if (entry.at("dead").get<bool>() != board.dead())
        throw std::runtime_error("wrong dead flag for code " + std::to_string(code));
      t.set({static_cast<std::uint16_t>(code)}, parse_element(entry.at("value").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed dictionary entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed dictionary entry: ") + e.what());
  }
  if (!t.complete()) throw std::runtime_error("dictionary does not cover all 102 classes");
  if (table_checksum(t) != doc["checksum"].get<std::string>())
    throw std::runtime_error("dictionary checksum mismatch");
  return t;
}

}  // namespace notakto
