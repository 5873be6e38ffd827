#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "notakto/oracle.hpp"
#include "notakto/quotient.hpp"

namespace notakto {

// Exit codes shared by the command functions.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTerminal = 3;

// Cache path from an explicit flag, else the NOTAKTO_DICT environment variable.
std::optional<std::string> dictionary_path(const std::optional<std::string>& flag);

// Loads the cached dictionary at `cache_path` when it exists and validates;
// otherwise infers a fresh table and (if a path was given) writes it there.
ValueTable load_or_infer(Oracle& oracle, const std::optional<std::string>& cache_path,
                         std::ostream& log);

int cmd_solve(std::string_view position, const ValueTable& t, std::ostream& out, std::ostream& err);
int cmd_best(std::string_view position, const ValueTable& t, std::ostream& out, std::ostream& err);
// format is "json" or "csv"; writes to out_path when given, else to `out`.
int cmd_dict(const ValueTable& t, std::string_view format, const std::optional<std::string>& out_path,
             std::ostream& out, std::ostream& err);
int cmd_verify(int max_boards, const ValueTable& t, Oracle& oracle, std::ostream& out,
               std::ostream& err);
// Text-mode game; the human enters "board cell" (both 0-based).
int cmd_play(int boards, bool human_first, const ValueTable& t, std::istream& in, std::ostream& out);

std::string render_boards(const Position& p);

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

ApiResponse api_health();
ApiResponse api_analyze(const std::string& request_body, const ValueTable& t);
ApiResponse api_bestmove(const std::string& request_body, const ValueTable& t);

// Stateless JSON service over the handlers above. Static files come from
// `static_dir` when it exists; otherwise "/" serves a placeholder page.
class HttpService {
 public:
  HttpService(const ValueTable& t, std::string static_dir);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Returns the bound port (an ephemeral one when port == 0), or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace notakto
