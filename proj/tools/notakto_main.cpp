#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "notakto/service.hpp"

namespace {

notakto::HttpService* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace notakto;

  CLI::App app{"Perfect play, verification, and analysis for X-only misere tic-tac-toe"};
  app.require_subcommand(1);
  std::optional<std::string> dict_flag;
  app.add_option("--dict", dict_flag, "Dictionary cache path (default: $NOTAKTO_DICT)");

  std::string position;
  auto* solve = app.add_subcommand("solve", "Outcome, quotient value and winning moves of a position");
  solve->add_option("position", position, "Boards as X./ text or comma-separated masks")->required();

  auto* best = app.add_subcommand("best", "Recommended move for a position");
  best->add_option("position", position, "Boards as X./ text or comma-separated masks")->required();

  std::string format = "json";
  std::optional<std::string> out_path;
  auto* dict = app.add_subcommand("dict", "Emit the 102-entry value dictionary");
  dict->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  dict->add_option("--out", out_path, "Output file (default stdout)");

  std::optional<std::string> table_out;
  auto* monoid = app.add_subcommand("monoid-table", "Emit the 18x18 multiplication table as CSV");
  monoid->add_option("--out", table_out, "Output file (default stdout)");

  int max_boards = 3;
  auto* verify = app.add_subcommand("verify", "Check quotient outcomes against the exhaustive oracle");
  verify->add_option("--max-boards", max_boards, "Largest sum size to check (1..4)");

  int boards = 2;
  bool human_first = false;
  auto* play = app.add_subcommand("play", "Play against the engine in the terminal");
  play->add_option("--boards", boards, "Number of boards (1..6)");
  play->add_flag("--human-first", human_first, "Human makes the first move");

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir = "webui/dist";
  auto* serve = app.add_subcommand("serve", "HTTP JSON service and web client");
  serve->add_option("--port", port, "Port to listen on");
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--static", static_dir, "Directory of web client assets");

  CLI11_PARSE(app, argc, argv);

  if (monoid->parsed()) {
    if (!table_out) {
      std::cout << multiplication_table_csv();
      return kExitOk;
    }
    std::ofstream f(*table_out);
    f << multiplication_table_csv();
    return f ? kExitOk : kExitMismatch;
  }

  // Validate bounds before paying for inference.
  if (verify->parsed() && (max_boards < 1 || max_boards > 4)) {
    std::cerr << "usage: verify --max-boards N with N in 1..4\n";
    return kExitUsage;
  }
  if (play->parsed() && (boards < 1 || boards > 6)) {
    std::cerr << "usage: play --boards K with K in 1..6\n";
    return kExitUsage;
  }

  Oracle oracle;
  ValueTable table;
  try {
    table = load_or_infer(oracle, dictionary_path(dict_flag), std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "dictionary inference failed: " << e.what() << "\n";
    return kExitMismatch;
  }

  if (solve->parsed()) return cmd_solve(position, table, std::cout, std::cerr);
  if (best->parsed()) return cmd_best(position, table, std::cout, std::cerr);
  if (dict->parsed()) return cmd_dict(table, format, out_path, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(max_boards, table, oracle, std::cout, std::cerr);
  if (play->parsed()) return cmd_play(boards, human_first, table, std::cin, std::cout);

  HttpService service(table, static_dir);
  const int bound = service.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return kExitMismatch;
  }
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on http://" << host << ":" << bound << "/\n";
  service.run();
  return kExitOk;
}
