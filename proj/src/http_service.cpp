#include <filesystem>

#include <httplib.h>

#include "notakto/service.hpp"

namespace notakto {

namespace {

constexpr const char* kPlaceholderPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>Notakto</title></head>
<body><h1>Notakto analysis service</h1>
<p>The web client is not installed. JSON endpoints: GET /api/health,
POST /api/analyze, POST /api/bestmove.</p></body></html>
)";

void send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

struct HttpService::Impl {
  const ValueTable& table;
  httplib::Server server;

  Impl(const ValueTable& t, const std::string& static_dir) : table(t) {
    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
      send(res, api_health());
    });
    server.Post("/api/analyze", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, api_analyze(req.body, table));
    });
    server.Post("/api/bestmove", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, api_bestmove(req.body, table));
    });
    const bool have_static = !static_dir.empty() && std::filesystem::is_directory(static_dir) &&
                             server.set_mount_point("/", static_dir);
    if (!have_static) {
      server.Get("/", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(kPlaceholderPage, "text/html");
      });
    }
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.status == 404) send(res, {404, {{"error", "not found"}}});
    });
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string what = "internal error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        what = e.what();
      } catch (...) {
      }
      send(res, {500, {{"error", what}}});
    });
  }
};

HttpService::HttpService(const ValueTable& t, std::string static_dir)
    : impl_(std::make_unique<Impl>(t, static_dir)) {}

HttpService::~HttpService() = default;

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::run() { return impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace notakto
