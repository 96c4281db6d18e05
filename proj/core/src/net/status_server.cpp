#include "atsu/net/status_server.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <httplib.h>

#include "atsu/monitor/json.hpp"

namespace atsu::net {

using nlohmann::json;

struct IngestLoop::Impl {
  std::atomic<bool> running{false};
  std::thread worker;
};

IngestLoop::IngestLoop(service::AtsuService& svc, UdpReceiver receiver, const Clock& clock, Millis tick_period)
    : svc_(svc), receiver_(std::move(receiver)), clock_(clock), tick_period_(tick_period),
      impl_(std::make_unique<Impl>()) {}

IngestLoop::~IngestLoop() { stop(); }

void IngestLoop::start() {
  if (impl_->running.exchange(true)) return;
  impl_->worker = std::thread([this] {
    auto next_tick = clock_.now() + tick_period_;
    while (impl_->running.load()) {
      auto wait = std::chrono::duration_cast<Millis>(next_tick - clock_.now());
      wait = std::clamp(wait, Millis{0}, Millis{100});
      if (auto datagram = receiver_.receive(wait)) svc_.ingest(*datagram, clock_.now());
      const auto now = clock_.now();
      if (now >= next_tick) {
        svc_.tick(now);
        next_tick += tick_period_;
        if (next_tick <= now) next_tick = now + tick_period_;
      }
    }
  });
}

void IngestLoop::stop() {
  if (!impl_ || !impl_->running.exchange(false)) return;
  if (impl_->worker.joinable()) impl_->worker.join();
}

struct StatusServer::Impl {
  const service::AtsuService& svc;
  const Clock& clock;
  httplib::Server http;
  std::thread worker;
  std::atomic<bool> stopping{false};

  Impl(const service::AtsuService& s, const Clock& c) : svc(s), clock(c) {}

  void routes();
  void catalog_entry(monitor::CatalogKind kind, const httplib::Request& req, httplib::Response& res) const;
};

namespace {

void send_json(httplib::Response& res, const json& j, int status = 200) {
  res.status = status;
  res.set_content(j.dump(), "application/json");
}

}  // namespace

void StatusServer::Impl::catalog_entry(monitor::CatalogKind kind, const httplib::Request& req,
                                       httplib::Response& res) const {
  int id = 0;
  try {
    id = std::stoi(req.matches[1].str());
  } catch (const std::exception&) {
    id = -1;
  }
  const auto* e = svc.catalog().find(kind, id);
  if (!e) {
    send_json(res, {{"error", "UnknownId"}, {"id", req.matches[1].str()}}, 404);
    return;
  }
  send_json(res, {{"id", e->id}, {"code", e->code}, {"description", e->description}});
}

void StatusServer::Impl::routes() {
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"}, {"Cache-Control", "no-store"}});

  http.Get("/api/status", [this](const httplib::Request&, httplib::Response& res) {
    send_json(res, svc.serve_status(clock.now()));
  });
  http.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) {
    send_json(res, svc.health(clock.now()));
  });
  http.Get("/api/alerts", [this](const httplib::Request&, httplib::Response& res) {
    send_json(res, monitor::to_json(svc.catalog(), monitor::CatalogKind::Alert));
  });
  http.Get("/api/alarms", [this](const httplib::Request&, httplib::Response& res) {
    send_json(res, monitor::to_json(svc.catalog(), monitor::CatalogKind::Alarm));
  });
  http.Get(R"(/api/alerts/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    catalog_entry(monitor::CatalogKind::Alert, req, res);
  });
  http.Get(R"(/api/alarms/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    catalog_entry(monitor::CatalogKind::Alarm, req, res);
  });

  // Server-sent events: current snapshot immediately, then on every
  // publication and at least once per second.
  http.Get("/api/stream", [this](const httplib::Request&, httplib::Response& res) {
    auto seen = std::make_shared<std::uint64_t>(0);
    res.set_header("X-Accel-Buffering", "no");
    res.set_chunked_content_provider("text/event-stream", [this, seen](std::size_t, httplib::DataSink& sink) {
      if (stopping.load()) return false;
      if (*seen != 0) *seen = svc.wait_for_update(*seen, std::chrono::seconds{1});
      else *seen = svc.snapshot()->generation;
      if (stopping.load()) return false;
      auto body = svc.serve_status(clock.now()).dump();
      std::string event = "id: " + std::to_string(*seen) + "\nevent: status\ndata: " + body + "\n\n";
      return sink.write(event.data(), event.size());
    });
  });
}

StatusServer::StatusServer(const service::AtsuService& svc, const Clock& clock)
    : impl_(std::make_unique<Impl>(svc, clock)) {
  impl_->http.new_task_queue = [] { return new httplib::ThreadPool(32); };
  impl_->routes();
}

StatusServer::~StatusServer() { stop(); }

std::uint16_t StatusServer::start(const Endpoint& bind) {
  auto& http = impl_->http;
  int port = bind.port == 0 ? http.bind_to_any_port(bind.host)
                            : (http.bind_to_port(bind.host, bind.port) ? bind.port : -1);
  if (port < 0) throw NetError("cannot bind HTTP server to " + bind.str());
  impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
  return static_cast<std::uint16_t>(port);
}

void StatusServer::stop() {
  if (!impl_) return;
  impl_->stopping = true;
  impl_->http.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace atsu::net
