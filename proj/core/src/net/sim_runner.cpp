#include "atsu/net/sim_runner.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "atsu/csm/codec.hpp"

namespace atsu::net {

using nlohmann::json;

struct SimRunner::Impl {
  sim::Simulator simulator;
  UdpSender sender;
  const Clock& clock;

  std::mutex mu;
  std::condition_variable cv;
  std::deque<sim::ControlCommand> commands;
  json state;
  std::uint64_t frames = 0;
  bool running = false;
  std::thread worker;

  Impl(sim::Simulator s, UdpSender tx, const Clock& c) : simulator(std::move(s)), sender(std::move(tx)), clock(c) {
    state = simulator.state_json(clock.now());
  }

  void loop();
};

void SimRunner::Impl::loop() {
  std::unique_lock lock(mu);
  while (running) {
    while (!commands.empty()) {
      simulator.control(commands.front(), clock.now());
      commands.pop_front();
    }
    const auto now = clock.now();
    auto frame = simulator.step(now);
    state = simulator.state_json(now);
    if (frame) {
      ++frames;
      const auto bytes = csm::encode(*frame);
      lock.unlock();
      sender.send(bytes);
      lock.lock();
    }
    cv.wait_for(lock, std::chrono::milliseconds{10}, [this] { return !running || !commands.empty(); });
  }
}

SimRunner::SimRunner(sim::Simulator simulator, UdpSender sender, const Clock& clock)
    : impl_(std::make_unique<Impl>(std::move(simulator), std::move(sender), clock)) {}

SimRunner::~SimRunner() { stop(); }

void SimRunner::start() {
  std::lock_guard lock(impl_->mu);
  if (impl_->running) return;
  impl_->running = true;
  impl_->worker = std::thread([this] { impl_->loop(); });
}

void SimRunner::stop() {
  if (!impl_) return;
  {
    std::lock_guard lock(impl_->mu);
    impl_->running = false;
  }
  impl_->cv.notify_all();
  if (impl_->worker.joinable()) impl_->worker.join();
}

void SimRunner::post(sim::ControlCommand command) {
  {
    std::lock_guard lock(impl_->mu);
    impl_->commands.push_back(command);
  }
  impl_->cv.notify_all();
}

json SimRunner::state() const {
  std::lock_guard lock(impl_->mu);
  return impl_->state;
}

std::uint64_t SimRunner::frames_sent() const {
  std::lock_guard lock(impl_->mu);
  return impl_->frames;
}

struct ControlServer::Impl {
  SimRunner& runner;
  httplib::Server http;
  std::thread worker;
  explicit Impl(SimRunner& r) : runner(r) {}
};

ControlServer::ControlServer(SimRunner& runner) : impl_(std::make_unique<Impl>(runner)) {
  auto& http = impl_->http;
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  http.Options(R"(/control/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  http.Post(R"(/control/([a-z]+))", [this](const httplib::Request& req, httplib::Response& res) {
    auto cmd = sim::parse_command(req.matches[1].str());
    if (!cmd) {
      res.status = 404;
      res.set_content(json{{"error", "unknown command"}, {"command", req.matches[1].str()}}.dump(),
                      "application/json");
      return;
    }
    impl_->runner.post(*cmd);
    res.set_content(json{{"accepted", sim::to_string(*cmd)}}.dump(), "application/json");
  });
  http.Get("/control/state", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(impl_->runner.state().dump(), "application/json");
  });
}

ControlServer::~ControlServer() { stop(); }

std::uint16_t ControlServer::start(const Endpoint& bind) {
  auto& http = impl_->http;
  int port = bind.port == 0 ? http.bind_to_any_port(bind.host) : (http.bind_to_port(bind.host, bind.port) ? bind.port : -1);
  if (port < 0) throw NetError("cannot bind control server to " + bind.str());
  impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
  http.wait_until_ready();
  return static_cast<std::uint16_t>(port);
}

void ControlServer::stop() {
  if (!impl_) return;
  impl_->http.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

std::string post_control(const Endpoint& target, sim::ControlCommand command) {
  httplib::Client cli(target.host, target.port);
  cli.set_connection_timeout(std::chrono::seconds{2});
  auto res = cli.Post("/control/" + std::string(sim::to_string(command)));
  if (!res) throw NetError("control request to " + target.str() + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw NetError("control request rejected with HTTP " + std::to_string(res->status));
  return res->body;
}

}  // namespace atsu::net
