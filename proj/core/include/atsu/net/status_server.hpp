#pragma once

#include <cstdint>
#include <memory>

#include "atsu/clock.hpp"
#include "atsu/net/udp.hpp"
#include "atsu/service/atsu_service.hpp"

namespace atsu::net {

// Ingest loop: the single writer for an AtsuService. Receives datagrams and
// ticks the service once per `tick_period`.
class IngestLoop {
 public:
  IngestLoop(service::AtsuService& svc, UdpReceiver receiver, const Clock& clock,
             Millis tick_period = std::chrono::seconds{1});
  ~IngestLoop();

  void start();
  void stop();
  std::uint16_t port() const { return receiver_.port(); }

 private:
  struct Impl;
  service::AtsuService& svc_;
  UdpReceiver receiver_;
  const Clock& clock_;
  Millis tick_period_;
  std::unique_ptr<Impl> impl_;
};

// HTTP API for the ATSU:
//   GET /api/status, /api/health, /api/alerts, /api/alarms,
//   /api/alerts/{id}, /api/alarms/{id}, /api/stream (text/event-stream)
class StatusServer {
 public:
  StatusServer(const service::AtsuService& svc, const Clock& clock);
  ~StatusServer();

  // Binds (port 0 picks a free port) and serves on a background thread.
  std::uint16_t start(const Endpoint& bind);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace atsu::net
