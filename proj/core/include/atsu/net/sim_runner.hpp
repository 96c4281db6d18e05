#pragma once

#include <cstdint>
#include <memory>

#include <nlohmann/json.hpp>

#include "atsu/clock.hpp"
#include "atsu/net/udp.hpp"
#include "atsu/sim/simulator.hpp"

namespace atsu::net {

// Emission task for the simulator. Owns the Simulator; control commands are
// queued and applied between emissions on the emission thread.
class SimRunner {
 public:
  SimRunner(sim::Simulator simulator, UdpSender sender, const Clock& clock);
  ~SimRunner();

  void start();
  void stop();

  void post(sim::ControlCommand command);
  nlohmann::json state() const;
  std::uint64_t frames_sent() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// POST /control/{normal,alarm,test,outage,reset}; GET /control/state.
class ControlServer {
 public:
  explicit ControlServer(SimRunner& runner);
  ~ControlServer();

  std::uint16_t start(const Endpoint& bind);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Client side of the control API, used by `gbas-sim control`.
// Returns the response body; throws NetError on transport or HTTP failure.
std::string post_control(const Endpoint& target, sim::ControlCommand command);

}  // namespace atsu::net
