// GBAS ground-station simulator: emits CSM frames over UDP, driven by a
// scenario file and by operator control commands.

#include <CLI11.hpp>

#include <cstdio>
#include <optional>

#include "atsu/net/sim_runner.hpp"
#include "atsu/net/udp.hpp"
#include "atsu/sim/scenario.hpp"
#include "atsu/sim/simulator.hpp"
#include "signal_wait.hpp"

namespace {

int run_control(const std::string& target, const std::string& command) {
  using namespace atsu;
  auto cmd = sim::parse_command(command);
  if (!cmd) {
    std::fprintf(stderr, "gbas-sim: unknown command '%s'\n", command.c_str());
    return 2;
  }
  std::printf("%s\n", net::post_control(net::Endpoint::parse(target, "127.0.0.1", 8081), *cmd).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace atsu;

  std::string dest = "127.0.0.1:" + std::to_string(net::kDefaultCsmPort);
  std::optional<double> rate_hz;
  std::string scenario_path;
  std::string control_http;
  std::string station;
  double outage_secs = 180.0;

  CLI::App app{"GBAS station simulator"};
  app.add_option("--dest", dest, "ATSU host:port")->capture_default_str();
  app.add_option("--rate-hz", rate_hz, "Emission rate in Hz (0.1 to 10; default 1 or the scenario's)")
      ->check(CLI::Range(sim::ScenarioScript::kMinRateHz, sim::ScenarioScript::kMaxRateHz));
  app.add_option("--scenario", scenario_path, "Scenario JSON file")->check(CLI::ExistingFile);
  app.add_option("--control-http", control_http, "Serve the control API on address:port");
  app.add_option("--seed-station", station, "Station identifier (up to 8 characters)");
  app.add_option("--outage-secs", outage_secs, "Duration of an OUTAGE control window")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string control_target = "127.0.0.1:8081";
  std::string control_command;
  auto* control = app.add_subcommand("control", "Send normal|alarm|test|outage|reset to a running simulator");
  control->add_option("command", control_command, "Command")->required();
  control->add_option("--target", control_target, "Control API address:port")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*control) return run_control(control_target, control_command);

    SystemClock clock;
    sim::ScenarioScript script = scenario_path.empty() ? sim::ScenarioScript{} : sim::load_scenario(scenario_path);
    if (rate_hz) script.rate_hz = *rate_hz;
    if (!station.empty()) script.station_id = csm::StationId(station);

    sim::SimulatorOptions options;
    options.outage_duration = Millis{static_cast<std::int64_t>(outage_secs * 1000.0)};

    const auto signals = tools::block_shutdown_signals();
    net::SimRunner runner(sim::Simulator(script, clock.now(), options),
                          net::UdpSender(net::Endpoint::parse(dest, "127.0.0.1", net::kDefaultCsmPort)), clock);
    std::optional<net::ControlServer> server;
    int control_port = 0;
    if (!control_http.empty()) {
      server.emplace(runner);
      control_port = server->start(net::Endpoint::parse(control_http, "127.0.0.1", 8081));
    }
    runner.start();
    std::printf("gbas-sim: station '%s' -> %s at %.2f Hz, control %d\n", script.station_id.trimmed().c_str(),
                dest.c_str(), script.rate_hz, control_port);
    std::fflush(stdout);

    tools::wait_for_shutdown(signals);
    runner.stop();
    if (server) server->stop();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gbas-sim: %s\n", e.what());
    return 1;
  }
  return 0;
}
