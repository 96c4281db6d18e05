// Replays a transition log through a fresh monitor and reports whether the
// logged status transitions are reproduced.

#include <CLI11.hpp>

#include <cstdio>

#include "atsu/service/transition_log.hpp"

int main(int argc, char** argv) {
  using namespace atsu;

  std::string path;
  double stale_secs = 5.0;
  bool verbose = false;
  CLI::App app{"Verify an ATSU transition log by replay"};
  app.add_option("log", path, "Transition log (.jsonl)")->required()->check(CLI::ExistingFile);
  app.add_option("--stale-secs", stale_secs, "Staleness window the log was recorded with")->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "Print every transition");
  CLI11_PARSE(app, argc, argv);

  try {
    monitor::MonitorConfig config;
    config.stale_after = Millis{static_cast<std::int64_t>(stale_secs * 1000.0)};
    const auto report = service::replay(service::read_log(path), config);
    if (verbose)
      for (const auto& t : report.replayed)
        std::printf("%s %s\n", format_utc(t.at).c_str(), t.payload.at("changed").dump().c_str());
    std::printf("%zu logged, %zu replayed: %s\n", report.logged.size(), report.replayed.size(),
                report.matches() ? "MATCH" : "MISMATCH");
    return report.matches() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "atsu-replay: %s\n", e.what());
    return 2;
  }
}
