// ATSU monitor: receives Composite Status Message datagrams, keeps the
// display state and serves it over HTTP.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <optional>

#include "atsu/monitor/catalog.hpp"
#include "atsu/net/status_server.hpp"
#include "atsu/net/udp.hpp"
#include "atsu/service/atsu_service.hpp"
#include "signal_wait.hpp"

int main(int argc, char** argv) {
  using namespace atsu;

  std::string listen = "0.0.0.0:" + std::to_string(net::kDefaultCsmPort);
  std::string http = "0.0.0.0:8080";
  double stale_secs = 5.0;
  std::string catalog_path;
  std::string log_dir;

  CLI::App app{"ATSU status monitor (read-only)"};
  app.add_option("--listen", listen, "UDP address:port for CSM frames")->envname("ATSU_LISTEN")->capture_default_str();
  app.add_option("--http", http, "HTTP address:port for the status API")->envname("ATSU_HTTP")->capture_default_str();
  app.add_option("--stale-secs", stale_secs, "Seconds without a valid frame before NO DATA")
      ->envname("ATSU_STALE_SECS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--catalog", catalog_path, "Alert/alarm catalog file (default: built-in)")->envname("ATSU_CATALOG");
  app.add_option("--log-dir", log_dir, "Directory for the transition log (default: no log)")->envname("ATSU_LOG_DIR");
  CLI11_PARSE(app, argc, argv);

  try {
    SystemClock clock;
    const auto started = clock.now();

    auto catalog = catalog_path.empty()
                       ? std::shared_ptr<const monitor::Catalog>(std::shared_ptr<const monitor::Catalog>{},
                                                                 &monitor::Catalog::builtin())
                       : std::make_shared<const monitor::Catalog>(monitor::Catalog::load(catalog_path));

    std::optional<service::JsonlLog> log;
    if (!log_dir.empty()) log.emplace(service::JsonlLog::in_directory(log_dir, started));

    monitor::MonitorConfig config;
    config.stale_after = Millis{static_cast<std::int64_t>(stale_secs * 1000.0)};

    const auto signals = tools::block_shutdown_signals();
    service::AtsuService svc(config, catalog, log ? &*log : nullptr, started);
    net::IngestLoop ingest(svc, net::UdpReceiver(net::Endpoint::parse(listen, "0.0.0.0", net::kDefaultCsmPort)),
                           clock);
    net::StatusServer server(svc, clock);
    const auto http_port = server.start(net::Endpoint::parse(http, "0.0.0.0", 8080));
    ingest.start();

    std::printf("atsu-service: udp %d, http %d%s%s\n", ingest.port(), http_port, log ? ", log " : "",
                log ? log->path().c_str() : "");
    std::fflush(stdout);

    tools::wait_for_shutdown(signals);
    ingest.stop();
    server.stop();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "atsu-service: %s\n", e.what());
    return 1;
  }
  return 0;
}
