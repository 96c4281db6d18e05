#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atsu/clock.hpp"

namespace atsu::net {

class NetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint16_t kDefaultCsmPort = 21511;

struct Endpoint {
  std::string host = "0.0.0.0";
  std::uint16_t port = 0;

  // "host:port", "host" or ":port"; missing parts take the defaults.
  static Endpoint parse(std::string_view text, std::string_view default_host, std::uint16_t default_port);
  std::string str() const { return host + ":" + std::to_string(port); }
};

// RAII file descriptor.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  Socket(Socket&& o) noexcept : fd_(o.fd_) { o.fd_ = -1; }
  Socket& operator=(Socket&& o) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket();

  int fd() const { return fd_; }
  std::uint16_t local_port() const;

 private:
  int fd_ = -1;
};

// Bound, receive-only UDP socket for the ATSU ingest path. It has no send
// operation.
class UdpReceiver {
 public:
  explicit UdpReceiver(const Endpoint& bind);

  // Waits up to `timeout`; returns the datagram payload (any size up to 64 KiB).
  std::optional<std::vector<std::uint8_t>> receive(Millis timeout);
  std::uint16_t port() const { return sock_.local_port(); }

 private:
  Socket sock_;
  std::vector<std::uint8_t> buf_;
};

class UdpSender {
 public:
  // `bind` pins the local address (tests use it to watch for replies).
  explicit UdpSender(const Endpoint& dest, std::optional<Endpoint> bind = std::nullopt);

  void send(std::span<const std::uint8_t> bytes);
  std::uint16_t local_port() const { return sock_.local_port(); }
  // Reads and discards anything delivered to the sending socket; returns
  // the byte count. A read-only peer never causes this to be non-zero.
  std::size_t drain_inbound();

 private:
  Socket sock_;
  std::vector<std::uint8_t> dest_addr_;
};

}  // namespace atsu::net
