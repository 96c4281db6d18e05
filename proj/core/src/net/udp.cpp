#include "atsu/net/udp.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>

namespace atsu::net {
namespace {

std::string errno_text(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

sockaddr_in resolve(const Endpoint& ep) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(ep.port);
  const std::string host = ep.host.empty() ? "0.0.0.0" : ep.host;
  if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) == 1) return addr;

  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_DGRAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), nullptr, &hints, &res) != 0 || !res)
    throw NetError("cannot resolve host " + host);
  addr.sin_addr = reinterpret_cast<sockaddr_in*>(res->ai_addr)->sin_addr;
  freeaddrinfo(res);
  return addr;
}

Socket udp_socket() {
  int fd = ::socket(AF_INET, SOCK_DGRAM | SOCK_CLOEXEC, 0);
  if (fd < 0) throw NetError(errno_text("socket"));
  return Socket(fd);
}

void bind_to(const Socket& s, const Endpoint& ep) {
  int one = 1;
  ::setsockopt(s.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  auto addr = resolve(ep);
  if (::bind(s.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0)
    throw NetError(errno_text(("bind " + ep.str()).c_str()));
}

bool readable(int fd, Millis timeout) {
  pollfd p{fd, POLLIN, 0};
  int rc = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (rc < 0 && errno != EINTR) throw NetError(errno_text("poll"));
  return rc > 0 && (p.revents & POLLIN);
}

}  // namespace

Endpoint Endpoint::parse(std::string_view text, std::string_view default_host, std::uint16_t default_port) {
  Endpoint ep{std::string(default_host), default_port};
  const auto colon = text.rfind(':');
  const auto host = colon == std::string_view::npos ? text : text.substr(0, colon);
  if (!host.empty()) ep.host = std::string(host);
  if (colon != std::string_view::npos) {
    const auto port = text.substr(colon + 1);
    unsigned value = 0;
    auto [p, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
    if (ec != std::errc{} || p != port.data() + port.size() || value > 65535)
      throw NetError("bad port in '" + std::string(text) + "'");
    ep.port = static_cast<std::uint16_t>(value);
  }
  return ep;
}

Socket& Socket::operator=(Socket&& o) noexcept {
  if (this != &o) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = o.fd_;
    o.fd_ = -1;
  }
  return *this;
}

Socket::~Socket() {
  if (fd_ >= 0) ::close(fd_);
}

std::uint16_t Socket::local_port() const {
  sockaddr_in addr{};
  socklen_t len = sizeof addr;
  if (::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len) < 0) return 0;
  return ntohs(addr.sin_port);
}

UdpReceiver::UdpReceiver(const Endpoint& bind) : sock_(udp_socket()), buf_(65536) { bind_to(sock_, bind); }

std::optional<std::vector<std::uint8_t>> UdpReceiver::receive(Millis timeout) {
  if (!readable(sock_.fd(), timeout)) return std::nullopt;
  ssize_t n = ::recv(sock_.fd(), buf_.data(), buf_.size(), MSG_DONTWAIT);
  if (n < 0) {
    if (errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR) return std::nullopt;
    throw NetError(errno_text("recv"));
  }
  return std::vector<std::uint8_t>(buf_.begin(), buf_.begin() + n);
}

UdpSender::UdpSender(const Endpoint& dest, std::optional<Endpoint> bind) : sock_(udp_socket()) {
  if (bind) bind_to(sock_, *bind);
  auto addr = resolve(dest);
  dest_addr_.resize(sizeof addr);
  std::memcpy(dest_addr_.data(), &addr, sizeof addr);
}

void UdpSender::send(std::span<const std::uint8_t> bytes) {
  ssize_t n = ::sendto(sock_.fd(), bytes.data(), bytes.size(), 0,
                       reinterpret_cast<const sockaddr*>(dest_addr_.data()),
                       static_cast<socklen_t>(dest_addr_.size()));
  // ICMP port-unreachable from an absent listener surfaces as ECONNREFUSED
  // on a later send; the sender is fire-and-forget.
  if (n < 0 && errno != ECONNREFUSED) throw NetError(errno_text("sendto"));
}

std::size_t UdpSender::drain_inbound() {
  std::size_t total = 0;
  std::uint8_t buf[65536];
  for (;;) {
    ssize_t n = ::recv(sock_.fd(), buf, sizeof buf, MSG_DONTWAIT);
    if (n < 0) {
      if (errno == ECONNREFUSED) continue;
      break;
    }
    total += static_cast<std::size_t>(n);
  }
  return total;
}

}  // namespace atsu::net
