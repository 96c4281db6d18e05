#pragma once

#include <csignal>

namespace atsu::tools {

// Blocks SIGINT/SIGTERM in the calling thread (call before spawning workers
// so they inherit the mask) and returns once one arrives.
inline sigset_t block_shutdown_signals() {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  return set;
}

inline int wait_for_shutdown(const sigset_t& set) {
  int sig = 0;
  sigwait(&set, &sig);
  return sig;
}

}  // namespace atsu::tools
