#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace signedspan {

// Worker pool size: SIGNEDSPAN_WORKERS if set to a positive integer, else the
// hardware concurrency (at least 1).
inline int worker_count() {
  if (const char* env = std::getenv("SIGNEDSPAN_WORKERS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace signedspan
