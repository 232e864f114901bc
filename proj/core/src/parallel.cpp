#include "strongdom/parallel.hpp"

#include <cstdlib>
#include <string>

namespace strongdom {

unsigned default_thread_count() {
  if (const char* env = std::getenv("STRONGDOM_THREADS")) {
    long value = std::strtol(env, nullptr, 10);
    if (value >= 1) return static_cast<unsigned>(value);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1;
}

}  // namespace strongdom
