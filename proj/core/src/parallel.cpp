#include "henon/parallel.hpp"

#include <cstdlib>
#include <string>

namespace henon {

unsigned default_threads() {
  if (const char* env = std::getenv("HENON_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace henon
