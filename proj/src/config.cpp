#include "permpoly/config.hpp"

#include <cstdlib>

namespace permpoly {

int k_max() {
  if (const char* env = std::getenv("PERMPOLY_KMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= 12) {
      return static_cast<int>(v);
    }
  }
  return kDefaultKMax;
}

}  // namespace permpoly
