#include "greedyopt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace greedyopt::kernels {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(__i386__)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if !(defined(__x86_64__) || defined(__i386__))
const Backend& avx2_backend() { return scalar_backend(); }
#endif

const Backend& active() {
  static const Backend* chosen = [] {
    const char* env = std::getenv("GREEDYOPT_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_backend();
    if (avx2_supported()) return &avx2_backend();
    return &scalar_backend();
  }();
  return *chosen;
}

}  // namespace greedyopt::kernels
