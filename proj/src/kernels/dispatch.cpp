#include <cstdlib>
#include <string_view>

#include "gpdom/kernels.hpp"

namespace gpdom::kernels {

#if defined(GPDOM_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

const KernelTable* avx2() {
#if defined(GPDOM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("GPDOM_KERNELS");
    if (env && std::string_view(env) == "scalar") return scalar();
    if (const KernelTable* t = avx2()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace gpdom::kernels
