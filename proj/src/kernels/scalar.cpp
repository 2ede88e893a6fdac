#include <algorithm>
#include <vector>

#include "gpdom/kernels.hpp"

namespace gpdom::kernels {
namespace {

void cover_union(const std::uint64_t* matrix, int words, const int* rows, int count,
                 std::uint64_t* out) {
  std::fill(out, out + words, 0);
  for (int r = 0; r < count; ++r) {
    const std::uint64_t* row = matrix + static_cast<std::ptrdiff_t>(rows[r]) * words;
    for (int w = 0; w < words; ++w) out[w] |= row[w];
  }
}

void window_sums(const std::int32_t* counts, int n, int radius, std::int32_t* out) {
  for (int i = 0; i < n; ++i) {
    std::int32_t s = 0;
    for (int d = -radius; d <= radius; ++d) {
      int j = (i + d) % n;
      if (j < 0) j += n;
      s += counts[j];
    }
    out[i] = s;
  }
}

void relax_lanes(std::int32_t* dst, std::int32_t* pred, const std::int32_t* src,
                 const std::int32_t* add, std::int32_t code) {
  for (int l = 0; l < kLanes; ++l) {
    const std::int32_t c = src[l] + add[l];
    if (c < dst[l]) {
      dst[l] = c;
      pred[l] = code;
    }
  }
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &cover_union, &window_sums, &relax_lanes};
  return table;
}

}  // namespace gpdom::kernels
