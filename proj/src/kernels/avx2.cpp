// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <vector>

#include "gpdom/kernels.hpp"

namespace gpdom::kernels::detail {
namespace {

void cover_union(const std::uint64_t* matrix, int words, const int* rows, int count,
                 std::uint64_t* out) {
  int w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (int r = 0; r < count; ++r) {
      const auto* row = matrix + static_cast<std::ptrdiff_t>(rows[r]) * words + w;
      acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), acc);
  }
  for (; w < words; ++w) {
    std::uint64_t acc = 0;
    for (int r = 0; r < count; ++r) acc |= matrix[static_cast<std::ptrdiff_t>(rows[r]) * words + w];
    out[w] = acc;
  }
}

void window_sums(const std::int32_t* counts, int n, int radius, std::int32_t* out) {
  // Unroll the cycle into a padded linear buffer, then sum shifted loads.
  std::vector<std::int32_t> ext(static_cast<std::size_t>(n) + 2 * radius);
  for (int t = 0; t < n + 2 * radius; ++t) {
    int j = (t - radius) % n;
    if (j < 0) j += n;
    ext[t] = counts[j];
  }
  const std::int32_t* base = ext.data();
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (int d = 0; d <= 2 * radius; ++d)
      acc = _mm256_add_epi32(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + i + d)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    std::int32_t s = 0;
    for (int d = 0; d <= 2 * radius; ++d) s += base[i + d];
    out[i] = s;
  }
}

void relax_lanes(std::int32_t* dst, std::int32_t* pred, const std::int32_t* src,
                 const std::int32_t* add, std::int32_t code) {
  static_assert(kLanes == 8);
  const __m256i c = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(src)),
                                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(add)));
  const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst));
  const __m256i better = _mm256_cmpgt_epi32(d, c);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), _mm256_min_epi32(d, c));
  const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(pred),
                      _mm256_blendv_epi8(p, _mm256_set1_epi32(code), better));
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &cover_union, &window_sums, &relax_lanes};
  return table;
}

}  // namespace gpdom::kernels::detail
