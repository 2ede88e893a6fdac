#pragma once

#include <cstdint>
#include <string_view>

namespace gpdom::kernels {

/// Lanes carried per frontier state by the cyclic DP (one per wrap guess).
inline constexpr int kLanes = 8;
inline constexpr std::int32_t kInf = 1 << 28;

/// Data-parallel inner loops. Every variant must produce bit-identical
/// output to the scalar reference.
struct KernelTable {
  std::string_view name;

  /// out[w] = OR over r in rows[0..count) of matrix[r * words + w].
  void (*cover_union)(const std::uint64_t* matrix, int words, const int* rows, int count,
                      std::uint64_t* out);

  /// Cyclic window sums: out[i] = sum_{d=-radius..radius} counts[(i+d) mod n].
  /// Requires n >= 1, 0 <= radius.
  void (*window_sums)(const std::int32_t* counts, int n, int radius, std::int32_t* out);

  /// Per lane: c = src[l] + add[l]; if c < dst[l] then dst[l] = c, pred[l] = code.
  void (*relax_lanes)(std::int32_t* dst, std::int32_t* pred, const std::int32_t* src,
                      const std::int32_t* add, std::int32_t code);
};

const KernelTable& scalar();

/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2();

/// Kernel set picked once per process: AVX2 when available, unless the
/// environment variable GPDOM_KERNELS=scalar is set.
const KernelTable& active();

}  // namespace gpdom::kernels
