#include <random>
#include <vector>

#include "doctest.h"

#include "gpdom/kernels.hpp"

using namespace gpdom;

namespace {

std::vector<const kernels::KernelTable*> variants() {
  std::vector<const kernels::KernelTable*> out{&kernels::scalar()};
  if (const auto* v = kernels::avx2()) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("cover_union variants agree on random matrices") {
  std::mt19937_64 rng(7);
  for (int words : {1, 2, 3, 4, 5, 8, 13}) {
    const int rows_total = 40;
    std::vector<std::uint64_t> m(rows_total * words);
    for (auto& w : m) w = rng();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> rows;
      const int count = static_cast<int>(rng() % 12);
      for (int i = 0; i < count; ++i) rows.push_back(static_cast<int>(rng() % rows_total));
      std::vector<std::uint64_t> want(words, 0);
      for (int r : rows)
        for (int w = 0; w < words; ++w) want[w] |= m[r * words + w];
      for (const auto* k : variants()) {
        std::vector<std::uint64_t> got(words, ~0ull);
        k->cover_union(m.data(), words, rows.data(), count, got.data());
        CHECK_MESSAGE(got == want, k->name);
      }
    }
  }
}

TEST_CASE("window_sums variants agree with the naive sum") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 70; ++n) {
    for (int radius : {0, 1, 2, 3}) {
      std::vector<std::int32_t> c(n);
      for (auto& x : c) x = static_cast<std::int32_t>(rng() % 3);
      std::vector<std::int32_t> want(n, 0);
      for (int i = 0; i < n; ++i)
        for (int d = -radius; d <= radius; ++d) want[i] += c[((i + d) % n + n) % n];
      for (const auto* k : variants()) {
        std::vector<std::int32_t> got(n, -1);
        k->window_sums(c.data(), n, radius, got.data());
        CHECK_MESSAGE(got == want, k->name, " n=", n, " r=", radius);
      }
    }
  }
}

TEST_CASE("relax_lanes variants agree") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::int32_t dst0[kernels::kLanes], pred0[kernels::kLanes], src[kernels::kLanes], add[kernels::kLanes];
    for (int l = 0; l < kernels::kLanes; ++l) {
      dst0[l] = (rng() % 4 == 0) ? kernels::kInf : static_cast<std::int32_t>(rng() % 50);
      pred0[l] = static_cast<std::int32_t>(rng() % 100);
      src[l] = (rng() % 5 == 0) ? kernels::kInf : static_cast<std::int32_t>(rng() % 50);
      add[l] = static_cast<std::int32_t>(rng() % 2);
    }
    const std::int32_t code = static_cast<std::int32_t>(rng() % 4096);
    std::vector<std::int32_t> want_d(dst0, dst0 + kernels::kLanes), want_p(pred0, pred0 + kernels::kLanes);
    for (int l = 0; l < kernels::kLanes; ++l) {
      const std::int32_t c = src[l] + add[l];
      if (c < want_d[l]) {
        want_d[l] = c;
        want_p[l] = code;
      }
    }
    for (const auto* k : variants()) {
      std::vector<std::int32_t> d(dst0, dst0 + kernels::kLanes), p(pred0, pred0 + kernels::kLanes);
      k->relax_lanes(d.data(), p.data(), src, add, code);
      CHECK(d == want_d);
      CHECK(p == want_p);
    }
  }
}

TEST_CASE("active kernel table is one of the variants") {
  const auto& a = kernels::active();
  bool found = false;
  for (const auto* k : variants()) found = found || (k == &a);
  CHECK(found);
}
