#include "gpdom/robustness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "gpdom/error.hpp"
#include "gpdom/solver.hpp"

namespace gpdom {

namespace {

Vertex dihedral(Vertex v, int shift, bool mirrored, int n) {
  return rotate(mirrored ? reflect(v, 0, n) : v, shift, n);
}

/// Evaluates `fn(i)` for i in [0, count) on `jobs` threads; results by index.
template <class F>
std::vector<int> parallel_map(std::size_t count, int jobs, F&& fn) {
  std::vector<int> out(count);
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

/// Calls `visit` on every r-combination of [0, m) in lexicographic order.
template <class F>
void for_each_combination(int m, int r, F&& visit) {
  if (r > m) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_args(int n, int max_removals) {
  if (n < 5) throw Error(ErrorCode::InvalidParameter, "robustness needs n >= 5, got " + std::to_string(n));
  if (max_removals < 1)
    throw Error(ErrorCode::InvalidParameter, "max_removals must be >= 1");
}

}  // namespace

bool canonical_vertex_set(const std::vector<int>& slots, int n) {
  std::vector<int> sorted = slots, image(slots.size());
  std::sort(sorted.begin(), sorted.end());
  for (bool mir : {false, true})
    for (int d = 0; d < n; ++d) {
      for (std::size_t i = 0; i < sorted.size(); ++i)
        image[i] = dihedral(Vertex::from_slot(sorted[i], n), d, mir, n).slot(n);
      std::sort(image.begin(), image.end());
      if (image < sorted) return false;
    }
  return true;
}

bool canonical_edge_set(const std::vector<Edge>& edges, int n) {
  using Key = std::pair<int, int>;
  auto key = [n](const Edge& e) { return Key{e.a.slot(n), e.b.slot(n)}; };
  std::vector<Key> base, image;
  for (const Edge& e : edges) base.push_back(key(e));
  std::sort(base.begin(), base.end());
  for (bool mir : {false, true})
    for (int d = 0; d < n; ++d) {
      image.clear();
      for (const Edge& e : edges)
        image.push_back(key(Edge::make(dihedral(e.a, d, mir, n), dihedral(e.b, d, mir, n), n)));
      std::sort(image.begin(), image.end());
      if (image < base) return false;
    }
  return true;
}

RobustnessReport alteration_number(int n, int max_removals, const RobustnessOptions& opts) {
  check_args(n, max_removals);
  RobustnessReport rep;
  rep.n = n;
  rep.gamma = solve_dp(n).gamma;
  AlterationPart part;
  const int slots = 2 * n;
  for (int r = 1; r <= std::min(max_removals, slots - 1); ++r) {
    std::vector<std::vector<int>> reps;
    for_each_combination(slots, r, [&](const std::vector<int>& idx) {
      if (!opts.symmetry_reduction || canonical_vertex_set(idx, n)) reps.push_back(idx);
    });
    if (opts.max_solves >= 0 && rep.solves + static_cast<long long>(reps.size()) > opts.max_solves) {
      part.budget_exhausted = true;
      break;
    }
    const auto values = parallel_map(reps.size(), opts.jobs, [&](std::size_t i) {
      std::vector<Vertex> removed;
      for (int s : reps[i]) removed.push_back(Vertex::from_slot(s, n));
      return solve_bnb(GPGraph::build(n, 2, std::span<const Vertex>(removed)), {.force = true}).gamma;
    });
    rep.solves += static_cast<long long>(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (values[i] == rep.gamma) continue;
      std::vector<Vertex> w;
      for (int s : reps[i]) w.push_back(Vertex::from_slot(s, n));
      if (r == 1 && w.front().ring == Ring::Inner && n % 5 != 1 && n % 5 != 2)
        part.inner_counterexamples.push_back(w.front());
      part.witnesses.push_back(std::move(w));
      part.witness_gammas.push_back(values[i]);
    }
    if (!part.witnesses.empty()) {
      part.exact = r;
      part.lower = r;
      break;
    }
    part.lower = r + 1;
  }
  rep.mu = part;
  return rep;
}

RobustnessReport bondage_number(int n, int max_removals, const RobustnessOptions& opts) {
  check_args(n, max_removals);
  RobustnessReport rep;
  rep.n = n;
  rep.gamma = solve_dp(n).gamma;
  const GPGraph pristine = GPGraph::build(n, 2);
  const auto& edges = pristine.edges();
  BondagePart part;
  part.high = 1 << 20;
  for (const Edge& e : edges) {
    const int du = static_cast<int>(pristine.neighbors(e.a.slot(n)).size());
    const int dv = static_cast<int>(pristine.neighbors(e.b.slot(n)).size());
    part.high = std::min(part.high, du + dv - 1);
  }
  const int m = static_cast<int>(edges.size());
  for (int r = 1; r <= std::min(max_removals, m); ++r) {
    std::vector<std::vector<Edge>> reps;
    for_each_combination(m, r, [&](const std::vector<int>& idx) {
      std::vector<Edge> chosen;
      for (int i : idx) chosen.push_back(edges[i]);
      if (!opts.symmetry_reduction || canonical_edge_set(chosen, n)) reps.push_back(std::move(chosen));
    });
    if (opts.max_solves >= 0 && rep.solves + static_cast<long long>(reps.size()) > opts.max_solves) {
      part.budget_exhausted = true;
      break;
    }
    const auto values = parallel_map(reps.size(), opts.jobs, [&](std::size_t i) {
      return solve_bnb(GPGraph::build(n, 2, FaultSpec::none(), reps[i]), {.force = true}).gamma;
    });
    rep.solves += static_cast<long long>(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (values[i] <= rep.gamma) continue;
      part.witnesses.push_back(reps[i]);
      part.witness_gammas.push_back(values[i]);
    }
    if (!part.witnesses.empty()) {
      part.exact = r;
      part.low = part.high = r;
      break;
    }
    part.low = r + 1;
  }
  rep.bondage = part;
  return rep;
}

bool single_edge_invariance(int n) {
  const GPGraph g = GPGraph::build(n, 2);
  const int want = ceil_three_fifths(n);
  for (const Edge& e : g.edges()) {
    const Edge one[] = {e};
    if (solve_bnb(GPGraph::build(n, 2, FaultSpec::none(), one), {.force = true}).gamma != want) return false;
  }
  return true;
}

}  // namespace gpdom
