#include "gpdom/constructor.hpp"

#include <array>
#include <mutex>
#include <optional>

#include "gpdom/error.hpp"

namespace gpdom {

namespace {

struct Patch {
  int phase = 0;                // tile is {u_p, v_{p+2}, v_{p+3}} mod 5 in every 5-column block
  int width = 0;                // columns after the tiled prefix
  std::vector<Vertex> members;  // column offsets relative to the patch start
};

void add_tile(DomSet& s, int base, int phase, int n) {
  s.insert(Vertex::outer(base + phase % 5, n));
  s.insert(Vertex::inner(base + (phase + 2) % 5, n));
  s.insert(Vertex::inner(base + (phase + 3) % 5, n));
}

/// Patch for residue r found by the DP on P(5 + width, 2) with the first five
/// columns pinned to one tile.
std::optional<Patch> derive_patch(int r) {
  for (int width : {r, r + 5}) {
    const int n0 = 5 + width;
    for (int phase = 0; phase < 5; ++phase) {
      DpInstance inst = DpInstance::of(n0);
      DomSet tile(n0);
      add_tile(tile, 0, phase, n0);
      for (int c = 0; c < 5; ++c)
        for (int slot : {c, n0 + c}) {
          if (tile.contains_slot(slot))
            inst.forced.set(slot);
          else
            inst.forbidden.set(slot);
        }
      const auto res = solve_dp(inst);
      if (!res || res->gamma != ceil_three_fifths(n0)) continue;
      Patch p{phase, width, {}};
      for (const Vertex& v : res->certificate.vertices())
        if (v.index >= 5) p.members.push_back({v.ring, v.index - 5});
      return p;
    }
  }
  return std::nullopt;
}

const std::optional<Patch>& patch_for(int r) {
  static std::array<std::optional<Patch>, 5> cache;
  static std::array<std::once_flag, 5> once;
  std::call_once(once[r], [r] { cache[r] = derive_patch(r); });
  return cache[r];
}

void require_verified(const GPGraph& g, const DomSet& s, int size, const char* what) {
  if (s.size() != size || !is_dominating(g, s))
    throw Error(ErrorCode::ConstructionBug, std::string(what) + " failed verification: " + format_set(s));
}

DomSet fault_core(int n, int k, int f) {
  DomSet s(n);
  s.insert(Vertex::outer(f - 2, n));
  s.insert(Vertex::inner(f + 1, n));
  s.insert(Vertex::inner(f + 2, n));
  for (int x = 1; x <= k - 1; ++x) {
    const int i = f - 5 * x;
    s.insert(Vertex::outer(i - 2, n));
    s.insert(Vertex::inner(i, n));
    s.insert(Vertex::inner(i + 1, n));
  }
  return s;
}

}  // namespace

DomSet construct_fault_free(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "n must be >= 3, got " + std::to_string(n));
  const GPGraph g = GPGraph::build(n, 2);
  const int want = ceil_three_fifths(n);
  const int r = n % 5;
  DomSet s(n);
  if (r == 0) {
    for (int j = 0; j < n / 5; ++j) add_tile(s, 5 * j, 0, n);
  } else if (n < 5) {
    s = solve_dp(n).certificate;
  } else {
    const auto& patch = patch_for(r);
    const int tiles = patch ? (n - patch->width) / 5 : 0;
    if (patch && tiles >= 1) {
      for (int j = 0; j < tiles; ++j) add_tile(s, 5 * j, patch->phase, n);
      for (const Vertex& v : patch->members) s.insert({v.ring, 5 * tiles + v.index});
    } else {
      s = solve_dp(n).certificate;
    }
  }
  require_verified(g, s, want, "fault-free construction");
  return s;
}

DomSet construct_fault_5k1(int k, int f) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be >= 1, got " + std::to_string(k));
  const int n = 5 * k + 1;
  f = Vertex::mod(f, n);
  const DomSet s = fault_core(n, k, f);
  require_verified(GPGraph::build(n, 2, FaultSpec::outer(f, n)), s, 3 * k, "5k+1 construction");
  return s;
}

DomSet construct_fault_5k2(int k, int f) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be >= 1, got " + std::to_string(k));
  const int n = 5 * k + 2;
  f = Vertex::mod(f, n);
  const GPGraph g = GPGraph::build(n, 2, FaultSpec::outer(f, n));
  const DomSet core = fault_core(n, k, f);
  // The two columns f+3, f+4 are outside every placed block.
  for (const Vertex& seam : {Vertex::inner(f + 3, n), Vertex::inner(f + 4, n),
                             Vertex::outer(f + 3, n), Vertex::outer(f + 4, n)}) {
    DomSet s = core;
    s.insert(seam);
    if (is_dominating(g, s)) return s;
  }
  // Seam completion by the DP with the core pinned.
  DpInstance inst = DpInstance::of(n, FaultSpec::outer(f, n));
  for (int slot = 0; slot < 2 * n; ++slot) {
    const Vertex v = Vertex::from_slot(slot, n);
    if (core.contains_slot(slot))
      inst.forced.set(slot);
    else if (v.index != Vertex::mod(f + 3, n) && v.index != Vertex::mod(f + 4, n))
      inst.forbidden.set(slot);
  }
  const auto res = solve_dp(inst);
  if (!res) throw Error(ErrorCode::ConstructionBug, "no seam completion for n=" + std::to_string(n));
  require_verified(g, res->certificate, 3 * k + 1, "5k+2 construction");
  return res->certificate;
}

SolveResult construct(int n, const FaultSpec& fault) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult r;
  r.engine = Engine::Constructor;
  const GPGraph g = GPGraph::build(n, 2, fault);
  if (fault.is_outer() && n >= 6 && (n % 5 == 1 || n % 5 == 2)) {
    const int f = fault.faulted->index;
    r.certificate = n % 5 == 1 ? construct_fault_5k1(n / 5, f) : construct_fault_5k2(n / 5, f);
  } else {
    const DomSet base = construct_fault_free(n);
    int shift = 0;
    if (fault.faulted) {
      const Vertex bad = *fault.faulted;
      while (shift < n && base.contains(rotate(bad, -shift, n))) ++shift;
      if (shift == n) throw Error(ErrorCode::ConstructionBug, "pattern covers every rotation of the fault");
    }
    DomSet s(n);
    for (const Vertex& v : base.vertices()) s.insert(rotate(v, shift, n));
    r.certificate = s;
  }
  r.gamma = r.certificate.size();
  require_verified(g, r.certificate, r.gamma, "construction");
  r.stats.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace gpdom
