#include <algorithm>
#include <array>

#include "gpdom/error.hpp"
#include "gpdom/kernels.hpp"
#include "gpdom/solver.hpp"

namespace gpdom {

namespace {

using kernels::kInf;
using kernels::kLanes;

// Frontier vertex status.
enum Status : int { Undominated = 0, Dominated = 1, InSet = 2, Absent = 3 };

// State layout: bits 0-1 u_i, 2-3 v_i, 4-5 v_{i-1}, 6-8 membership of
// (u_0, v_0, v_1) remembered for the wraparound.
constexpr int kStates = 512;

constexpr int encode(int su, int sv, int svp, int start) {
  return su | (sv << 2) | (svp << 4) | (start << 6);
}
constexpr int st_u(int s) { return s & 3; }
constexpr int st_v(int s) { return (s >> 2) & 3; }
constexpr int st_vp(int s) { return (s >> 4) & 3; }
constexpr int st_start(int s) { return s >> 6; }

// Lane = guessed membership of the wrap vertices:
// bit 0 u_{n-1}, bit 1 v_{n-1}, bit 2 v_{n-2}.
constexpr bool guess_u_last(int lane) { return lane & 1; }
constexpr bool guess_v_last(int lane) { return lane & 2; }
constexpr bool guess_v_second_last(int lane) { return lane & 4; }

struct Column {
  std::array<std::int32_t, kStates * kLanes> cost;
  std::array<std::int32_t, kStates * kLanes> pred;
  std::array<bool, kStates> reachable;

  void reset() {
    cost.fill(kInf);
    pred.fill(-1);
    reachable.fill(false);
  }
};

/// Allowed memberships (bit 0 = out, bit 1 = in) for a slot.
int options(const DpInstance& inst, int slot) {
  if (inst.absent.test(slot) || inst.forbidden.test(slot)) return inst.forced.test(slot) ? 0 : 1;
  if (inst.forced.test(slot)) return 2;
  return 3;
}

int status_of(bool absent, bool in, bool dominated) {
  if (absent) return Absent;
  if (in) return InSet;
  return dominated ? Dominated : Undominated;
}

}  // namespace

DpInstance DpInstance::of(int n, const FaultSpec& fault) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "n must be >= 3, got " + std::to_string(n));
  DpInstance inst{n, SlotSet(2 * n), SlotSet(2 * n), SlotSet(2 * n)};
  if (fault.faulted) {
    const Vertex f = *fault.faulted;
    if (f.index < 0 || f.index >= n)
      throw Error(ErrorCode::InvalidFault, "fault index " + std::to_string(f.index) + " outside [0, " +
                                               std::to_string(n) + ")");
    inst.absent.set(f.slot(n));
  }
  return inst;
}

std::optional<SolveResult> solve_dp(const DpInstance& inst) {
  const int n = inst.n;
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "n must be >= 3, got " + std::to_string(n));
  const auto start_time = std::chrono::steady_clock::now();
  const auto& kern = kernels::active();
  auto U = [n](int i) { return Vertex::mod(i, n); };
  auto V = [n](int i) { return n + Vertex::mod(i, n); };

  std::vector<Column> cols(n);
  std::int64_t visited = 0;

  // Seed: columns 0 and 1 for every wrap guess, lane by lane.
  Column& seed = cols[1];
  seed.reset();
  for (int choice = 0; choice < 16; ++choice) {
    const bool u0 = choice & 1, v0 = choice & 2, u1 = choice & 4, v1 = choice & 8;
    auto allowed = [&](int slot, bool in) { return (options(inst, slot) >> (in ? 1 : 0)) & 1; };
    if (!allowed(U(0), u0) || !allowed(V(0), v0) || !allowed(U(1), u1) || !allowed(V(1), v1)) continue;
    for (int lane = 0; lane < kLanes; ++lane) {
      // Guesses must agree with seed choices wherever the wrap columns overlap.
      if (n - 2 == 1 && guess_v_second_last(lane) != v1) continue;
      const bool gu = guess_u_last(lane), gv = guess_v_last(lane), gvp = guess_v_second_last(lane);
      if (!inst.absent.test(U(0)) && !u0 && !(v0 || u1 || gu)) continue;  // u_0 is closed
      const int s_v0 = status_of(inst.absent.test(V(0)), v0, u0 || gvp);
      const int s_u1 = status_of(inst.absent.test(U(1)), u1, u0 || v1);
      const int s_v1 = status_of(inst.absent.test(V(1)), v1, u1 || gv);
      const int start = (u0 ? 1 : 0) | (v0 ? 2 : 0) | (v1 ? 4 : 0);
      const int st = encode(s_u1, s_v1, s_v0, start);
      const std::int32_t c = int(u0) + int(v0) + int(u1) + int(v1);
      auto& slot_cost = seed.cost[st * kLanes + lane];
      if (c < slot_cost) {
        slot_cost = c;
        seed.pred[st * kLanes + lane] = choice;
        seed.reachable[st] = true;
      }
    }
  }

  std::array<std::int32_t, kLanes> add{};
  for (int c = 2; c < n; ++c) {
    const Column& prev = cols[c - 1];
    Column& cur = cols[c];
    cur.reset();
    const int opt_u = options(inst, U(c)), opt_v = options(inst, V(c));
    const bool abs_u = inst.absent.test(U(c)), abs_v = inst.absent.test(V(c));
    for (int s = 0; s < kStates; ++s) {
      if (!prev.reachable[s]) continue;
      ++visited;
      const int su = st_u(s), sv = st_v(s), svp = st_vp(s);
      for (int choice = 0; choice < 4; ++choice) {
        const bool a = choice & 1, b = choice & 2;
        if (!((opt_u >> int(a)) & 1) || !((opt_v >> int(b)) & 1)) continue;
        if (su == Undominated && !a) continue;   // u_{c-1} leaves the frontier
        if (svp == Undominated && !b) continue;  // v_{c-2} leaves the frontier
        const int nu = status_of(abs_u, a, su == InSet || b);
        const int nv = status_of(abs_v, b, a || svp == InSet);
        const int ns = encode(nu, nv, sv, st_start(s));
        for (int lane = 0; lane < kLanes; ++lane) {
          bool ok = true;
          if (c == n - 2) ok = guess_v_second_last(lane) == b;
          if (c == n - 1) ok = guess_u_last(lane) == a && guess_v_last(lane) == b;
          add[lane] = ok ? int(a) + int(b) : kInf;
        }
        kern.relax_lanes(&cur.cost[ns * kLanes], &cur.pred[ns * kLanes], &prev.cost[s * kLanes],
                         add.data(), s * 4 + choice);
        cur.reachable[ns] = true;
      }
    }
  }

  // Close the cycle: the last frontier meets the remembered start bits.
  const Column& last = cols[n - 1];
  int best = kInf, best_state = -1, best_lane = -1;
  for (int s = 0; s < kStates; ++s) {
    if (!last.reachable[s]) continue;
    const int start = st_start(s);
    const bool u0 = start & 1, v0 = start & 2, v1 = start & 4;
    if (st_u(s) == Undominated && !u0) continue;   // u_{n-1} ~ u_0
    if (st_v(s) == Undominated && !v1) continue;   // v_{n-1} ~ v_1
    if (st_vp(s) == Undominated && !v0) continue;  // v_{n-2} ~ v_0
    for (int lane = 0; lane < kLanes; ++lane) {
      const int c = last.cost[s * kLanes + lane];
      if (c < best) {
        best = c;
        best_state = s;
        best_lane = lane;
      }
    }
  }
  if (best >= kInf) return std::nullopt;

  DomSet cert(n);
  int s = best_state;
  for (int c = n - 1; c >= 2; --c) {
    const int code = cols[c].pred[s * kLanes + best_lane];
    const int choice = code & 3;
    if (choice & 1) cert.bits().set(U(c));
    if (choice & 2) cert.bits().set(V(c));
    s = code >> 2;
  }
  const int seed_choice = cols[1].pred[s * kLanes + best_lane];
  if (seed_choice & 1) cert.bits().set(U(0));
  if (seed_choice & 2) cert.bits().set(V(0));
  if (seed_choice & 4) cert.bits().set(U(1));
  if (seed_choice & 8) cert.bits().set(V(1));

  SolveResult r;
  r.gamma = best;
  r.certificate = std::move(cert);
  r.engine = Engine::CyclicDP;
  r.stats.nodes_or_states = visited;
  r.stats.elapsed = std::chrono::steady_clock::now() - start_time;
  return r;
}

SolveResult solve_dp(int n, const FaultSpec& fault) {
  const DpInstance inst = DpInstance::of(n, fault);
  auto r = solve_dp(inst);
  if (!r) throw Error(ErrorCode::ConstructionBug, "cyclic DP found no dominating set");
  std::vector<Vertex> deleted;
  if (fault.faulted) deleted.push_back(*fault.faulted);
  const GPGraph g = GPGraph::build(n, 2, std::span<const Vertex>(deleted));
  if (!is_dominating(g, r->certificate) || r->certificate.size() != r->gamma)
    throw Error(ErrorCode::ConstructionBug, "cyclic DP certificate failed verification");
  return *r;
}

}  // namespace gpdom
