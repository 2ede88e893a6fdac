#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpdom/domination.hpp"
#include "gpdom/graph.hpp"

namespace gpdom {

enum class Engine { BnB, CyclicDP, Constructor };

const char* to_string(Engine e);

struct SolveStats {
  std::int64_t nodes_or_states = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  int gamma = 0;
  DomSet certificate;
  Engine engine = Engine::BnB;
  SolveStats stats;
};

struct BnbOptions {
  int max_live = 60;
  /// Ignore `max_live`.
  bool force = false;
};

/// Exact minimum dominating set of an arbitrary P(n,k) instance with
/// deletions. Branches on the lowest undominated vertex over its closed
/// neighbourhood; prunes with a disjoint-neighbourhood packing bound.
SolveResult solve_bnb(const GPGraph& g, const BnbOptions& opts = {});

/// Column-sweep instance for P(n,2): per-slot absent/forced/forbidden masks.
/// Absent vertices are deleted; forced/forbidden only constrain membership.
struct DpInstance {
  int n = 0;
  SlotSet absent;
  SlotSet forced;
  SlotSet forbidden;

  static DpInstance of(int n, const FaultSpec& fault = {});
};

/// Exact domination number of P(n,2) with deleted vertices via the cyclic
/// frontier DP. Returns nullopt when the constraints admit no dominating set.
std::optional<SolveResult> solve_dp(const DpInstance& inst);

SolveResult solve_dp(int n, const FaultSpec& fault = {});

struct Enumeration {
  int gamma = 0;
  std::vector<DomSet> sets;  // lexicographic slot order
  bool truncated = false;
};

/// Every minimum dominating set of `g`, up to `cap` of them.
Enumeration enumerate_minimum_sets(const GPGraph& g, std::size_t cap = SIZE_MAX, int max_live = 24);

struct CertificateReport {
  bool dominating = false;
  bool size_matches = false;
  int size = 0;
  int claimed = 0;
  std::vector<Vertex> undominated;
  /// Present when g is P(n,2) minus one outer vertex: ceil(3n/5)-1 <= claimed <= ceil(3n/5).
  std::optional<bool> window_ok;
  int window_low = 0;
  int window_high = 0;
  std::string error;

  bool ok() const { return error.empty() && dominating && size_matches && window_ok.value_or(true); }
};

CertificateReport verify_certificate(const GPGraph& g, const DomSet& s, int claimed);

/// ceil(3n/5)
constexpr int ceil_three_fifths(int n) { return (3 * n + 4) / 5; }

/// Closed-form domination number of P(n,2) - u_f.
constexpr int faulted_formula(int n) {
  return ceil_three_fifths(n) - ((n % 5 == 1 || n % 5 == 2) ? 1 : 0);
}

}  // namespace gpdom
