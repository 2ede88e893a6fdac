#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpdom/graph.hpp"

namespace gpdom {

struct RobustnessOptions {
  /// Search one representative per dihedral orbit of removal sets.
  bool symmetry_reduction = true;
  /// Worker threads for the independent re-solves.
  int jobs = 1;
  /// Stop after this many solver calls; the report then carries bounds only.
  long long max_solves = -1;
};

struct AlterationPart {
  std::optional<int> exact;
  int lower = 1;
  /// Orbit representatives at the minimal size whose removal changes gamma.
  std::vector<std::vector<Vertex>> witnesses;
  std::vector<int> witness_gammas;
  /// Single inner-vertex removals that change gamma for n ≢ 1, 2 (mod 5).
  std::vector<Vertex> inner_counterexamples;
  bool budget_exhausted = false;
};

struct BondagePart {
  std::optional<int> exact;
  int low = 1;
  /// General bound b(G) <= deg(u) + deg(v) - 1 over adjacent u, v.
  int high = 0;
  std::vector<std::vector<Edge>> witnesses;
  std::vector<int> witness_gammas;
  bool budget_exhausted = false;
};

struct RobustnessReport {
  int n = 0;
  int gamma = 0;
  long long solves = 0;
  std::optional<AlterationPart> mu;
  std::optional<BondagePart> bondage;
};

/// Least r <= max_removals such that deleting some r vertices (either ring)
/// changes gamma(P(n,2)).
RobustnessReport alteration_number(int n, int max_removals, const RobustnessOptions& opts = {});

/// Least r <= max_removals such that deleting some r edges raises gamma(P(n,2)).
RobustnessReport bondage_number(int n, int max_removals, const RobustnessOptions& opts = {});

/// gamma(P(n,2) - e) == ceil(3n/5) for every edge e.
bool single_edge_invariance(int n);

/// True iff `slots` is the lexicographically smallest image of itself under
/// the dihedral group of P(n,2) acting on vertex slots.
bool canonical_vertex_set(const std::vector<int>& slots, int n);
bool canonical_edge_set(const std::vector<Edge>& edges, int n);

}  // namespace gpdom
