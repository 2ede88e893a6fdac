#pragma once

#include <string>
#include <vector>

#include "gpdom/domination.hpp"
#include "gpdom/graph.hpp"

namespace gpdom {

enum class Rule {
  Exchange,
  TypeIFix,
  CoupleReduce,
  Shift3b,
  Shift3c,
  Shift3d,
  Shift4e,
  Shift4f,
  Shift4g,
  FaultBlockReduce,
};

const char* to_string(Rule r);

/// One size-preserving swap S - removed + added.
struct RewriteStep {
  Vertex removed;
  Vertex added;
  Rule rule = Rule::Exchange;
  std::vector<int> gammas_after;
};

struct Rewrite {
  DomSet set;
  std::vector<RewriteStep> steps;
};

/// S - x + y, accepted only if every vertex of N[x] stays dominated and the
/// result dominates g. Throws invalid-exchange on a precondition violation
/// and rejected-exchange when domination is lost.
DomSet exchange(const GPGraph& g, const DomSet& s, Vertex x, Vertex y);

/// Removes every block with gamma_i = 1 by the swap u_{i+3} -> u_{i+2}
/// (mirrored near the fault). Requires N(u_f) ∩ S = ∅.
Rewrite to_type1(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

struct CoupleReduction {
  DomSet set;
  std::vector<RewriteStep> steps;
  int initial_couples = 0;
  int final_couples = 0;
  /// Pseudo-couple indices with gamma_i = 2 that no legal swap could fix.
  std::vector<int> stuck;
};

/// Greedy couple-number reduction on a Type II/III set.
CoupleReduction reduce_couples(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

struct Canonical {
  DomSet set;
  TypeTag tag = TypeTag::TypeI;
  std::vector<RewriteStep> steps;
};

/// Rewrites a Type I set with N(u_f) ∩ S = ∅ to a Type II or Type III(a-d)
/// set by matching B_f ∩ S against the feasible fault-block patterns. When
/// gamma_f >= 5 it first moves members of B_f outward, one verified swap at a
/// time, until gamma_f = 4. Throws infeasible-pattern if nothing matches.
Canonical to_canonical_type(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

struct Normalization {
  DomSet set;
  TypeTag tag = TypeTag::TypeI;
  std::vector<RewriteStep> steps;
  int couples_before_reduction = 0;
  int couples_after_reduction = 0;
  std::vector<int> stuck;
};

/// to_type1, then to_canonical_type, then reduce_couples.
Normalization normalize(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

/// `RULE removed=<v> added=<v> gamma_profile_after=[...]`, one line per step.
std::string format_trace(const std::vector<RewriteStep>& steps, int base = 0);

/// True if S holds u_f or one of its pristine neighbours u_{f-1}, u_{f+1}, v_f.
bool touches_fault(const DomSet& s, const FaultSpec& fault);

}  // namespace gpdom
