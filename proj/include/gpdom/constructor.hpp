#pragma once

#include "gpdom/domination.hpp"
#include "gpdom/solver.hpp"

namespace gpdom {

/// Dominating set of P(n,2) of size ceil(3n/5): the period-5 tile
/// {u_{5j}, v_{5j+2}, v_{5j+3}} plus, for n not divisible by 5, a
/// residue-specific patch. Verified before returning.
DomSet construct_fault_free(int n);

/// Dominating set of P(5k+1, 2) - u_f of size 3k: the core
/// {u_{f-2}, v_{f+1}, v_{f+2}} plus self-contained blocks B_{f-5x}, x = 1..k-1.
DomSet construct_fault_5k1(int k, int f);

/// Dominating set of P(5k+2, 2) - u_f of size 3k+1: the 5k+1 layout plus one
/// seam vertex.
DomSet construct_fault_5k2(int k, int f);

/// Explicit set for P(n,2) with an optional single-vertex fault, tagged with
/// engine Constructor. Uses the faulted constructions for outer faults when
/// n = 5k+1 or 5k+2, otherwise the fault-free pattern rotated off the fault.
SolveResult construct(int n, const FaultSpec& fault = {});

}  // namespace gpdom
