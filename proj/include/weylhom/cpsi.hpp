#pragma once

#include <string>
#include <vector>

#include "weylhom/relsys.hpp"

// Side criteria: vanishing of Hom into hook shapes, the all-ones map
// criterion evaluated three independent ways, and the four-case
// non-factorization trace.

namespace weylhom::cpsi {

using binarith::u64;
using tabcomb::FamilyInstance;

// Least i with p^i > y.
u64 l_p(u64 y, u64 p);

struct HookCriterionResult {
  bool applicable = false;
  bool vanishes = false;
  u64 q = 0;           // largest index with part >= 2; 0 for a column
  u64 check_value = 0; // part_q + hook_d + 2 - q
  bool p_divides = false;
};

// Vanishing criterion for maps from shape `lambda` into the hook
// (hook_a, 1^{hook_d}): applicable when q <= hook_d, and the space is
// zero when additionally p does not divide the check value.
// Requires equal sizes and at least hook_d + 2 parts in lambda.
HookCriterionResult hook_vanishing(const std::vector<u64>& lambda, u64 hook_a,
                                   u64 hook_d, u64 p);

// Whether the sum of all basis maps induces a nonzero homomorphism.
// Evaluated by arithmetic divisibility, by the seed condition, and by
// kernel membership of the all-ones vector; the three must agree.
// Requires p = 2.
bool psi_nonzero(const FamilyInstance& inst);

struct CpCase {
  std::string label;
  std::vector<u64> intermediate;  // intermediate shape as a partition
  std::string justification;      // main-theorem-parity, hook-criterion,
                                  // row-removal+hook-criterion,
                                  // inapplicable-by-shape
  bool applicable = true;
  bool discharged = false;
  HookCriterionResult hook;  // meaningful for hook-based justifications
};

struct CpTrace {
  u64 a = 2, d = 3;
  std::vector<CpCase> cases;
  bool conclusion = false;  // true = no two-step factorization exists
};

// The four-case analysis for the source (a, 2, 1^d), target (a+d, 2),
// over F_2 with a even and d odd >= 3.
CpTrace cp_trace(u64 a, u64 d);

}  // namespace weylhom::cpsi
