#pragma once

#include <optional>
#include <vector>

#include "weylhom/relsys.hpp"

// The reduced linear systems obtained from the full relation system:
// three labelled equation groups over the source-weight coefficients,
// the banded F_2 systems E_k (even-even) / E~_k (even-odd), their
// closed-form solutions, and the final-matrix row structure.

namespace weylhom::reduced {

using binarith::u64;
using relsys::invariant_violation;
using tabcomb::FamilyInstance;
using tabcomb::SstBasis;

struct ReducedSystem {
  SstBasis columns;
  fpmat::FpMat group1;  // binomial-coefficient equations over (t, r-tuple)
  fpmat::FpMat group2;  // two-term recurrences in (b_2, b_3)
  fpmat::FpMat group3;  // adjacent-letter relations for i >= 3

  fpmat::FpMat stacked() const;
};

ReducedSystem build_reduced_equations(const FamilyInstance& inst);

enum class EkVariant { even_even, even_odd };

// Banded F_2 system in l+1 variables: for each i in 1..l the block of
// equations sum_{j=0}^{s} C(k+i+s-j, s-j) C(i,j) c_{i-j} = 0, s = 1..i.
// For even_even the variable with index i stands for the coefficient at
// slice 2i+1; for even_odd it stands for slice i and k plays the role of
// the odd difference gamma = a - b.
struct EkSystem {
  u64 k = 0;
  u64 l = 1;
  EkVariant variant = EkVariant::even_even;
  fpmat::FpMat matrix;  // rows l(l+1)/2, cols l+1, over F_2
};

EkSystem build_ek(u64 k, u64 l, EkVariant variant);

// Cross-check builder for the even-even system: the unreduced equations
// with gamma = 2k, even-index subsums only, before the mod-2 halving of
// the binomials. Must agree entrywise with build_ek(k, l, even_even).
EkSystem build_ek_unreduced(u64 k, u64 l);

// Solution descriptor: every variable with index in `members` equals one
// free parameter, all others are zero.
struct HSet {
  u64 seed = 0;
  std::vector<u64> members;
  EkVariant variant = EkVariant::even_even;
};

// Exact elimination, then shape recognition. nullopt = zero solution
// only; a solution space of any other shape raises invariant_violation.
std::optional<HSet> solve_ek(const EkSystem& system);

// seed = max_two_complement_target(k, bound), members = its containment
// upset; nullopt when no seed exists.
std::optional<HSet> closed_form_hset(u64 k, u64 bound, EkVariant variant);

// The greedy sequence i_0 < i_1 < ...: start at the largest target of a
// 2-complement and append each index whose gap binomial against some
// earlier member is odd. Must coincide with the closed-form members.
std::vector<u64> nonvanishing_sequence(u64 k, u64 l);

// The column-filtered block at member index s (s >= 1) of the sequence
// for (k, l): rows m = 1..y_t, columns the members y contained in y_t,
// entry C(k + y_t + y - m + 1, y - m + 1) mod 2. Every entry is computed
// both directly and by the digit criterion; disagreement raises
// invariant_violation.
fpmat::FpMat final_matrix(u64 k, u64 l, u64 s);

}  // namespace weylhom::reduced
