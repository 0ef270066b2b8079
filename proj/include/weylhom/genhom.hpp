#pragma once

#include <optional>
#include <string>

#include "weylhom/reduced.hpp"
#include "weylhom/relsys.hpp"

// Dimension prediction and the closed-form generator, cross-validated
// against the brute-force kernel.

namespace weylhom::genhom {

using binarith::u64;
using reduced::HSet;
using relsys::CoeffVector;
using tabcomb::FamilyInstance;

struct HomReport {
  FamilyInstance inst;
  u64 predicted_dim = 0;
  u64 computed_dim = 0;
  std::optional<CoeffVector> generator;
  std::optional<HSet> hset;
  bool verified = false;
  std::string failure;  // first failing check, empty when verified
};

// 1 iff p = 2 and a even, 0 otherwise.
u64 predicted_dimension(const FamilyInstance& inst);

// The 0/1 vector supported on the slices named by the closed-form index
// set: b even -> slices 2h+1 for members h with k = (a-b)/2, bound the
// odd-slice count minus one; b odd -> slices h directly with k = a-b,
// bound min(b, d). Built from digit combinatorics only, never from the
// kernel. Requires p = 2 and a even.
std::pair<CoeffVector, HSet> generator_vector(const FamilyInstance& inst);

// Full pipeline: computed dimension, kernel membership of the generator,
// and spanning.
HomReport verify_instance(const FamilyInstance& inst);

}  // namespace weylhom::genhom
