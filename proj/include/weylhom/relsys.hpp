#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "weylhom/fpmat.hpp"
#include "weylhom/tabcomb.hpp"

// The relation system whose kernel is the Hom space: one row block per
// box-move label (i, t), columns indexed by the canonical source-weight
// tableau list.

namespace weylhom::relsys {

using binarith::u64;
using tabcomb::FamilyInstance;
using tabcomb::SstBasis;
using tabcomb::TableauKey;

// Raised when an internal consistency check fails (a falsification
// signal, not a usage error).
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// A coefficient vector over the canonical source-weight tableau list.
struct CoeffVector {
  std::vector<std::uint8_t> values;
};

struct RelationLabel {
  u64 i = 1;
  u64 t = 1;
  bool operator==(const RelationLabel& o) const = default;
};

struct RelationSystem {
  FamilyInstance inst;
  SstBasis columns;
  fpmat::FpMat matrix;
  std::vector<RelationLabel> row_labels;  // one per row
};

// Expansion of a basis map applied to one relation vector: residues
// keyed by the target key's second-row multiplicities.
using Expansion = std::map<std::vector<u64>, std::uint8_t>;

// Image under the (1, t) box move. Zero when t > min(b, d).
Expansion expand_phi_x1t(const FamilyInstance& inst, const TableauKey& key,
                         u64 t);

// Image under the (i, 1) box move, 2 <= i <= d+1.
Expansion expand_phi_xit(const FamilyInstance& inst, const TableauKey& key,
                         u64 i);

RelationSystem build_relation_system(const FamilyInstance& inst);

// Nullspace basis in canonical reduced form; empty iff the kernel is 0.
std::vector<CoeffVector> kernel(const RelationSystem& system);

u64 hom_dimension(const FamilyInstance& inst);

}  // namespace weylhom::relsys
