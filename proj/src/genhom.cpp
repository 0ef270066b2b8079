#include "weylhom/genhom.hpp"

#include <algorithm>

namespace weylhom::genhom {

namespace {

using reduced::EkVariant;

bool slice_in(const std::vector<u64>& members, u64 slice, bool odd_slices) {
  for (u64 h : members) {
    u64 s = odd_slices ? 2 * h + 1 : h;
    if (s == slice) return true;
  }
  return false;
}

}  // namespace

u64 predicted_dimension(const FamilyInstance& inst) {
  return (inst.p == 2 && inst.a % 2 == 0) ? 1 : 0;
}

std::pair<CoeffVector, HSet> generator_vector(const FamilyInstance& inst) {
  if (inst.p != 2) throw std::invalid_argument("generator exists only for p = 2");
  if (inst.a % 2 != 0)
    throw std::invalid_argument("the space is zero for odd a; no generator");

  HSet hset;
  bool odd_slices;
  if (inst.b % 2 == 0) {
    // Even-even branch: variables sit on the odd slices 1, 3, 5, ...
    const u64 k = (inst.a - inst.b) / 2;
    const u64 l = (inst.min_bd() + 1) / 2 - 1;
    odd_slices = true;
    if (l == 0) {
      // One odd slice only; the single variable is free.
      hset = HSet{0, {0}, EkVariant::even_even};
    } else {
      auto h = reduced::closed_form_hset(k, l, EkVariant::even_even);
      if (!h)
        throw relsys::invariant_violation("missing complement target, even k, l >= 1");
      hset = std::move(*h);
    }
  } else {
    // Even-odd branch: gamma = a - b is odd, so a seed always exists.
    const u64 gamma = inst.a - inst.b;
    auto h = reduced::closed_form_hset(gamma, inst.min_bd(), EkVariant::even_odd);
    if (!h) throw relsys::invariant_violation("missing complement target, odd gamma");
    odd_slices = false;
    hset = std::move(*h);
  }

  const auto basis = tabcomb::lambda_basis(inst);
  CoeffVector gen;
  gen.values.assign(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    u64 slice = inst.b - basis[i].second_row[1];  // boxes moved off letter 2
    if (slice_in(hset.members, slice, odd_slices)) gen.values[i] = 1;
  }
  return {std::move(gen), std::move(hset)};
}

HomReport verify_instance(const FamilyInstance& inst) {
  HomReport report{inst, 0, 0, std::nullopt, std::nullopt, false, ""};
  report.predicted_dim = predicted_dimension(inst);

  auto sys = relsys::build_relation_system(inst);
  auto ker = relsys::kernel(sys);
  report.computed_dim = ker.size();

  if (report.predicted_dim != report.computed_dim) {
    report.failure = "dimension mismatch";
    return report;
  }
  if (report.predicted_dim == 0) {
    report.verified = true;
    return report;
  }

  auto [gen, hset] = generator_vector(inst);
  auto image = fpmat::apply(sys.matrix, gen.values);
  for (std::size_t r = 0; r < image.size(); ++r)
    if (image[r]) {
      report.failure = "generator not annihilated by relation (" +
                       std::to_string(sys.row_labels[r].i) + "," +
                       std::to_string(sys.row_labels[r].t) + ")";
      report.generator = std::move(gen);
      report.hset = std::move(hset);
      return report;
    }
  // Spanning: over F_2 a one-dimensional kernel containing the nonzero
  // generator must have it as its canonical basis vector.
  bool nonzero = std::any_of(gen.values.begin(), gen.values.end(),
                             [](std::uint8_t v) { return v != 0; });
  if (!nonzero || ker.size() != 1 || ker[0].values != gen.values) {
    report.failure = "generator does not span the kernel";
    report.generator = std::move(gen);
    report.hset = std::move(hset);
    return report;
  }
  report.verified = true;
  report.generator = std::move(gen);
  report.hset = std::move(hset);
  return report;
}

}  // namespace weylhom::genhom
