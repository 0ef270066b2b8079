#include "weylhom/relsys.hpp"

#include <bit>
#include <string>

namespace weylhom::relsys {

namespace {

using binarith::binom_mod_p;

// C(m, n) mod p with signed arguments; negative n or m means an empty
// term, matching the everywhere-used convention.
u64 sbinom(long long m, long long n, u64 p) {
  if (n < 0 || m < n) return 0;
  return binom_mod_p(static_cast<u64>(m), static_cast<u64>(n), p);
}

void add_term(Expansion& e, std::vector<u64> second_row, u64 coeff, u64 p) {
  if (coeff == 0) return;
  auto [it, inserted] = e.emplace(std::move(second_row),
                                  static_cast<std::uint8_t>(coeff));
  if (!inserted) {
    it->second = static_cast<std::uint8_t>((it->second + coeff) % p);
    if (it->second == 0) e.erase(it);
  }
}

}  // namespace

Expansion expand_phi_x1t(const FamilyInstance& inst, const TableauKey& key,
                         u64 t) {
  if (t < 1 || t > inst.b) throw std::invalid_argument("t out of range");
  Expansion out;
  if (t > inst.min_bd()) return out;

  const u64 p = inst.p;
  const u64 n = inst.letters();
  const u64 b2 = key.second_row[1];
  // Free raise positions: letters s >= 3 currently absent from row two.
  std::vector<std::size_t> free_pos;
  for (std::size_t s = 2; s < n; ++s)
    if (key.second_row[s] == 0) free_pos.push_back(s);

  const long long bb2 = static_cast<long long>(inst.b - b2);
  for (u64 mask = 0; mask < (u64{1} << free_pos.size()); ++mask) {
    long long k = static_cast<long long>(std::popcount(mask));
    if (k > static_cast<long long>(b2)) continue;
    if (static_cast<long long>(t) - k > bb2) continue;
    // All raised-letter binomials are C(1,1) or C(0,0) = 1; the leading
    // coefficient carries the sign and the letter-2 binomial.
    u64 coeff = sbinom(static_cast<long long>(inst.a - b2 + t),
                       static_cast<long long>(t) - k, p);
    if (coeff == 0) continue;
    if (k % 2 == 1) coeff = (p - coeff) % p;
    std::vector<u64> target = key.second_row;
    target[1] = b2 - static_cast<u64>(k);
    for (std::size_t idx = 0; idx < free_pos.size(); ++idx)
      if (mask >> idx & 1) target[free_pos[idx]] += 1;
    add_term(out, std::move(target), coeff, p);
  }
  return out;
}

Expansion expand_phi_xit(const FamilyInstance& inst, const TableauKey& key,
                         u64 i) {
  if (i < 2 || i > inst.d + 1) throw std::invalid_argument("i out of range");
  Expansion out;
  const u64 p = inst.p;
  // Letter indices are 1-based; rows store letter v at slot v-1.
  const long long ai = static_cast<long long>(key.first_row[i - 1]);
  const long long bi = static_cast<long long>(key.second_row[i - 1]);
  const long long ai1 = static_cast<long long>(key.first_row[i]);
  const long long bi1 = static_cast<long long>(key.second_row[i]);

  long long jlo = bi1 >= 1 ? 0 : 1;
  long long jhi = ai1 < 1 ? ai1 : 1;
  for (long long j = jlo; j <= jhi; ++j) {
    u64 coeff = sbinom(ai + j, j, p) * sbinom(bi + 1 - j, 1 - j, p) % p;
    if (coeff == 0) continue;
    std::vector<u64> target = key.second_row;
    target[i - 1] = static_cast<u64>(bi + 1 - j);
    target[i] = static_cast<u64>(bi1 - 1 + j);
    add_term(out, std::move(target), coeff, p);
  }
  return out;
}

RelationSystem build_relation_system(const FamilyInstance& inst) {
  const SstBasis columns = tabcomb::lambda_basis(inst);

  struct Block {
    RelationLabel label;
    SstBasis targets;
  };
  std::vector<Block> blocks;
  for (u64 t = 1; t <= inst.min_bd(); ++t)
    blocks.push_back({{1, t}, tabcomb::weight_basis(inst, inst.moved_weight(1, t))});
  for (u64 i = 2; i <= inst.d + 1; ++i)
    blocks.push_back({{i, 1}, tabcomb::weight_basis(inst, inst.moved_weight(i, 1))});

  std::size_t total_rows = 0;
  for (const auto& bl : blocks) total_rows += bl.targets.size();

  RelationSystem sys{inst, columns,
                     fpmat::FpMat(inst.p, total_rows, columns.size()), {}};
  sys.row_labels.reserve(total_rows);

  std::size_t offset = 0;
  for (const auto& bl : blocks) {
    for (std::size_t r = 0; r < bl.targets.size(); ++r)
      sys.row_labels.push_back(bl.label);
    for (std::size_t col = 0; col < columns.size(); ++col) {
      Expansion e = bl.label.i == 1
                        ? expand_phi_x1t(inst, columns[col], bl.label.t)
                        : expand_phi_xit(inst, columns[col], bl.label.i);
      for (const auto& [second_row, coeff] : e) {
        auto row = bl.targets.index_of_second_row(second_row);
        if (!row)
          throw invariant_violation("expansion target missing from its basis");
        sys.matrix.add_at(offset + *row, col, coeff);
      }
    }
    offset += bl.targets.size();
  }
  return sys;
}

std::vector<CoeffVector> kernel(const RelationSystem& system) {
  std::vector<CoeffVector> out;
  for (auto& v : fpmat::kernel_basis(system.matrix))
    out.push_back(CoeffVector{std::move(v)});
  return out;
}

u64 hom_dimension(const FamilyInstance& inst) {
  auto sys = build_relation_system(inst);
  return sys.matrix.cols - fpmat::rank(sys.matrix);
}

}  // namespace weylhom::relsys
