#include "weylhom/reduced.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace weylhom::reduced {

namespace {

using binarith::binom_mod_p;
using binarith::contains_binary;
using binarith::containment_upset;
using binarith::max_two_complement_target;

u64 sbinom(long long m, long long n, u64 p) {
  if (n < 0 || m < n) return 0;
  return binom_mod_p(static_cast<u64>(m), static_cast<u64>(n), p);
}

void set_entry(fpmat::FpMat& m, std::size_t row,
               const tabcomb::SstBasis& columns,
               const std::vector<u64>& second_row, u64 coeff) {
  if (coeff == 0) return;
  auto col = columns.index_of_second_row(second_row);
  if (!col) throw invariant_violation("reduced equation hits an unknown key");
  m.add_at(row, *col, coeff);
}

}  // namespace

fpmat::FpMat ReducedSystem::stacked() const {
  fpmat::FpMat out(group1.p, group1.rows + group2.rows + group3.rows,
                   group1.cols);
  std::size_t r = 0;
  for (const auto* g : {&group1, &group2, &group3}) {
    std::copy(g->a.begin(), g->a.end(), out.a.begin() + static_cast<long>(r * out.cols));
    r += g->rows;
  }
  return out;
}

ReducedSystem build_reduced_equations(const FamilyInstance& inst) {
  const u64 p = inst.p;
  const u64 d = inst.d;
  const u64 b = inst.b;
  const u64 min_bd = inst.min_bd();
  ReducedSystem sys;
  sys.columns = tabcomb::lambda_basis(inst);
  const std::size_t w = sys.columns.size();

  // Group 1: for each t in 1..min(b,d) and each 0/1 tuple (r_3..r_{d+2})
  // with t <= r <= min(b,d), the alternating binomial sum over subsets
  // k of the r-support, hitting the key (b+k-r, r_3-k_3, ...).
  {
    std::vector<std::pair<u64, u64>> rows;  // (t, r-mask)
    for (u64 t = 1; t <= min_bd; ++t)
      for (u64 rmask = 0; rmask < (u64{1} << d); ++rmask) {
        u64 r = std::popcount(rmask);
        if (r >= t && r <= min_bd) rows.emplace_back(t, rmask);
      }
    sys.group1 = fpmat::FpMat(p, rows.size(), w);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      auto [t, rmask] = rows[row];
      u64 r = std::popcount(rmask);
      for (u64 kmask = rmask;; kmask = (kmask - 1) & rmask) {
        u64 k = std::popcount(kmask);
        u64 coeff = sbinom(static_cast<long long>(inst.a - b + r + t - k),
                           static_cast<long long>(t) - static_cast<long long>(k), p);
        if (coeff && k % 2 == 1) coeff = (p - coeff) % p;
        if (coeff) {
          std::vector<u64> key(inst.letters(), 0);
          key[1] = b + k - r;
          for (u64 s = 0; s < d; ++s) key[s + 2] = (rmask >> s & 1) - (kmask >> s & 1);
          set_entry(sys.group1, row, sys.columns, key, coeff);
        }
        if (kmask == 0) break;
      }
    }
  }

  // Group 2: (b-q+1) c_{q,0,tail} + q c_{q-1,1,tail} = 0 for each q in
  // [b - min(b, d-1), b] and 0/1 tail (b_4..) summing to b - q.
  {
    u64 qmin = b - std::min(b, d - 1);
    std::vector<std::pair<u64, u64>> rows;  // (q, tail mask over d-1 letters)
    for (u64 q = qmin; q <= b; ++q)
      for (u64 tmask = 0; tmask < (u64{1} << (d - 1)); ++tmask)
        if (static_cast<u64>(std::popcount(tmask)) == b - q)
          rows.emplace_back(q, tmask);
    sys.group2 = fpmat::FpMat(p, rows.size(), w);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      auto [q, tmask] = rows[row];
      std::vector<u64> key(inst.letters(), 0);
      for (u64 s = 0; s + 1 < d; ++s) key[s + 3] = tmask >> s & 1;
      key[1] = q;
      key[2] = 0;
      set_entry(sys.group2, row, sys.columns, key, (b - q + 1) % p);
      if (q >= 1 && q % p != 0) {
        key[1] = q - 1;
        key[2] = 1;
        set_entry(sys.group2, row, sys.columns, key, q % p);
      }
    }
  }

  // Group 3: for each adjacent letter pair (i, i+1), i in 3..d+1, and
  // each split q of their combined count, the epsilon-weighted sum:
  // q = 0 or 2 gives 2c = 0, q = 1 gives c_{...10...} + c_{...01...} = 0.
  {
    struct Row {
      u64 i, q, b2, rest;  // rest: 0/1 tuple over letters != i, i+1
    };
    std::vector<Row> rows;
    for (u64 i = 3; i <= d + 1; ++i)
      for (u64 q = 0; q <= 2; ++q)
        for (u64 rest = 0; rest < (u64{1} << (d - 2)); ++rest) {
          u64 ones = std::popcount(rest);
          if (ones + q > b) continue;
          u64 b2 = b - q - ones;
          if (b2 > b) continue;
          rows.push_back({i, q, b2, rest});
        }
    sys.group3 = fpmat::FpMat(p, rows.size(), w);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const Row& rw = rows[row];
      std::vector<u64> key(inst.letters(), 0);
      key[1] = rw.b2;
      std::size_t bit = 0;
      for (u64 s = 3; s <= d + 2; ++s) {
        if (s == rw.i || s == rw.i + 1) continue;
        key[s - 1] = rw.rest >> bit & 1;
        ++bit;
      }
      for (u64 bi = 0; bi <= 1; ++bi) {
        u64 bi1 = rw.q >= bi ? rw.q - bi : 2;  // sentinel for invalid
        if (bi1 > 1) continue;
        u64 eps = (bi == bi1 ? 2 : 1) % p;
        key[rw.i - 1] = bi;
        key[rw.i] = bi1;
        set_entry(sys.group3, row, sys.columns, key, eps);
      }
    }
  }
  return sys;
}

EkSystem build_ek(u64 k, u64 l, EkVariant variant) {
  if (l < 1) throw std::invalid_argument("need l >= 1");
  if (l > 4096) throw std::invalid_argument("l too large for dense build");
  EkSystem sys{k, l, variant, fpmat::FpMat(2, l * (l + 1) / 2, l + 1)};
  std::size_t row = 0;
  for (u64 i = 1; i <= l; ++i)
    for (u64 s = 1; s <= i; ++s, ++row)
      for (u64 j = 0; j <= s; ++j) {
        u64 c = binom_mod_p(k + i + s - j, s - j, 2) & binom_mod_p(i, j, 2);
        if (c) sys.matrix.at(row, i - j) ^= 1;
      }
  return sys;
}

EkSystem build_ek_unreduced(u64 k, u64 l) {
  if (l < 1) throw std::invalid_argument("need l >= 1");
  const u64 gamma = 2 * k;
  EkSystem sys{k, l, EkVariant::even_even, fpmat::FpMat(2, l * (l + 1) / 2, l + 1)};
  std::size_t row = 0;
  // Indices before halving: slice r_i = 2i+1, box count t = 2s, subset
  // size j = 2j'; odd j drops out because C(r, j) is then even.
  for (u64 i = 1; i <= l; ++i) {
    u64 r = 2 * i + 1;
    for (u64 s = 1; s <= i; ++s, ++row) {
      u64 t = 2 * s;
      for (u64 j = 0; j <= t; j += 2) {
        u64 c = binom_mod_p(gamma + r + t - j, t - j, 2) & binom_mod_p(r, j, 2);
        if (c) sys.matrix.at(row, i - j / 2) ^= 1;
      }
    }
  }
  return sys;
}

std::optional<HSet> solve_ek(const EkSystem& system) {
  auto basis = fpmat::kernel_basis(system.matrix);
  if (basis.empty()) return std::nullopt;
  if (basis.size() > 1)
    throw invariant_violation("solution space has dimension " +
                              std::to_string(basis.size()));
  std::vector<u64> members;
  for (std::size_t idx = 0; idx < basis[0].size(); ++idx)
    if (basis[0][idx]) members.push_back(idx);
  u64 seed = members.front();
  if (members != containment_upset(seed, system.l))
    throw invariant_violation("solution support is not a containment upset");
  return HSet{seed, std::move(members), system.variant};
}

std::optional<HSet> closed_form_hset(u64 k, u64 bound, EkVariant variant) {
  auto seed = max_two_complement_target(k, bound);
  if (!seed) return std::nullopt;
  return HSet{*seed, containment_upset(*seed, bound), variant};
}

std::vector<u64> nonvanishing_sequence(u64 k, u64 l) {
  auto seed = max_two_complement_target(k, l);
  if (!seed) throw std::domain_error("no complement target exists in [0, l]");
  std::vector<u64> seq{*seed};
  for (u64 i = *seed + 1; i <= l; ++i) {
    bool hit = false;
    for (u64 prev : seq)
      if (binom_mod_p(i, i - prev, 2)) {
        hit = true;
        break;
      }
    if (hit) seq.push_back(i);
  }
  return seq;
}

fpmat::FpMat final_matrix(u64 k, u64 l, u64 s) {
  auto members = nonvanishing_sequence(k, l);
  if (s < 1 || s >= members.size())
    throw std::invalid_argument("s must index a later sequence member");
  const u64 is = members[s];
  const u64 i0 = members[0];

  std::vector<u64> y;
  for (u64 m : members) {
    if (m > is) break;
    if (contains_binary(is, m)) y.push_back(m);
  }
  const u64 yt = y.back();

  // Digit data for the independent entry criterion: the positions added
  // to the seed, split into the lowest one and the rest.
  const u64 added = is & ~i0;
  const u64 low = added & (~added + 1);
  const u64 dead_mask = (added ^ low) | (low - 1);

  fpmat::FpMat out(2, yt, y.size());
  for (u64 m = 1; m <= yt; ++m)
    for (std::size_t j = 0; j < y.size(); ++j) {
      long long x = static_cast<long long>(y[j]) - static_cast<long long>(m) + 1;
      u64 direct = x < 0 ? 0
                         : binom_mod_p(k + yt + static_cast<u64>(x),
                                       static_cast<u64>(x), 2);
      u64 digit = x < 0 ? 0
                        : (x == 0 ? 1
                                  : ((static_cast<u64>(x) & dead_mask) == 0 ? 1 : 0));
      if (direct != digit)
        throw invariant_violation("final-matrix entry criteria disagree");
      out.at(m - 1, j) = static_cast<std::uint8_t>(direct);
    }
  return out;
}

}  // namespace weylhom::reduced
