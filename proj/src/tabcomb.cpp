#include "weylhom/tabcomb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylhom::tabcomb {

FamilyInstance::FamilyInstance(u64 a_, u64 b_, u64 d_, u64 p_)
    : a(a_), b(b_), d(d_), p(p_) {
  if (a >= binarith::kInputCap || b >= binarith::kInputCap ||
      d >= binarith::kInputCap)
    throw std::invalid_argument("instance parameter exceeds the 2^40 cap");
  if (b < 2 || d < 2)
    throw std::invalid_argument("unsupported regime: need b >= 2 and d >= 2");
  if (a < b) throw std::invalid_argument("need a >= b");
  if (d > 16) throw std::invalid_argument("d > 16 is beyond the dense-matrix cap");
  if (!binarith::is_prime(p)) throw std::invalid_argument("p must be prime");
}

std::vector<u64> FamilyInstance::source_weight() const {
  std::vector<u64> w(letters(), 1);
  w[0] = a;
  w[1] = b;
  return w;
}

std::vector<u64> FamilyInstance::moved_weight(u64 i, u64 t) const {
  if (i < 1 || i > d + 1) throw std::invalid_argument("move index out of range");
  std::vector<u64> w = source_weight();
  if (w[i] < t) throw std::invalid_argument("move count exceeds the row below");
  w[i - 1] += t;
  w[i] -= t;
  return w;
}

std::string TableauKey::to_string() const {
  auto row = [](const std::vector<u64>& counts) {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      if (!s.empty()) s += ' ';
      s += std::to_string(i + 1);
      if (counts[i] > 1) s += '^' + std::to_string(counts[i]);
    }
    return s;
  };
  return row(first_row) + "/" + row(second_row);
}

SstBasis::SstBasis(std::vector<TableauKey> keys) : keys_(std::move(keys)) {
  for (std::size_t i = 0; i < keys_.size(); ++i)
    index_.emplace(keys_[i].second_row, i);
}

std::optional<std::size_t> SstBasis::index_of_second_row(
    const std::vector<u64>& second_row) const {
  auto it = index_.find(second_row);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<TableauKey> enumerate_weight_sst(const FamilyInstance& inst,
                                             const std::vector<long long>& weight) {
  const u64 n = inst.letters();
  if (weight.size() != n) throw std::invalid_argument("weight length mismatch");
  long long total = 0;
  for (auto w : weight) {
    if (w < 0) throw std::invalid_argument("weight entry is negative");
    total += w;
  }
  if (static_cast<u64>(total) != inst.total())
    throw std::invalid_argument("weight total mismatch");

  std::vector<u64> w(weight.begin(), weight.end());
  std::vector<TableauKey> out;
  std::vector<u64> second(n, 0);

  // Choose second-row counts y_2..y_{d+2} with y_s <= weight_s summing
  // to b; the first row is the complement. Letter 1 stays in row one.
  auto emit = [&] {
    TableauKey key;
    key.second_row = second;
    key.first_row.resize(n);
    for (std::size_t s = 0; s < n; ++s) key.first_row[s] = w[s] - second[s];
    out.push_back(std::move(key));
  };
  // Suffix capacities so dead branches are pruned.
  std::vector<u64> suffix(n + 1, 0);
  for (std::size_t s = n; s-- > 2;) suffix[s] = suffix[s + 1] + w[s];

  auto rec = [&](auto&& self, std::size_t s, u64 remaining) -> void {
    if (s == n) {
      if (remaining == 0) emit();
      return;
    }
    u64 lo = remaining > suffix[s + 1] ? remaining - suffix[s + 1] : 0;
    u64 hi = std::min(w[s], remaining);
    for (u64 y = lo; y <= hi; ++y) {
      second[s] = y;
      self(self, s + 1, remaining - y);
    }
    second[s] = 0;
  };

  // Descending letter-2 count first, then the tail lexicographically.
  u64 y2_hi = std::min(w[1], inst.b);
  u64 y2_lo = inst.b > suffix[2] ? inst.b - suffix[2] : 0;
  for (u64 y2 = y2_hi + 1; y2-- > y2_lo;) {
    second[1] = y2;
    rec(rec, 2, inst.b - y2);
  }
  return out;
}

std::vector<TableauKey> enumerate_weight_lambda_sst(const FamilyInstance& inst) {
  auto w = inst.source_weight();
  return enumerate_weight_sst(inst, std::vector<long long>(w.begin(), w.end()));
}

SstBasis lambda_basis(const FamilyInstance& inst) {
  return SstBasis(enumerate_weight_lambda_sst(inst));
}

SstBasis weight_basis(const FamilyInstance& inst, const std::vector<u64>& weight) {
  return SstBasis(
      enumerate_weight_sst(inst, std::vector<long long>(weight.begin(), weight.end())));
}

std::vector<Shuffle> shuffles(u64 s, u64 t) {
  const u64 n = s + t;
  if (n < 1) throw std::invalid_argument("need s + t >= 1");
  if (n > 40) throw std::invalid_argument("shuffle size too large");
  std::vector<Shuffle> out;
  // A shuffle is determined by the image set of the first block.
  std::vector<std::uint32_t> head(s);
  std::iota(head.begin(), head.end(), 1);
  auto emit = [&] {
    Shuffle sh;
    sh.split = static_cast<std::uint32_t>(s);
    sh.image.assign(head.begin(), head.end());
    std::vector<bool> used(n + 1, false);
    for (auto v : head) used[v] = true;
    for (std::uint32_t v = 1; v <= n; ++v)
      if (!used[v]) sh.image.push_back(v);
    out.push_back(std::move(sh));
  };
  if (s == 0) {
    emit();
    return out;
  }
  while (true) {
    emit();
    // Next s-combination of {1..n} in lexicographic order.
    std::size_t i = s;
    while (i-- > 0) {
      if (head[i] < n - (s - 1 - i)) {
        ++head[i];
        for (std::size_t j = i + 1; j < s; ++j) head[j] = head[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

TableauKey tableau_from_shuffle(const FamilyInstance& inst, u64 h,
                                const Shuffle& sigma) {
  if (h > inst.min_bd()) throw std::invalid_argument("h out of range");
  if (sigma.image.size() != inst.d || sigma.split != inst.d - h)
    throw std::invalid_argument("shuffle does not match (d-h, h)");
  const u64 n = inst.letters();
  TableauKey key;
  key.first_row.assign(n, 0);
  key.second_row.assign(n, 0);
  key.first_row[0] = inst.a;
  key.first_row[1] = h;
  key.second_row[1] = inst.b - h;
  // Letter for slot j of the permutation is j + 2 (1-based letters).
  for (std::size_t j = 0; j < inst.d; ++j) {
    u64 letter = sigma.image[j] + 2;
    if (j < inst.d - h)
      key.first_row[letter - 1] = 1;
    else
      key.second_row[letter - 1] = 1;
  }
  return key;
}

}  // namespace weylhom::tabcomb
