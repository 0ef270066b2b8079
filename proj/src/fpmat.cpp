#include "weylhom/fpmat.hpp"

#include <stdexcept>

namespace weylhom::fpmat {

namespace {

// Packed GF(2) elimination. Pivot selection (leftmost column, first
// nonzero row) matches the generic path, and reduced echelon form is
// unique anyway.
struct PackedF2 {
  std::size_t rows, cols, words;
  std::vector<u64> bits;

  explicit PackedF2(const FpMat& m)
      : rows(m.rows), cols(m.cols), words((m.cols + 63) / 64),
        bits(m.rows * words, 0) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (m.at(r, c)) bits[r * words + c / 64] |= u64{1} << (c % 64);
  }

  bool get(std::size_t r, std::size_t c) const {
    return bits[r * words + c / 64] >> (c % 64) & 1;
  }

  void xor_rows(std::size_t dst, std::size_t src) {
    u64* d = &bits[dst * words];
    const u64* s = &bits[src * words];
    for (std::size_t w = 0; w < words; ++w) d[w] ^= s[w];
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    for (std::size_t w = 0; w < words; ++w)
      std::swap(bits[r1 * words + w], bits[r2 * words + w]);
  }

  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t pr = rank;
      while (pr < rows && !get(pr, c)) ++pr;
      if (pr == rows) continue;
      if (pr != rank) swap_rows(pr, rank);
      for (std::size_t r = 0; r < rows; ++r)
        if (r != rank && get(r, c)) xor_rows(r, rank);
      pivots.push_back(c);
      ++rank;
    }
    return pivots;
  }

  void store(FpMat& m) const {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.at(r, c) = get(r, c) ? 1 : 0;
  }
};

u64 inv_mod_p(u64 x, u64 p) {
  // p is prime and tiny here; Fermat by repeated squaring.
  u64 r = 1, e = p - 2, b = x % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::vector<std::size_t> rref_generic(FpMat& m) {
  const u64 p = m.p;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pr = rank;
    while (pr < m.rows && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != rank)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(pr, j), m.at(rank, j));
    u64 inv = inv_mod_p(m.at(rank, c), p);
    if (inv != 1)
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(rank, j) = static_cast<std::uint8_t>(m.at(rank, j) * inv % p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      u64 f = m.at(r, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) {
        u64 v = m.at(r, j) + (p - f % p) * m.at(rank, j) % p;
        m.at(r, j) = static_cast<std::uint8_t>(v % p);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(FpMat& m) {
  if (!binarith::is_prime(m.p)) throw std::invalid_argument("p not prime");
  if (m.p == 2) {
    PackedF2 packed(m);
    auto pivots = packed.rref();
    packed.store(m);
    return pivots;
  }
  return rref_generic(m);
}

std::size_t rank(const FpMat& m) {
  FpMat copy = m;
  return rref(copy).size();
}

std::vector<std::vector<std::uint8_t>> kernel_basis(const FpMat& m) {
  FpMat red = m;
  auto pivots = rref(red);
  const u64 p = m.p;
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      u64 e = red.at(r, f);
      if (e) v[pivots[r]] = static_cast<std::uint8_t>((p - e) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint8_t> apply(const FpMat& m,
                                const std::vector<std::uint8_t>& vec) {
  if (vec.size() != m.cols) throw std::invalid_argument("size mismatch");
  std::vector<std::uint8_t> out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    u64 acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c) acc += u64{m.at(r, c)} * vec[c];
    out[r] = static_cast<std::uint8_t>(acc % m.p);
  }
  return out;
}

}  // namespace weylhom::fpmat
