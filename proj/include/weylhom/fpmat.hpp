#pragma once

#include <cstdint>
#include <vector>

#include "weylhom/binarith.hpp"

// Dense matrices over a prime field, with plain Gauss-Jordan elimination.
// The p = 2 path is bit-packed internally; its observable output is
// identical to the generic byte path.

namespace weylhom::fpmat {

using binarith::u64;

struct FpMat {
  u64 p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> a;  // row-major

  FpMat() = default;
  FpMat(u64 p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), a(r * c, 0) {}

  std::uint8_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  // Adds v (already reduced mod p) into entry (r, c).
  void add_at(std::size_t r, std::size_t c, u64 v) {
    at(r, c) = static_cast<std::uint8_t>((at(r, c) + v) % p);
  }
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(FpMat& m);

std::size_t rank(const FpMat& m);

// Canonical nullspace basis: one vector per free column f (ascending),
// with coordinate f equal to 1. Empty result iff the kernel is zero.
std::vector<std::vector<std::uint8_t>> kernel_basis(const FpMat& m);

// matrix * vec mod p.
std::vector<std::uint8_t> apply(const FpMat& m,
                                const std::vector<std::uint8_t>& vec);

}  // namespace weylhom::fpmat
