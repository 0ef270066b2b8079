#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Base-p digit arithmetic and binary-expansion predicates.
//
// All operations are pure functions on immutable values and are safe to
// call concurrently. Inputs are 64-bit but capped at 2^40; values beyond
// the cap are rejected rather than silently overflowing.

namespace weylhom::binarith {

using u64 = std::uint64_t;

inline constexpr u64 kInputCap = u64{1} << 40;

bool is_prime(u64 p);

// Base-p expansion, least significant digit first. No trailing zero
// digits except for the single-digit representation of 0.
struct DigitSeq {
  std::vector<std::uint32_t> digits;
  u64 p = 2;

  u64 value() const;
};

DigitSeq base_p_digits(u64 m, u64 p);

// C(m, n) mod p, computed digitwise so large m, n never overflow.
// Convention: C(m, n) = 0 when n > m.
u64 binom_mod_p(u64 m, u64 n, u64 p);

// True iff i + k has every binary digit 0..m set, where 2^m is the top
// digit of i. For i = 0 the convention is: true iff k is odd.
bool is_two_complement(u64 k, u64 i);

// True iff every set binary digit of y is set in x.
bool contains_binary(u64 x, u64 y);

// Largest i in [0, bound] with is_two_complement(k, i), if any.
std::optional<u64> max_two_complement_target(u64 k, u64 bound);

// All i with seed <= i <= bound and contains_binary(i, seed), ascending.
std::vector<u64> containment_upset(u64 seed, u64 bound);

// The unique subsequence b_1 < ... < b_s of `positions` such that
// x + sum 2^{b_i} has no set digit at any position in `positions`.
// Precondition: x has at least one set digit among `positions`.
std::vector<std::uint32_t> unique_completion(
    u64 x, const std::vector<std::uint32_t>& positions);

// Given positions l_1 < ... < l_v (v >= 2) and a target whose set digits
// all lie in `positions`, with target < sum 2^{l_i}: the unique
// subsequence whose sum strictly exceeds target and whose difference from
// target has no set digit among {l_2, ..., l_v}.
std::vector<std::uint32_t> unique_exceeding_completion(
    u64 target, const std::vector<std::uint32_t>& positions);

}  // namespace weylhom::binarith
