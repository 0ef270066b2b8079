#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "weylhom/binarith.hpp"

using namespace weylhom::binarith;
using boost::multiprecision::cpp_int;

TEST_CASE("base-p digits") {
  CHECK(base_p_digits(5, 2).digits == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(base_p_digits(0, 3).digits == std::vector<std::uint32_t>{0});
  CHECK(base_p_digits(22, 2).digits == std::vector<std::uint32_t>{0, 1, 1, 0, 1});
  CHECK(base_p_digits(22, 2).value() == 22);
  CHECK_THROWS_AS(base_p_digits(5, 4), std::invalid_argument);
}

TEST_CASE("binomial coefficients mod p, spot values") {
  CHECK(binom_mod_p(7, 4, 2) == 1);
  CHECK(binom_mod_p(3, 2, 2) == 1);
  CHECK(binom_mod_p(123456, 0, 5) == 1);
  CHECK(binom_mod_p(10, 3, 3) == 120 % 3);
  CHECK(binom_mod_p(3, 5, 7) == 0);  // n > m convention
}

TEST_CASE("binomials agree with exact Pascal recursion") {
  const std::size_t N = 1025;
  std::vector<cpp_int> row{1};
  for (std::size_t m = 0; m < N; ++m) {
    for (u64 p : {2, 3, 5, 7})
      for (std::size_t n = 0; n <= m; ++n)
        CHECK(binom_mod_p(m, n, p) ==
              static_cast<u64>(row[n] % static_cast<unsigned>(p)));
    std::vector<cpp_int> next(m + 2, 1);
    for (std::size_t n = 1; n <= m; ++n) next[n] = row[n - 1] + row[n];
    row = std::move(next);
  }
}

TEST_CASE("even-over-odd and shared-digit vanishing mod 2") {
  for (u64 m = 0; m <= 512; m += 2)
    for (u64 n = 1; n <= m; n += 2) CHECK(binom_mod_p(m, n, 2) == 0);
  for (u64 m = 0; m <= 256; ++m)
    for (u64 n = 0; n <= 256; ++n)
      if (m & n) CHECK(binom_mod_p(m + n, n, 2) == 0);
}

TEST_CASE("2-complement predicate") {
  CHECK(is_two_complement(6, 9));
  CHECK_FALSE(is_two_complement(5, 9));
  CHECK(is_two_complement(3, 0));
  CHECK_FALSE(is_two_complement(0, 0));  // even k never complements 0
}

TEST_CASE("binary containment and the gap binomial") {
  CHECK(contains_binary(11, 9));
  for (u64 x = 0; x < 64; ++x) CHECK(contains_binary(x, 0));
  for (u64 s = 1; s <= 256; ++s)
    for (u64 t = 1; t <= s; ++t)
      CHECK(contains_binary(s, t) == (binom_mod_p(s, s - t, 2) == 1));
}

TEST_CASE("maximal complement targets") {
  CHECK(max_two_complement_target(5, 21) == 10);
  CHECK(max_two_complement_target(22, 26) == 9);
  CHECK(max_two_complement_target(43, 56) == 20);
  CHECK_FALSE(max_two_complement_target(2, 0).has_value());
}

TEST_CASE("containment upsets") {
  CHECK(containment_upset(20, 56) ==
        std::vector<u64>{20, 21, 22, 23, 28, 29, 30, 31, 52, 53, 54, 55});
  CHECK(containment_upset(10, 21) == std::vector<u64>{10, 11, 14, 15});
  CHECK(containment_upset(9, 26) == std::vector<u64>{9, 11, 13, 15, 25});
  CHECK(containment_upset(0, 3) == std::vector<u64>{0, 1, 2, 3});
}

namespace {

// Exhaustive subset search used as the oracle for both completion
// operations.
std::vector<std::vector<std::uint32_t>> completions_brute(
    u64 x, const std::vector<std::uint32_t>& positions, u64 pmask) {
  std::vector<std::vector<std::uint32_t>> found;
  for (u64 sub = 0; sub < (u64{1} << positions.size()); ++sub) {
    u64 add = 0;
    std::vector<std::uint32_t> subset;
    for (std::size_t i = 0; i < positions.size(); ++i)
      if (sub >> i & 1) {
        add += u64{1} << positions[i];
        subset.push_back(positions[i]);
      }
    if (((x + add) & pmask) == 0) found.push_back(subset);
  }
  return found;
}

std::vector<std::uint32_t> mask_to_positions(u64 mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t bit = 0; bit < 16; ++bit)
    if (mask >> bit & 1) out.push_back(bit);
  return out;
}

}  // namespace

TEST_CASE("completion: fixed examples") {
  CHECK(unique_completion(8, {3}) == std::vector<std::uint32_t>{3});
  CHECK(unique_completion(5, {0, 2}) == std::vector<std::uint32_t>{0, 2});
  CHECK_THROWS_AS(unique_completion(8, {0, 1}), std::domain_error);
}

TEST_CASE("completion uniqueness vs brute force") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    u64 pmask = 0;
    while (pmask == 0) pmask = rng() % 4096;
    auto positions = mask_to_positions(pmask);
    u64 x = rng() % 4096;
    if ((x & pmask) == 0) x |= u64{1} << positions[rng() % positions.size()];
    auto found = completions_brute(x, positions, pmask);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == unique_completion(x, positions));
  }
}

TEST_CASE("exceeding completion: fixed examples") {
  CHECK(unique_exceeding_completion(2, {1, 3}) == std::vector<std::uint32_t>{3});
  CHECK(unique_exceeding_completion(5, {0, 2, 4}) == std::vector<std::uint32_t>{4});
  CHECK_THROWS_AS(unique_exceeding_completion(0, {1, 3}), std::domain_error);
  CHECK_THROWS_AS(unique_exceeding_completion(10, {1, 3}), std::domain_error);
}

TEST_CASE("exceeding completion uniqueness vs brute force") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    u64 pmask = 0;
    while (std::popcount(pmask) < 2) pmask = rng() % 4096;
    auto positions = mask_to_positions(pmask);
    u64 target = 0;
    while (target == 0 || target == pmask) target = rng() & pmask;
    u64 dead = pmask ^ (u64{1} << positions[0]);
    std::vector<std::vector<std::uint32_t>> found;
    for (u64 sub = 0; sub < (u64{1} << positions.size()); ++sub) {
      u64 add = 0;
      std::vector<std::uint32_t> subset;
      for (std::size_t i = 0; i < positions.size(); ++i)
        if (sub >> i & 1) {
          add += u64{1} << positions[i];
          subset.push_back(positions[i]);
        }
      if (add > target && ((add - target) & dead) == 0) found.push_back(subset);
    }
    REQUIRE(found.size() == 1);
    CHECK(found[0] == unique_exceeding_completion(target, positions));
  }
}

TEST_CASE("difference of equal-length power sums keeps a high floor") {
  // For ascending positions a_1 < ... < a_n and b_1 < ... < b_n with
  // distinct sums, the least set digit of the difference is at least
  // min(a_1, b_1).
  std::mt19937_64 rng(13);
  for (int n = 0; n < 1000; ++n) {
    u64 am = 0, bm = 0;
    while (am == 0) am = rng() % 65536;
    while (std::popcount(bm) != std::popcount(am) || bm == am)
      bm = rng() % 65536;
    u64 diff = am > bm ? am - bm : bm - am;
    auto least = static_cast<std::uint32_t>(std::countr_zero(diff));
    auto floor_pos = std::min(std::countr_zero(am), std::countr_zero(bm));
    CHECK(least >= static_cast<std::uint32_t>(floor_pos));
  }
}

TEST_CASE("interval complement plus interleaved digits keeps an allowed digit") {
  // For b_0 < ... < b_s and a nonempty c_1 < ... < c_r inside [b_0, b_s),
  // the sum of 2^l over l in [b_0, b_s] \ {b_1..b_s} plus the c-powers
  // has a set digit among {b_1..b_s} union {c_1..c_r}.
  std::mt19937_64 rng(17);
  for (int n = 0; n < 500; ++n) {
    u64 bm = 0;
    while (std::popcount(bm) < 2) bm = rng() % 4096;
    auto bpos = mask_to_positions(bm);
    std::uint32_t b0 = bpos.front(), bs = bpos.back();
    u64 cmask = 0;
    while (cmask == 0)
      cmask = rng() & ((u64{1} << bs) - (u64{1} << b0));  // bits in [b0, bs)
    auto cpos = mask_to_positions(cmask);
    u64 interval = (u64{2} << bs) - (u64{1} << b0);
    u64 upper = bm ^ (u64{1} << b0);  // b_1..b_s
    u64 sum = interval & ~upper;
    for (auto c : cpos) sum += u64{1} << c;
    CHECK((sum & (upper | cmask)) != 0);
  }
}

TEST_CASE("input caps are enforced") {
  CHECK_THROWS_AS(binom_mod_p(u64{1} << 41, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_two_complement(u64{1} << 41, 1), std::invalid_argument);
}
