#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylhom/reduced.hpp"

using namespace weylhom;
using namespace weylhom::reduced;
using binarith::u64;

TEST_CASE("banded system fixtures") {
  auto h1 = solve_ek(build_ek(4, 10, EkVariant::even_even));
  REQUIRE(h1.has_value());
  CHECK(h1->seed == 3);
  CHECK(h1->members == std::vector<u64>{3, 7});

  auto h2 = solve_ek(build_ek(6, 8, EkVariant::even_even));
  REQUIRE(h2.has_value());
  CHECK(h2->seed == 1);
  CHECK(h2->members == std::vector<u64>{1, 3, 5, 7});

  auto h3 = solve_ek(build_ek(10, 20, EkVariant::even_even));
  REQUIRE(h3.has_value());
  CHECK(h3->seed == 5);
  CHECK(h3->members == std::vector<u64>{5, 7, 13, 15});
}

TEST_CASE("closed-form index sets") {
  auto h1 = closed_form_hset(5, 21, EkVariant::even_odd);
  REQUIRE(h1.has_value());
  CHECK(h1->seed == 10);
  CHECK(h1->members == std::vector<u64>{10, 11, 14, 15});

  auto h2 = closed_form_hset(22, 26, EkVariant::even_odd);
  REQUIRE(h2.has_value());
  CHECK(h2->seed == 9);
  CHECK(h2->members == std::vector<u64>{9, 11, 13, 15, 25});

  auto h3 = closed_form_hset(43, 56, EkVariant::even_odd);
  REQUIRE(h3.has_value());
  CHECK(h3->seed == 20);
  CHECK(h3->members.size() == 12);

  CHECK_FALSE(closed_form_hset(2, 0, EkVariant::even_even).has_value());
}

TEST_CASE("reduced band agrees with the unreduced even-index equations") {
  for (u64 k = 0; k <= 20; ++k)
    for (u64 l = 1; l <= 12; ++l) {
      auto lhs = build_ek(k, l, EkVariant::even_even);
      auto rhs = build_ek_unreduced(k, l);
      CHECK(lhs.matrix.a == rhs.matrix.a);
    }
}

TEST_CASE("elimination matches the closed form exhaustively") {
  for (u64 k = 0; k <= 96; ++k)
    for (u64 l = 1; l <= 32; ++l) {
      auto variant = k % 2 ? EkVariant::even_odd : EkVariant::even_even;
      auto solved = solve_ek(build_ek(k, l, variant));
      auto closed = closed_form_hset(k, l, variant);
      REQUIRE(solved.has_value() == closed.has_value());
      if (solved) {
        CHECK(solved->seed == closed->seed);
        CHECK(solved->members == closed->members);
        CHECK(solved->variant == variant);
      }
    }
}

TEST_CASE("system builder guards") {
  CHECK_THROWS_AS(build_ek(3, 0, EkVariant::even_even), std::invalid_argument);
  CHECK_THROWS_AS(build_ek(3, 5000, EkVariant::even_even), std::invalid_argument);
  CHECK_THROWS_AS(build_ek_unreduced(3, 0), std::invalid_argument);
}

TEST_CASE("greedy sequence equals the closed-form members") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 300; ++n) {
    u64 k = rng() % 4097, l = 1 + rng() % 256;
    auto closed = closed_form_hset(k, l, EkVariant::even_even);
    if (!closed) {
      CHECK_THROWS_AS(nonvanishing_sequence(k, l), std::domain_error);
      continue;
    }
    CHECK(nonvanishing_sequence(k, l) == closed->members);
  }
}

TEST_CASE("final matrix fixture") {
  // k = 10, l = 20: sequence 5, 7, 13, 15.
  CHECK(nonvanishing_sequence(10, 20) == std::vector<u64>{5, 7, 13, 15});

  auto m1 = final_matrix(10, 20, 1);  // block at 7: columns 5, 7
  CHECK(m1.rows == 7);
  CHECK(m1.cols == 2);
  for (u64 m = 1; m <= 7; ++m)
    for (std::size_t j = 0; j < 2; ++j) {
      u64 y = j == 0 ? 5 : 7;
      long long x = static_cast<long long>(y) - static_cast<long long>(m) + 1;
      u64 expect = x < 0 ? 0
                         : binarith::binom_mod_p(10 + 7 + static_cast<u64>(x),
                                                 static_cast<u64>(x), 2);
      CHECK(m1.at(m - 1, j) == expect);
    }

  auto m3 = final_matrix(10, 20, 3);  // block at 15: all four members
  CHECK(m3.rows == 15);
  CHECK(m3.cols == 4);

  CHECK_THROWS_AS(final_matrix(10, 20, 0), std::invalid_argument);
  CHECK_THROWS_AS(final_matrix(10, 20, 4), std::invalid_argument);
}

TEST_CASE("final matrix rows cancel in pairs") {
  std::mt19937_64 rng(29);
  for (int n = 0; n < 100; ++n) {
    u64 k, l;
    std::vector<u64> seq;
    do {
      k = rng() % 4097;
      l = 1 + rng() % 128;
      seq = binarith::max_two_complement_target(k, l)
                ? nonvanishing_sequence(k, l)
                : std::vector<u64>{};
    } while (seq.size() < 2);
    u64 s = 1 + rng() % (seq.size() - 1);
    auto m = final_matrix(k, l, s);
    for (std::size_t r = 0; r < m.rows; ++r) {
      unsigned ones = 0;
      for (std::size_t c = 0; c < m.cols; ++c) ones += m.at(r, c);
      CHECK(ones % 2 == 0);
    }
  }
}

TEST_CASE("reduced equations carve out the same kernel as the full system") {
  for (u64 p : {2, 3, 5})
    for (u64 b : {2, 3, 4})
      for (u64 a = b; a <= b + 4; ++a)
        for (u64 d : {2, 3, 4}) {
          tabcomb::FamilyInstance inst(a, b, d, p);
          auto full = relsys::build_relation_system(inst);
          auto red = build_reduced_equations(inst);
          REQUIRE(red.columns.size() == full.columns.size());
          auto stacked = red.stacked();
          auto full_ker = fpmat::kernel_basis(full.matrix);
          auto red_ker = fpmat::kernel_basis(stacked);
          if (p == 2)
            CHECK(full_ker == red_ker);
          else
            CHECK(full_ker.size() == red_ker.size());
        }
}

TEST_CASE("group shapes for a small instance") {
  tabcomb::FamilyInstance inst(7, 4, 3, 2);
  auto sys = build_reduced_equations(inst);
  CHECK(sys.columns.size() == 8);
  CHECK(sys.stacked().rows ==
        sys.group1.rows + sys.group2.rows + sys.group3.rows);
  CHECK(sys.stacked().cols == 8);
  CHECK(sys.group2.rows > 0);
  CHECK(sys.group3.rows > 0);
}
