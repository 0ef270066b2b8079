#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylhom/genhom.hpp"

using namespace weylhom;
using namespace weylhom::genhom;
using binarith::u64;
using tabcomb::FamilyInstance;

TEST_CASE("predicted dimension") {
  CHECK(predicted_dimension(FamilyInstance(6, 3, 2, 2)) == 1);
  CHECK(predicted_dimension(FamilyInstance(7, 3, 2, 2)) == 0);
  CHECK(predicted_dimension(FamilyInstance(6, 3, 2, 3)) == 0);
  CHECK(predicted_dimension(FamilyInstance(30, 8, 8, 2)) == 1);
}

TEST_CASE("generator preconditions") {
  CHECK_THROWS_AS(generator_vector(FamilyInstance(6, 3, 2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generator_vector(FamilyInstance(7, 3, 2, 2)),
                  std::invalid_argument);
}

TEST_CASE("odd second row: generator from the odd-difference index set") {
  FamilyInstance inst(6, 3, 2, 2);
  auto [gen, hset] = generator_vector(inst);
  CHECK(hset.variant == reduced::EkVariant::even_odd);
  CHECK(hset.seed == 0);
  CHECK(hset.members == std::vector<u64>{0, 1, 2});
  // All slices allowed: the generator is supported everywhere.
  CHECK(gen.values == std::vector<std::uint8_t>{1, 1, 1, 1});

  auto report = verify_instance(inst);
  CHECK(report.verified);
  CHECK(report.computed_dim == 1);
  CHECK(report.failure.empty());
}

TEST_CASE("even second row: support sits on odd slices only") {
  FamilyInstance inst(6, 4, 4, 2);
  auto [gen, hset] = generator_vector(inst);
  CHECK(hset.variant == reduced::EkVariant::even_even);
  CHECK(hset.members == std::vector<u64>{0, 1});  // slices 1 and 3
  const auto basis = tabcomb::lambda_basis(inst);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    u64 slice = inst.b - basis[i].second_row[1];
    CHECK(gen.values[i] == ((slice == 1 || slice == 3) ? 1 : 0));
  }
  CHECK(verify_instance(inst).verified);
}

TEST_CASE("degenerate even branch: a single odd slice") {
  // min(b, d) = 2 leaves one odd slice; its coefficient is free.
  FamilyInstance inst(6, 2, 3, 2);
  auto [gen, hset] = generator_vector(inst);
  CHECK(hset.members == std::vector<u64>{0});
  const auto basis = tabcomb::lambda_basis(inst);
  for (std::size_t i = 0; i < basis.size(); ++i)
    CHECK(gen.values[i] == (inst.b - basis[i].second_row[1] == 1 ? 1 : 0));
  CHECK(verify_instance(inst).verified);
}

TEST_CASE("zero spaces verify without a generator") {
  auto r1 = verify_instance(FamilyInstance(5, 5, 5, 2));
  CHECK(r1.verified);
  CHECK(r1.computed_dim == 0);
  CHECK_FALSE(r1.generator.has_value());

  auto r2 = verify_instance(FamilyInstance(9, 4, 3, 3));
  CHECK(r2.verified);
  CHECK(r2.computed_dim == 0);
}

TEST_CASE("verification across a small grid") {
  for (u64 p : {2, 3, 5})
    for (u64 b = 2; b <= 5; ++b)
      for (u64 a = b; a <= b + 6; ++a)
        for (u64 d = 2; d <= 5; ++d) {
          auto report = verify_instance(FamilyInstance(a, b, d, p));
          CHECK(report.verified);
          CHECK(report.predicted_dim == report.computed_dim);
          if (report.predicted_dim == 1) {
            REQUIRE(report.generator.has_value());
            REQUIRE(report.hset.has_value());
            // Support slices are exactly the named ones.
            const auto basis = tabcomb::lambda_basis(report.inst);
            bool odd_slices = report.hset->variant == reduced::EkVariant::even_even;
            for (std::size_t i = 0; i < basis.size(); ++i) {
              u64 slice = report.inst.b - basis[i].second_row[1];
              bool in = false;
              for (u64 h : report.hset->members)
                in = in || (odd_slices ? 2 * h + 1 : h) == slice;
              CHECK(report.generator->values[i] == (in ? 1 : 0));
            }
          }
        }
}
