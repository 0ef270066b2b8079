#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylhom/binarith.hpp"

// Problem instances, two-row row-semistandard tableaux encoded by letter
// multiplicities, and shuffle permutations.

namespace weylhom::tabcomb {

using binarith::u64;

// Parameters (a, b, d, p) for the source shape (a, b, 1^d) and target
// shape (a+d, b). Validated on construction.
struct FamilyInstance {
  u64 a = 2, b = 2, d = 2, p = 2;

  FamilyInstance(u64 a_, u64 b_, u64 d_, u64 p_);

  u64 letters() const { return d + 2; }
  u64 total() const { return a + b + d; }
  u64 min_bd() const { return b < d ? b : d; }

  // Source weight as a composition over letters 1..d+2.
  std::vector<u64> source_weight() const;
  // Weight after moving t boxes from letter i+1 to letter i.
  std::vector<u64> moved_weight(u64 i, u64 t) const;
};

// A two-row tableau of shape (a+d, b), stored as per-row letter counts
// (index 0 = letter 1). Letter 1 never appears in the second row.
struct TableauKey {
  std::vector<u64> first_row;
  std::vector<u64> second_row;

  bool operator==(const TableauKey& o) const = default;
  std::string to_string() const;  // "1^a 2^h .../2^(b-h) ..." style
};

// An ordered tableau list with index lookup keyed by the second row
// (the first row is determined by the weight).
class SstBasis {
 public:
  SstBasis() = default;
  explicit SstBasis(std::vector<TableauKey> keys);

  const std::vector<TableauKey>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  const TableauKey& operator[](std::size_t i) const { return keys_[i]; }
  std::optional<std::size_t> index_of_second_row(
      const std::vector<u64>& second_row) const;

 private:
  std::vector<TableauKey> keys_;
  std::map<std::vector<u64>, std::size_t> index_;
};

// All shape-(a+d, b) keys of the source weight, ordered by descending
// second-row letter-2 count, then lexicographically on the 0/1 tail.
// Count is sum_{h<=min(b,d)} C(d,h).
std::vector<TableauKey> enumerate_weight_lambda_sst(const FamilyInstance& inst);

// All row-semistandard shape-(a+d, b) keys of the given weight with no
// letter 1 in row two. `weight` is signed so negative entries can be
// rejected explicitly.
std::vector<TableauKey> enumerate_weight_sst(const FamilyInstance& inst,
                                             const std::vector<long long>& weight);

SstBasis lambda_basis(const FamilyInstance& inst);
SstBasis weight_basis(const FamilyInstance& inst, const std::vector<u64>& weight);

// A permutation of {1..s+t} increasing on the first s and last t slots,
// stored as the image sequence.
struct Shuffle {
  std::vector<std::uint32_t> image;
  std::uint32_t split = 0;
};

std::vector<Shuffle> shuffles(u64 s, u64 t);

// The distinguished tableau for (h, sigma): second row holds b-h twos
// plus the letters selected by sigma's tail.
TableauKey tableau_from_shuffle(const FamilyInstance& inst, u64 h,
                                const Shuffle& sigma);

}  // namespace weylhom::tabcomb
