#include "weylhom/binarith.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace weylhom::binarith {

namespace {

void check_cap(u64 v, const char* name) {
  if (v >= kInputCap)
    throw std::invalid_argument(std::string(name) + " exceeds the 2^40 cap");
}

void check_prime(u64 p) {
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

u64 mulmod(u64 x, u64 y, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % p);
}

u64 powmod(u64 x, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, x, p);
    x = mulmod(x, x, p);
    e >>= 1;
  }
  return r;
}

// C(m, n) mod p for 0 <= n <= m < p, via the falling-factorial quotient.
u64 small_binom_mod_p(u64 m, u64 n, u64 p) {
  if (n > m - n) n = m - n;
  u64 num = 1, den = 1;
  for (u64 j = 1; j <= n; ++j) {
    num = mulmod(num, (m - n + j) % p, p);
    den = mulmod(den, j % p, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

bool is_prime(u64 p) {
  if (p < 2) return false;
  for (u64 q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

u64 DigitSeq::value() const {
  u64 v = 0;
  u64 w = 1;
  for (auto d : digits) {
    v += d * w;
    w *= p;
  }
  return v;
}

DigitSeq base_p_digits(u64 m, u64 p) {
  check_prime(p);
  check_cap(m, "m");
  DigitSeq seq;
  seq.p = p;
  if (m == 0) {
    seq.digits.push_back(0);
    return seq;
  }
  while (m) {
    seq.digits.push_back(static_cast<std::uint32_t>(m % p));
    m /= p;
  }
  return seq;
}

u64 binom_mod_p(u64 m, u64 n, u64 p) {
  check_prime(p);
  check_cap(m, "m");
  check_cap(n, "n");
  if (n > m) return 0;
  if (p == 2) return (n & ~m) == 0 ? 1 : 0;
  u64 r = 1;
  while (n) {
    u64 md = m % p, nd = n % p;
    if (nd > md) return 0;
    r = mulmod(r, small_binom_mod_p(md, nd, p), p);
    m /= p;
    n /= p;
  }
  return r;
}

bool is_two_complement(u64 k, u64 i) {
  check_cap(k, "k");
  check_cap(i, "i");
  if (i == 0) return (k & 1) != 0;
  unsigned m = std::bit_width(i) - 1;
  u64 mask = (u64{1} << (m + 1)) - 1;
  return ((i + k) & mask) == mask;
}

bool contains_binary(u64 x, u64 y) {
  check_cap(x, "x");
  check_cap(y, "y");
  return (x & y) == y;
}

std::optional<u64> max_two_complement_target(u64 k, u64 bound) {
  check_cap(k, "k");
  check_cap(bound, "bound");
  for (u64 i = bound + 1; i-- > 0;)
    if (is_two_complement(k, i)) return i;
  return std::nullopt;
}

std::vector<u64> containment_upset(u64 seed, u64 bound) {
  check_cap(seed, "seed");
  check_cap(bound, "bound");
  std::vector<u64> out;
  for (u64 i = seed; i <= bound; ++i)
    if ((i & seed) == seed) out.push_back(i);
  return out;
}

namespace {

u64 positions_mask(const std::vector<std::uint32_t>& positions) {
  u64 mask = 0;
  std::uint32_t prev = 0;
  bool first = true;
  for (auto pos : positions) {
    if (pos >= 40) throw std::invalid_argument("digit position exceeds cap");
    if (!first && pos <= prev)
      throw std::invalid_argument("positions must be strictly ascending");
    prev = pos;
    first = false;
    mask |= u64{1} << pos;
  }
  return mask;
}

}  // namespace

std::vector<std::uint32_t> unique_completion(
    u64 x, const std::vector<std::uint32_t>& positions) {
  check_cap(x, "x");
  u64 mask = positions_mask(positions);
  if ((x & mask) == 0)
    throw std::domain_error("x has no set digit among the given positions");
  // Repeatedly carry out of the lowest still-set position. Carries only
  // travel upward, so the chosen positions come out strictly ascending
  // and each is used at most once.
  std::vector<std::uint32_t> chosen;
  u64 y = x;
  while (y & mask) {
    auto q = static_cast<std::uint32_t>(std::countr_zero(y & mask));
    chosen.push_back(q);
    y += u64{1} << q;
  }
  return chosen;
}

std::vector<std::uint32_t> unique_exceeding_completion(
    u64 target, const std::vector<std::uint32_t>& positions) {
  check_cap(target, "target");
  u64 mask = positions_mask(positions);
  if (positions.size() < 2)
    throw std::domain_error("need at least two positions");
  if (target == 0 || (target & ~mask) != 0)
    throw std::domain_error("target digits must come from the positions");
  if (target >= mask)  // mask equals the sum of all position powers
    throw std::domain_error("target must be below the full position sum");

  // Compare the target's digit positions against the prefix of
  // `positions`; the answer starts at the first divergence.
  std::vector<std::uint32_t> tbits;
  for (std::uint32_t pos = 0; pos < 40; ++pos)
    if (target >> pos & 1) tbits.push_back(pos);

  if (tbits[0] > positions[0]) {
    std::vector<std::uint32_t> out{positions[0]};
    out.insert(out.end(), tbits.begin(), tbits.end());
    return out;
  }
  for (std::size_t s = 1; s < tbits.size(); ++s) {
    if (tbits[s] != positions[s]) {
      std::vector<std::uint32_t> out{positions[s]};
      out.insert(out.end(), tbits.begin() + static_cast<long>(s), tbits.end());
      return out;
    }
  }
  // The target is an exact prefix of the positions; take the next one.
  return {positions[tbits.size()]};
}

}  // namespace weylhom::binarith
