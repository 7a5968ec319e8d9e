#include "foxcolor/primes.hpp"

#include <array>
#include <cstdint>

#include "foxcolor/splitmix.hpp"

namespace foxcolor {

namespace {

bool passes_round(const BigInt& n, const BigInt& d, unsigned s, const BigInt& base) {
  BigInt x = boost::multiprecision::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  constexpr std::array<unsigned, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  static const BigInt kTwoTo64 = BigInt(1) << 64;
  if (n < kTwoTo64) {
    for (unsigned b : kBases) {
      if (!passes_round(n, d, s, BigInt(b))) return false;
    }
    return true;
  }
  SplitMix64 rng(static_cast<std::uint64_t>(n & BigInt(0xFFFFFFFFFFFFFFFFULL)));
  const BigInt span = n - 3;
  for (int round = 0; round < 64; ++round) {
    BigInt base = 0;
    for (int word = 0; word < 4; ++word) base = (base << 64) | BigInt(rng.next());
    base = 2 + base % span;
    if (!passes_round(n, d, s, base)) return false;
  }
  return true;
}

}  // namespace foxcolor
