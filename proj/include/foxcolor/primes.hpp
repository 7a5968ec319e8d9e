#pragma once

#include "foxcolor/bigint.hpp"

namespace foxcolor {

/// Miller-Rabin. Deterministic below 2^64 (first twelve prime bases); above
/// that, 64 rounds with bases drawn from splitmix64 seeded by the low word
/// of n, so the answer is reproducible but probabilistic.
bool is_prime(const BigInt& n);

}  // namespace foxcolor
