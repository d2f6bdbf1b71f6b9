#pragma once

#include <cstdint>
#include <vector>

namespace rarefact {

bool isPrime(std::uint64_t n);

/// Primes q with lo <= q <= hi, increasing.
std::vector<int> primesInRange(int lo, int hi);

/// Multiplicative order of a modulo the prime p; requires p not dividing a.
int multiplicativeOrder(std::uint64_t a, int p);

/// Throws std::invalid_argument unless p is an odd prime.
void requireOddPrime(std::int64_t p);

}  // namespace rarefact
