#pragma once

// Primality testing and integer factorization for moderately sized values.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rarefact/common.hpp"

namespace rarefact {

/// Miller-Rabin. Deterministic below 2^64 (first twelve prime bases);
/// `rounds` random bases drawn from `rng` above that.
bool isProbablePrime(const BigInt& n, std::mt19937_64& rng, int rounds = 40);

/// A nontrivial factor of the composite n by Brent's variant of Pollard rho,
/// or nullopt once `maxIterations` steps have been spent.
std::optional<BigInt> pollardRho(const BigInt& n, std::mt19937_64& rng,
                                 std::uint64_t maxIterations);

struct Factorization {
  std::vector<BigInt> primes;  // with multiplicity, increasing
  bool complete = false;
};

/// Trial division up to `trialBound`, then rho on the cofactors.
Factorization factorize(BigInt n, std::mt19937_64& rng, std::uint64_t maxRhoIterations,
                        std::uint32_t trialBound = 10'000);

}  // namespace rarefact
