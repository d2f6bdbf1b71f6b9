#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rarefact/common.hpp"

namespace rarefact {

BigInt lucas(int n);
BigInt fibonacci(int n);

struct LucasPair {
  int index = 0;
  BigInt lucas;
  BigInt fibonacci;
};

LucasPair lucasPair(int n);

/// Largest n accepted by the exhaustive domino counts.
inline constexpr int kMaxExhaustiveDominoes = 25;

/// Placements of disjoint dominoes {k, k+1} on [1, n-1], by enumerating
/// sets of domino positions as bitmasks. Requires 2 <= n <= 25.
std::uint64_t dominoIntervalExhaustive(int n);

/// Placements on the cycle Z/nZ (wrapping domino {n-1, 0} allowed).
/// Requires 3 <= n <= 25.
std::uint64_t dominoCircleExhaustive(int n);

/// The same counts from the recurrence: F_n on the interval, and
/// F_n + 2 F_{n-1} on the circle (split by what covers 0).
BigInt dominoInterval(int n);
BigInt dominoCircle(int n);

/// L_{n+1} L_{n-1} = L_n^2 + (-1)^{n+1} 5 and L_n = F_{n-1} + F_{n+1}.
/// Requires n >= 1.
bool lucasIdentityCheck(int n);

enum class Verdict { Pass, Fail, Inconclusive };

const char* toString(Verdict v);

struct FactorBudget {
  /// Values with more decimal digits are not attempted.
  int maxDigits = 24;
  /// Pollard rho iterations per split attempt.
  std::uint64_t maxRhoIterations = 4'000'000;
  std::uint64_t seed = 0x5eed;
};

struct CongruenceVerdict {
  int index = 0;
  BigInt value;
  /// Prime factors with multiplicity, increasing.
  std::vector<BigInt> factors;
  /// Each factor mod 5.
  std::vector<int> residues;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

/// Factor L_n (n odd, n >= 3) and check that every prime factor is 2 or
/// +-1 mod 5. Running out of budget yields Inconclusive, never Pass/Fail.
CongruenceVerdict factorCongruenceCheck(int n, const FactorBudget& budget = {});

/// The double binomial sum that evaluates N(1 + zeta - zeta^2):
///   sum_{n0=0}^{p-1} ( sum_{n2=0}^{min(p-1-n0, n0)} (-1)^{p-1-n0-n2} C(p-1-n0, n2)
///                    + sum_{n2=n0+1}^{p-1-n0} C(p-1-n2, n0) ).
BigInt binomialsFormula(int p);

/// "139*461" style rendering of a factor list.
std::string formatFactors(const std::vector<BigInt>& factors);

}  // namespace rarefact
