#include "rarefact/lucas.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rarefact/combinatorics.hpp"
#include "rarefact/factor.hpp"
#include "rarefact/primes.hpp"

namespace rarefact {

namespace {

void requireNonNegative(int n) {
  if (n < 0) throw std::invalid_argument("index must be non-negative");
}

BigInt signedBinomial(int sign, int n, int k) {
  const BigInt c = binomial(n, k);
  return sign % 2 == 0 ? c : BigInt(-c);
}

}  // namespace

LucasPair lucasPair(int n) {
  requireNonNegative(n);
  BigInt l0 = 2, l1 = 1, f0 = 0, f1 = 1;
  for (int i = 0; i < n; ++i) {
    BigInt l2 = l0 + l1;
    BigInt f2 = f0 + f1;
    l0 = std::move(l1);
    l1 = std::move(l2);
    f0 = std::move(f1);
    f1 = std::move(f2);
  }
  return {n, l0, f0};
}

BigInt lucas(int n) { return lucasPair(n).lucas; }
BigInt fibonacci(int n) { return lucasPair(n).fibonacci; }

std::uint64_t dominoIntervalExhaustive(int n) {
  if (n < 2 || n > kMaxExhaustiveDominoes)
    throw std::invalid_argument("exhaustive interval count supports 2 <= n <= 25");
  // Domino k covers {k, k+1} for k = 1..n-2.
  const int slots = n - 2;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask)
    if ((mask & (mask << 1)) == 0) ++count;
  return count;
}

std::uint64_t dominoCircleExhaustive(int n) {
  if (n < 3 || n > kMaxExhaustiveDominoes)
    throw std::invalid_argument("exhaustive circle count supports 3 <= n <= 25");
  // Domino k covers {k, k+1 mod n} for k = 0..n-1; two dominoes clash when
  // their positions are cyclically adjacent.
  const std::uint32_t top = 1u << (n - 1);
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::uint32_t rotated = ((mask << 1) | (mask & top ? 1u : 0u)) & ((1u << n) - 1);
    if ((mask & rotated) == 0) ++count;
  }
  return count;
}

BigInt dominoInterval(int n) {
  if (n < 2) throw std::invalid_argument("interval domino count needs n >= 2");
  return fibonacci(n);
}

BigInt dominoCircle(int n) {
  if (n < 3) throw std::invalid_argument("circle domino count needs n >= 3");
  return fibonacci(n) + 2 * fibonacci(n - 1);
}

bool lucasIdentityCheck(int n) {
  if (n < 1) throw std::invalid_argument("identity check needs n >= 1");
  const BigInt ln = lucas(n);
  const BigInt product = lucas(n + 1) * lucas(n - 1);
  const BigInt expected = ln * ln + ((n + 1) % 2 == 0 ? BigInt(5) : BigInt(-5));
  return product == expected && ln == fibonacci(n - 1) + fibonacci(n + 1);
}

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CongruenceVerdict factorCongruenceCheck(int n, const FactorBudget& budget) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("congruence check needs an odd n >= 3");
  CongruenceVerdict result;
  result.index = n;
  result.value = lucas(n);
  const std::string digits = result.value.str();
  if (static_cast<int>(digits.size()) > budget.maxDigits) {
    result.note = "L_" + std::to_string(n) + " has " + std::to_string(digits.size()) +
                  " digits, over the budget of " + std::to_string(budget.maxDigits);
    return result;
  }
  std::mt19937_64 rng(budget.seed + static_cast<std::uint64_t>(n));
  const Factorization f = factorize(result.value, rng, budget.maxRhoIterations);
  if (!f.complete) {
    result.note = "factorization ran out of rho iterations";
    return result;
  }
  result.factors = f.primes;
  result.verdict = Verdict::Pass;
  for (const BigInt& q : result.factors) {
    const int r = static_cast<int>(q % 5);
    result.residues.push_back(r);
    if (q != 2 && r != 1 && r != 4) result.verdict = Verdict::Fail;
  }
  return result;
}

BigInt binomialsFormula(int p) {
  requireOddPrime(p);
  BigInt total = 0;
  for (int n0 = 0; n0 <= p - 1; ++n0) {
    const int rest = p - 1 - n0;
    for (int n2 = 0; n2 <= std::min(rest, n0); ++n2) total += signedBinomial(rest - n2, rest, n2);
    for (int n2 = n0 + 1; n2 <= rest; ++n2) total += binomial(p - 1 - n2, n0);
  }
  return total;
}

std::string formatFactors(const std::vector<BigInt>& factors) {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  return out.str();
}

}  // namespace rarefact
