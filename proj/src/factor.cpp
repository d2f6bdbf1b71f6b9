#include "rarefact/factor.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace rarefact {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

BigInt randomBelow(const BigInt& bound, std::mt19937_64& rng) {
  // bound > 2; uniform enough for witness and seed selection.
  BigInt value = 0;
  const unsigned words = static_cast<unsigned>(boost::multiprecision::msb(bound) / 64 + 2);
  for (unsigned w = 0; w < words; ++w) value = (value << 64) + rng();
  return value % bound;
}

bool witnessSaysComposite(const BigInt& n, const BigInt& a, const BigInt& d, unsigned twos) {
  BigInt x = powm(a, d, n);
  const BigInt minusOne = n - 1;
  if (x == 1 || x == minusOne) return false;
  for (unsigned r = 1; r < twos; ++r) {
    x = x * x % n;
    if (x == minusOne) return false;
  }
  return true;
}

}  // namespace

bool isProbablePrime(const BigInt& n, std::mt19937_64& rng, int rounds) {
  static constexpr std::array<unsigned, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (unsigned q : kBases) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  BigInt d = n - 1;
  unsigned twos = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++twos;
  }
  for (unsigned a : kBases)
    if (witnessSaysComposite(n, BigInt(a), d, twos)) return false;
  if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) return true;
  for (int i = 0; i < rounds; ++i) {
    const BigInt a = randomBelow(n - 3, rng) + 2;
    if (witnessSaysComposite(n, a, d, twos)) return false;
  }
  return true;
}

std::optional<BigInt> pollardRho(const BigInt& n, std::mt19937_64& rng, std::uint64_t maxIterations) {
  if ((n & 1) == 0) return BigInt(2);
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t spent = 0;
  while (spent < maxIterations) {
    const BigInt c = randomBelow(n - 1, rng) + 1;
    auto step = [&](const BigInt& v) { return (v * v + c) % n; };
    BigInt y = randomBelow(n, rng);
    BigInt x, ys;
    BigInt g = 1;
    BigInt q = 1;
    std::uint64_t r = 1;
    while (g == 1 && spent < maxIterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t m = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < m; ++i) {
          y = step(y);
          q = q * (x > y ? x - y : y - x) % n;
        }
        spent += m;
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = step(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

Factorization factorize(BigInt n, std::mt19937_64& rng, std::uint64_t maxRhoIterations,
                        std::uint32_t trialBound) {
  Factorization out;
  if (n < 2) {
    out.complete = n == 1;
    return out;
  }
  for (std::uint32_t q = 2; q <= trialBound && BigInt(q) * q <= n; q += (q == 2 ? 1 : 2)) {
    while (n % q == 0) {
      out.primes.emplace_back(q);
      n /= q;
    }
  }
  std::vector<BigInt> pending;
  if (n > 1) pending.push_back(n);
  out.complete = true;
  while (!pending.empty()) {
    BigInt m = pending.back();
    pending.pop_back();
    if (isProbablePrime(m, rng)) {
      out.primes.push_back(m);
      continue;
    }
    const auto factor = pollardRho(m, rng, maxRhoIterations);
    if (!factor) {
      out.complete = false;
      out.primes.push_back(m);
      continue;
    }
    pending.push_back(*factor);
    pending.push_back(m / *factor);
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

}  // namespace rarefact
