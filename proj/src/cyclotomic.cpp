#include "rarefact/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rarefact/primes.hpp"

namespace rarefact {

namespace {

std::size_t reduce(long e, int p) { return static_cast<std::size_t>(((e % p) + p) % p); }

void requireSamePrime(const RingElement& a, const RingElement& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("ring elements live in different rings (p = " +
                                std::to_string(a.prime()) + " vs " + std::to_string(b.prime()) + ")");
}

// e * support(T^j), exploiting the sparsity of the factor.
RingElement mulBySupport(const RingElement& e, const Support& support, long j) {
  const int p = e.prime();
  std::vector<BigInt> out(static_cast<std::size_t>(p));
  for (const SupportTerm& term : support) {
    if (term.coefficient == 0) continue;
    const std::size_t shift = reduce(term.exponentMultiplier * j, p);
    for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i) {
      const BigInt& c = e[i];
      if (c.is_zero()) continue;
      out[(i + shift) % static_cast<std::size_t>(p)] += c * term.coefficient;
    }
  }
  return RingElement(p, std::move(out));
}

}  // namespace

RingElement::RingElement(int p) : p_(p) {
  requireOddPrime(p);
  coeffs_.assign(static_cast<std::size_t>(p), BigInt(0));
}

RingElement::RingElement(int p, std::vector<BigInt> coefficients) : p_(p), coeffs_(std::move(coefficients)) {
  requireOddPrime(p);
  if (coeffs_.size() != static_cast<std::size_t>(p))
    throw std::invalid_argument("a ring element needs exactly p coefficients");
}

RingElement RingElement::one(int p) { return monomial(p, 0, 1); }

RingElement RingElement::monomial(int p, long e, BigInt coefficient) {
  RingElement r(p);
  r.coeffs_[reduce(e, p)] = std::move(coefficient);
  return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  requireSamePrime(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

bool RingElement::isGaloisSymmetric() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [this](const BigInt& c) { return c == coeffs_[1]; });
}

RingElement mulMod(const RingElement& a, const RingElement& b) {
  requireSamePrime(a, b);
  const auto p = static_cast<std::size_t>(a.prime());
  std::vector<BigInt> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < p; ++k) {
      if (b[k].is_zero()) continue;
      out[(i + k) % p] += a[i] * b[k];
    }
  }
  return RingElement(a.prime(), std::move(out));
}

Support supportFromCoefficients(const std::vector<long>& coefficients) {
  Support support;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (coefficients[k] != 0) support.push_back({coefficients[k], static_cast<long>(k)});
  return support;
}

RingElement productOverSet(int p, const Support& support, const std::vector<int>& indexSet) {
  RingElement product = RingElement::one(p);
  for (int j : indexSet) {
    if (reduce(j, p) == 0) throw std::invalid_argument("index set must avoid 0 mod p");
    product = mulBySupport(product, support, j);
  }
  return product;
}

RingElement productOverUnits(int p, const Support& support) {
  requireOddPrime(p);
  std::vector<int> units(static_cast<std::size_t>(p - 1));
  for (int j = 1; j < p; ++j) units[static_cast<std::size_t>(j - 1)] = j;
  return productOverSet(p, support, units);
}

BigInt normFromExpansion(const RingElement& e) {
  if (!e.isGaloisSymmetric())
    throw AsymmetricExpansion("expansion is not Galois symmetric: C_1..C_{p-1} differ");
  return e[0] - e[1];
}

Complex evaluateNumeric(const RingElement& e, int j) {
  const int p = e.prime();
  if (j < 0 || j >= p) throw std::invalid_argument("evaluation index must lie in 0..p-1");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i) {
    if (e[i].is_zero()) continue;
    const long k = static_cast<long>(i) * j % p;
    sum += e[i].convert_to<double>() * std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / p);
  }
  return sum;
}

CosetSystem::CosetSystem(int p, std::vector<int> generators) : p_(p), generators_(std::move(generators)) {
  requireOddPrime(p);
  std::vector<bool> inGamma(static_cast<std::size_t>(p), false);
  inGamma[1] = true;
  gamma_ = {1};
  // Closure: multiply every element found so far by every generator.
  for (std::size_t k = 0; k < gamma_.size(); ++k) {
    for (int g : generators_) {
      const std::size_t r = reduce(g, p);
      if (r == 0) throw std::invalid_argument("subgroup generators must be nonzero mod p");
      const std::size_t next = static_cast<std::size_t>(gamma_[k]) * r % static_cast<std::size_t>(p);
      if (!inGamma[next]) {
        inGamma[next] = true;
        gamma_.push_back(static_cast<int>(next));
      }
    }
  }
  std::sort(gamma_.begin(), gamma_.end());

  std::vector<bool> used(static_cast<std::size_t>(p), false);
  for (int a = 1; a < p; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    std::vector<int> coset;
    for (int g : gamma_) {
      const int element = static_cast<int>(static_cast<long>(a) * g % p);
      coset.push_back(element);
      used[static_cast<std::size_t>(element)] = true;
    }
    std::sort(coset.begin(), coset.end());
    cosets_.push_back(std::move(coset));
  }
}

CosetSystem CosetSystem::squares(int p) {
  requireOddPrime(p);
  std::vector<int> gens;
  for (int x = 1; x < p; ++x) gens.push_back(static_cast<int>(static_cast<long>(x) * x % p));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return CosetSystem(p, std::move(gens));
}

CosetSystem CosetSystem::whole(int p) {
  requireOddPrime(p);
  std::vector<int> gens;
  for (int x = 1; x < p; ++x) gens.push_back(x);
  return CosetSystem(p, std::move(gens));
}

std::size_t CosetSystem::cosetOf(int a) const {
  const int r = static_cast<int>(reduce(a, p_));
  for (std::size_t c = 0; c < cosets_.size(); ++c)
    if (std::binary_search(cosets_[c].begin(), cosets_[c].end(), r)) return c;
  throw std::invalid_argument("0 lies in no coset of F_p^x");
}

std::vector<RingElement> cosetProducts(const CosetSystem& system, const Support& support) {
  std::vector<RingElement> out;
  out.reserve(system.cosets().size());
  for (const auto& coset : system.cosets()) out.push_back(productOverSet(system.prime(), support, coset));
  return out;
}

BigInt traceOfCosetProducts(const CosetSystem& system, const Support& support) {
  RingElement sum(system.prime());
  for (const RingElement& e : cosetProducts(system, support)) sum += e;
  return normFromExpansion(sum);
}

}  // namespace rarefact
