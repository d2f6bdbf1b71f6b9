#pragma once

// Exact arithmetic in Z[T]/(T^p - 1).
//
// Products over Galois-stable index sets expand to C_0 + C_1 (T + ... +
// T^{p-1}); evaluating at any primitive p-th root of unity gives C_0 - C_1,
// which is how norms and traces are read off. Reduction is modulo T^p - 1
// rather than the cyclotomic polynomial so the symmetry C_1 = ... = C_{p-1}
// stays checkable.

#include <initializer_list>
#include <utility>
#include <vector>

#include "rarefact/common.hpp"

namespace rarefact {

class RingElement {
 public:
  /// Zero element. Throws std::invalid_argument unless p is an odd prime.
  explicit RingElement(int p);
  /// Coefficients C_0..C_{p-1}; throws if the length is not p.
  RingElement(int p, std::vector<BigInt> coefficients);

  static RingElement one(int p);
  /// T^e, with e reduced mod p.
  static RingElement monomial(int p, long e, BigInt coefficient = 1);

  int prime() const { return p_; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  RingElement& operator+=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  /// C_1 == C_2 == ... == C_{p-1}.
  bool isGaloisSymmetric() const;

 private:
  int p_;
  std::vector<BigInt> coeffs_;
};

/// Exact product with exponents reduced mod p. Throws std::invalid_argument
/// for mismatched primes.
RingElement mulMod(const RingElement& a, const RingElement& b);

/// A sparse polynomial sum_k coefficient_k T^{multiplier_k}; the factor
/// attached to index j is sum_k coefficient_k T^{multiplier_k j}.
struct SupportTerm {
  long coefficient;
  long exponentMultiplier;
};
using Support = std::vector<SupportTerm>;

/// Dense coefficient list c_0, c_1, ... read as c_0 + c_1 T + c_2 T^2 + ...
Support supportFromCoefficients(const std::vector<long>& coefficients);

/// prod_{j in indexSet} support(T^j). Throws std::invalid_argument if an
/// index is 0 mod p.
RingElement productOverSet(int p, const Support& support, const std::vector<int>& indexSet);

/// The product over all of F_p^x.
RingElement productOverUnits(int p, const Support& support);

/// C_0 - C_1. Throws AsymmetricExpansion unless the element is Galois
/// symmetric.
BigInt normFromExpansion(const RingElement& e);

/// sum_i C_i zeta_p^{ij} in double precision; 0 <= j < p.
Complex evaluateNumeric(const RingElement& e, int j);

/// A subgroup Gamma of F_p^x and its cosets a Gamma.
class CosetSystem {
 public:
  /// Gamma is the closure of the generators under multiplication mod p.
  /// Throws std::invalid_argument for generators divisible by p.
  CosetSystem(int p, std::vector<int> generators);

  /// Gamma = the squares of F_p^x.
  static CosetSystem squares(int p);
  /// Gamma = F_p^x.
  static CosetSystem whole(int p);

  int prime() const { return p_; }
  const std::vector<int>& generators() const { return generators_; }
  /// Elements of Gamma, increasing.
  const std::vector<int>& subgroup() const { return gamma_; }
  /// Cosets in order of their smallest element; each coset lists its
  /// elements increasing, representative first.
  const std::vector<std::vector<int>>& cosets() const { return cosets_; }
  /// Index of the coset containing a.
  std::size_t cosetOf(int a) const;

 private:
  int p_;
  std::vector<int> generators_;
  std::vector<int> gamma_;
  std::vector<std::vector<int>> cosets_;
};

/// prod_{j in a Gamma} support(T^j) for each coset, in coset order.
std::vector<RingElement> cosetProducts(const CosetSystem& system, const Support& support);

/// C_0 - C_1 of the sum of the coset products, i.e. the sum of their values
/// at zeta_p. Throws AsymmetricExpansion when the sum is not Galois stable.
BigInt traceOfCosetProducts(const CosetSystem& system, const Support& support);

}  // namespace rarefact
