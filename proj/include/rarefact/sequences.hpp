#pragma once

// Digit-defined b-multiplicative sequences and their partial sums.
//
// A sequence is fixed by its base b and the b digit weights w_0..w_{b-1}
// (unit modulus, w_0 = 1). The term at n is the product of the weights of
// the base-b digits of n, so term(c * b^k) = term(c) and
// term(a * b^k + c) = term(a * b^k) * term(c) for c < b^k.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rarefact/common.hpp"

namespace rarefact {

inline constexpr std::uint64_t kDefaultOracleBound = 10'000'000;

/// Prefix sums d(0..b) of the digit weights: d(c) = w_0 + ... + w_{c-1}.
struct DigitSums {
  Eigen::VectorXcd partials;

  Complex operator()(std::size_t c) const { return partials(static_cast<Eigen::Index>(c)); }
  /// d(b), the growth constant of the partial sums.
  Complex total() const { return partials(partials.size() - 1); }
  double maxModulus() const { return partials.cwiseAbs().maxCoeff(); }
};

class MultiplicativeSequence {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  /// Throws std::invalid_argument if base < 2, the weight count differs from
  /// the base, weights[0] != 1 or some weight is off the unit circle.
  MultiplicativeSequence(std::uint64_t base, Eigen::VectorXcd weights);

  /// Sign notation: "+-" is Thue-Morse, "++-" the ternary sequence.
  static MultiplicativeSequence fromSigns(std::string_view signs);
  /// JSON list of [re, im] pairs, one per digit.
  static MultiplicativeSequence fromJson(std::string_view json);
  /// Dispatches on the first non-blank character: '[' means JSON, else signs.
  static MultiplicativeSequence parse(std::string_view literal);

  static MultiplicativeSequence thueMorse() { return fromSigns("+-"); }

  std::uint64_t base() const { return base_; }
  const Eigen::VectorXcd& weights() const { return weights_; }
  Complex weight(std::uint64_t digit) const { return weights_(static_cast<Eigen::Index>(digit)); }
  const DigitSums& digitSums() const { return sums_; }

  /// True when every weight is 1; the library accepts such sequences but
  /// nothing interesting can be said about them.
  bool isTrivial() const { return trivial_; }
  /// True when every weight is +1 or -1.
  bool isSignSequence() const;

 private:
  std::uint64_t base_;
  Eigen::VectorXcd weights_;
  DigitSums sums_;
  bool trivial_ = false;
};

/// Base-b digits of n, least significant first; empty for n = 0.
std::vector<unsigned> digitsOf(std::uint64_t n, std::uint64_t base);

Complex term(const MultiplicativeSequence& seq, std::uint64_t n);

/// (-1)^popcount(n): the Thue-Morse sign without digit loops.
int thueMorseFast(std::uint64_t n);

/// Sum of term(seq, n) for n < N by direct accumulation.
/// Throws BudgetExceeded if N > bound.
Complex naivePartialSum(const MultiplicativeSequence& seq, std::uint64_t N,
                        std::uint64_t bound = kDefaultOracleBound);

/// Sum of term(seq, n) for n < N from the digits of N alone, O(log_b N).
/// With N = c_l..c_0 in base b this is
///   sum_i (prod_{k>i} w_{c_k}) d(c_i) d(b)^i.
/// Returns 0 for N = 0.
Complex closedFormPartialSum(const MultiplicativeSequence& seq, std::uint64_t N);

/// The twisted sequence zeta_p^{jn} t_n, which is multiplicative in base
/// b^s with s the order of b modulo p. Weights: zeta_p^{jc} t_c for c < b^s.
/// Throws std::invalid_argument if p is not an odd prime, p divides b, j is
/// not in 1..p-1, or b^s exceeds maxBase.
MultiplicativeSequence buildTwist(const MultiplicativeSequence& t, int p, int j,
                                  std::uint64_t maxBase = std::uint64_t{1} << 22);

enum class GrowthKind { Bounded, Logarithmic, Power };

struct GrowthClass {
  GrowthKind kind;
  /// log|d(b)| / log b for Power, 0 otherwise.
  double exponent = 0.0;
};

inline constexpr double kClassifyTolerance = 1e-9;

GrowthClass classify(const MultiplicativeSequence& seq);

const char* toString(GrowthKind kind);

/// Sum of t_n over n < N with p | n, by direct accumulation.
Complex rarefiedSum(const MultiplicativeSequence& t, int p, std::uint64_t N,
                    std::uint64_t bound = kDefaultOracleBound);

/// The same sum as (1/p)(S(t, N) + sum_j S(twist_j, N)) with every S taken
/// from closedFormPartialSum. Holds the p - 1 twists so repeated queries
/// do not rebuild them. For real weights the result is returned real.
class RarefiedSummer {
 public:
  RarefiedSummer(const MultiplicativeSequence& t, int p);

  Complex operator()(std::uint64_t N) const;

  int prime() const { return p_; }
  const MultiplicativeSequence& base() const { return base_; }
  const std::vector<MultiplicativeSequence>& twists() const { return twists_; }

 private:
  MultiplicativeSequence base_;
  int p_;
  std::vector<MultiplicativeSequence> twists_;
  bool realBase_;
};

Complex rarefiedSumViaTwists(const MultiplicativeSequence& t, int p, std::uint64_t N);

namespace detail {

/// z^e by repeated squaring; negative e inverts.
Complex integerPower(Complex z, long e);

/// sum_i (prod_{k>i} w_{c_k}) d(c_i) d(b)^i where digits[0] sits at position
/// top, digits[1] at top - 1, and so on.
Complex digitSeries(const MultiplicativeSequence& seq, long top,
                    std::span<const unsigned> digits);

}  // namespace detail

}  // namespace rarefact
