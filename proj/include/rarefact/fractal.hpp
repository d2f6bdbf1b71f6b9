#pragma once

// The self-similar summatory function psi and its periodic profile F.
//
// For x > 0 with canonical base-b expansion c_l .. c_0 . c_{-1} c_{-2} ...
//   psi(x) = sum_{i <= l} (prod_{k>i} w_{c_k}) d(c_i) d(b)^i,
// which extends the closed-form partial sum from integers to reals and
// satisfies psi(b x) = d(b) psi(x). With a fixed branch L of log d(b),
//   F(log_b x) = psi(x) x^{-L / log b}
// is periodic of period 1. The series converges only when |d(b)| > 1.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "rarefact/common.hpp"
#include "rarefact/digits.hpp"
#include "rarefact/sequences.hpp"

namespace rarefact {

inline constexpr double kDefaultTailTolerance = 1e-12;

class FractalProfile {
 public:
  /// Throws std::invalid_argument unless the sequence is of power growth.
  explicit FractalProfile(MultiplicativeSequence seq, long logBranch = 0,
                          double tailTolerance = kDefaultTailTolerance);

  const MultiplicativeSequence& sequence() const { return seq_; }
  long logBranch() const { return branch_; }
  double tailTolerance() const { return tailTolerance_; }

  /// Number of fractional digits summed: the discarded tail is bounded by
  /// max_c |d(c)| |d(b)|^{-M}.
  long truncationDepth() const { return depth_; }

  /// log|d(b)| + i (arg d(b) + 2 pi k).
  Complex logGrowth() const { return logGrowth_; }

 private:
  MultiplicativeSequence seq_;
  long branch_;
  double tailTolerance_;
  long depth_;
  Complex logGrowth_;
};

/// Truncated series over the given expansion, fractional digits down to
/// position -truncationDepth. Throws std::invalid_argument if the expansion
/// base differs from the sequence base or the value is zero.
Complex psi(const FractalProfile& profile, const DigitExpansion& x);

/// psi at num/den.
Complex psi(const FractalProfile& profile, std::int64_t num, std::int64_t den = 1);

/// F(y) = psi(b^y) b^{-y L / log b}. b^y is formed exactly as b^floor(y)
/// times the exact expansion of the double b^{frac(y)}.
Complex profileF(const FractalProfile& profile, double y);

struct ProfileSample {
  double y;
  Complex value;
};

/// F at y = k / count for k = 0..count-1. Throws std::invalid_argument if
/// count < 2. Work is split over `threads` workers; output order is fixed.
std::vector<ProfileSample> sampleF(const FractalProfile& profile, std::size_t count,
                                   unsigned threads = 1);

/// Header `y,re,im`, one row per sample, 17 significant digits.
void writeSamplesCsv(std::ostream& out, const std::vector<ProfileSample>& samples);

/// sum_c |d(c)| * sum_{i>=0} |d(b)|^{-i}: a bound for |F| on [0, 1).
double profileBound(const FractalProfile& profile);

struct QuotientProbe {
  /// Fractional positions J_n with c_{-J_n} < b - 1.
  std::vector<long> positions;
  /// |psi(y_n) - psi(x_n)| / (y_n - x_n) where x_n truncates x after digit
  /// -J_n and y_n raises that digit by one.
  std::vector<double> magnitudes;
  /// False when |d(b)| >= b, where the quotients do not blow up.
  bool divergent = true;
};

/// Difference quotients of psi around x at the first `depth` positions.
/// Precision limits the useful depth to where |d(b)|^{-J} stays well above
/// machine epsilon.
QuotientProbe differenceQuotientProbe(const FractalProfile& profile, const DigitExpansion& x,
                                      std::size_t depth);

/// True when magnitudes[k] < magnitudes[k + 1] for every k >= skip.
bool increasingBeyond(const std::vector<double>& magnitudes, std::size_t skip);

}  // namespace rarefact
