#pragma once

// Spectrum of M = prod_{m<s} (I - T^{2^m}) for the p x p cyclic shift T,
// s the order of 2 modulo p. M is circulant, so its eigenvalues are
//   lambda_j = prod_{m<s} (1 - zeta_p^{j 2^m}),  j = 0..p-1.

#include <vector>

#include <Eigen/Core>

#include "rarefact/common.hpp"

namespace rarefact {

/// The p x p cyclic shift: ones on the subdiagonal and in the top-right corner.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> cyclicShift(int p) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> t =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(p, p);
  for (int i = 1; i < p; ++i) t(i, i - 1) = Scalar(1);
  t(0, p - 1) = Scalar(1);
  return t;
}

/// Dense M for the odd prime p.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> spectralMatrix(int p, int s) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat shift = cyclicShift<Scalar>(p);
  const Mat identity = Mat::Identity(p, p);
  Mat power = shift;
  Mat product = identity;
  for (int m = 0; m < s; ++m) {
    product = product * (identity - power);
    power = power * power;
  }
  return product;
}

/// lambda_0..lambda_{p-1} from the closed product. Throws
/// std::invalid_argument unless p is an odd prime.
Eigen::VectorXcd eigenvaluesOfM(int p);

/// Relative tolerance for "real positive" and for modulus ties.
inline constexpr double kSpectralTolerance = 1e-9;

struct SpectralReport {
  int p = 0;
  int s = 0;
  Eigen::VectorXcd eigenvalues;
  /// The dominant eigenvalue picked by modulus, then real part, then
  /// imaginary part.
  Complex dominant;
  double lambda1 = 0.0;
  /// Largest modulus strictly below lambda1, 0 if there is none.
  double lambda2 = 0.0;
  int r = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

SpectralReport spectralReport(int p);

/// Smallest r in {1, 2, 4} with z^r real positive; 0 if none.
int realPositivePower(Complex z);

/// prod_{j != 0} lambda_j kept as log-modulus and argument, since the
/// product itself overflows a double for large p.
struct LogProduct {
  double logModulus = 0.0;
  double argument = 0.0;  // reduced to (-pi, pi]
};

LogProduct nonzeroEigenvalueProduct(const Eigen::VectorXcd& eigenvalues);

}  // namespace rarefact
