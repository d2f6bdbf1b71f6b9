#include "rarefact/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rarefact/primes.hpp"

namespace rarefact {

Eigen::VectorXcd eigenvaluesOfM(int p) {
  requireOddPrime(p);
  const int s = multiplicativeOrder(2, p);
  Eigen::VectorXcd lambda(p);
  for (int j = 0; j < p; ++j) {
    Complex product(1.0, 0.0);
    long k = j;
    for (int m = 0; m < s; ++m) {
      product *= Complex(1.0, 0.0) - std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / p);
      k = (2 * k) % p;
    }
    lambda(j) = product;
  }
  return lambda;
}

int realPositivePower(Complex z) {
  Complex power = z;
  for (int r = 1; r <= 4; r *= 2) {
    if (power.real() > 0.0 && std::abs(power.imag()) <= kSpectralTolerance * std::abs(power))
      return r;
    power *= power;
  }
  return 0;
}

SpectralReport spectralReport(int p) {
  SpectralReport report;
  report.p = p;
  report.eigenvalues = eigenvaluesOfM(p);
  report.s = multiplicativeOrder(2, p);

  const Eigen::VectorXd moduli = report.eigenvalues.cwiseAbs();
  report.lambda1 = moduli.maxCoeff();
  const double tie = report.lambda1 * (1.0 - kSpectralTolerance);

  bool haveDominant = false;
  for (Eigen::Index j = 0; j < report.eigenvalues.size(); ++j) {
    const Complex z = report.eigenvalues(j);
    if (moduli(j) >= tie) {
      const bool better = !haveDominant || z.real() > report.dominant.real() ||
                          (z.real() == report.dominant.real() && z.imag() > report.dominant.imag());
      if (better) report.dominant = z;
      haveDominant = true;
    } else {
      report.lambda2 = std::max(report.lambda2, moduli(j));
    }
  }

  report.r = realPositivePower(report.dominant);
  if (report.r == 0)
    throw std::logic_error("no power in {1, 2, 4} of the dominant eigenvalue is real positive");
  const double log2 = std::log(2.0);
  report.alpha = std::log(report.lambda1) / (report.r * report.s * log2);
  report.beta = report.lambda2 > 1.0 ? std::log(report.lambda2) / (report.s * log2) : 0.0;
  return report;
}

LogProduct nonzeroEigenvalueProduct(const Eigen::VectorXcd& eigenvalues) {
  LogProduct out;
  for (Eigen::Index j = 1; j < eigenvalues.size(); ++j) {
    out.logModulus += std::log(std::abs(eigenvalues(j)));
    out.argument = std::remainder(out.argument + std::arg(eigenvalues(j)), 2.0 * kPi);
  }
  return out;
}

}  // namespace rarefact
