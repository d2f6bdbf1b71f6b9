#include "rarefact/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <thread>

namespace rarefact {

namespace {

long depthFor(const MultiplicativeSequence& seq, double tolerance) {
  const double growth = std::abs(seq.digitSums().total());
  const double maxc = seq.digitSums().maxModulus();
  const double m = std::ceil((std::log(maxc) - std::log(tolerance)) / std::log(growth));
  return std::max(1L, static_cast<long>(m));
}

Complex evaluate(const FractalProfile& profile, const DigitExpansion& x, long depth) {
  const MultiplicativeSequence& seq = profile.sequence();
  if (x.base() != seq.base())
    throw std::invalid_argument("expansion base differs from the sequence base");
  std::vector<unsigned> digits(x.integerDigits().rbegin(), x.integerDigits().rend());
  const long top = x.topIndex();
  // Fractional positions -1..-depth; when x < 1 the leading fractional
  // zeros are harmless since d(0) = 0 and w_0 = 1.
  const std::vector<unsigned> fraction = x.fractionalDigits(static_cast<std::size_t>(depth));
  digits.insert(digits.end(), fraction.begin(), fraction.end());
  return detail::digitSeries(seq, top, digits);
}

}  // namespace

FractalProfile::FractalProfile(MultiplicativeSequence seq, long logBranch, double tailTolerance)
    : seq_(std::move(seq)), branch_(logBranch), tailTolerance_(tailTolerance) {
  if (classify(seq_).kind != GrowthKind::Power)
    throw std::invalid_argument("a fractal profile needs |d(b)| > 1");
  if (!(tailTolerance_ > 0.0)) throw std::invalid_argument("tail tolerance must be positive");
  depth_ = depthFor(seq_, tailTolerance_);
  const Complex growth = seq_.digitSums().total();
  logGrowth_ = Complex(std::log(std::abs(growth)),
                       std::arg(growth) + 2.0 * kPi * static_cast<double>(branch_));
}

Complex psi(const FractalProfile& profile, const DigitExpansion& x) {
  if (x.isZero())
    throw std::invalid_argument("psi is defined for x > 0 only");
  return evaluate(profile, x, profile.truncationDepth());
}

Complex psi(const FractalProfile& profile, std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw std::invalid_argument("psi is defined for x > 0 only");
  return psi(profile, DigitExpansion::fromRational(
                          static_cast<unsigned>(profile.sequence().base()), num, den));
}

Complex profileF(const FractalProfile& profile, double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("profileF needs a finite argument");
  const auto base = static_cast<unsigned>(profile.sequence().base());
  const double whole = std::floor(y);
  const double frac = y - whole;
  const double mantissa = std::pow(static_cast<double>(base), frac);
  const DigitExpansion x =
      DigitExpansion::fromDouble(base, mantissa).shifted(static_cast<long>(whole));
  // Keep the truncation at the same absolute precision relative to x.
  const long depth = profile.truncationDepth() + std::max(0L, -static_cast<long>(whole));
  return evaluate(profile, x, depth) * std::exp(-y * profile.logGrowth());
}

std::vector<ProfileSample> sampleF(const FractalProfile& profile, std::size_t count,
                                   unsigned threads) {
  if (count < 2) throw std::invalid_argument("sampleF needs at least two samples");
  std::vector<ProfileSample> samples(count);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double y = static_cast<double>(k) / static_cast<double>(count);
      samples[k] = {y, profileF(profile, y)};
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    work(0, count);
    return samples;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t begin = 0; begin < count; begin += chunk)
    pool.emplace_back(work, begin, std::min(count, begin + chunk));
  return samples;
}

void writeSamplesCsv(std::ostream& out, const std::vector<ProfileSample>& samples) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "y,re,im\n" << std::setprecision(17);
  for (const auto& s : samples) out << s.y << ',' << s.value.real() << ',' << s.value.imag() << '\n';
  out.flags(flags);
  out.precision(precision);
}

double profileBound(const FractalProfile& profile) {
  const DigitSums& d = profile.sequence().digitSums();
  const double growth = std::abs(d.total());
  return d.partials.cwiseAbs().sum() / (1.0 - 1.0 / growth);
}

QuotientProbe differenceQuotientProbe(const FractalProfile& profile, const DigitExpansion& x,
                                      std::size_t depth) {
  const auto base = static_cast<unsigned>(profile.sequence().base());
  if (x.base() != base) throw std::invalid_argument("expansion base differs from the sequence base");
  QuotientProbe probe;
  probe.divergent = std::abs(profile.sequence().digitSums().total()) < static_cast<double>(base);

  // Canonical expansions never end in b-1, so positions keep turning up;
  // the scan limit only guards against malformed explicit input.
  const std::size_t scanLimit = 64 * (depth + 1);
  const std::vector<unsigned> fraction = x.fractionalDigits(scanLimit);
  for (std::size_t k = 0; k < fraction.size() && probe.positions.size() < depth; ++k) {
    if (fraction[k] + 1 >= base) continue;
    const long position = static_cast<long>(k) + 1;
    std::vector<unsigned> lower(fraction.begin(), fraction.begin() + position);
    std::vector<unsigned> upper = lower;
    ++upper.back();
    const auto lo = DigitExpansion::fromDigits(base, x.integerDigits(), std::move(lower));
    const auto hi = DigitExpansion::fromDigits(base, x.integerDigits(), std::move(upper));
    const long evalDepth = std::max(position, profile.truncationDepth());
    const Complex jump = evaluate(profile, hi, evalDepth) - evaluate(profile, lo, evalDepth);
    probe.positions.push_back(position);
    probe.magnitudes.push_back(std::abs(jump) *
                               std::pow(static_cast<double>(base), static_cast<double>(position)));
  }
  return probe;
}

bool increasingBeyond(const std::vector<double>& magnitudes, std::size_t skip) {
  for (std::size_t k = skip; k + 1 < magnitudes.size(); ++k)
    if (!(magnitudes[k] < magnitudes[k + 1])) return false;
  return true;
}

}  // namespace rarefact
