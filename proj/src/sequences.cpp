#include "rarefact/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <string>

#include <json.hpp>

#include "rarefact/primes.hpp"

namespace rarefact {

namespace {

DigitSums makeDigitSums(const Eigen::VectorXcd& w) {
  DigitSums sums;
  sums.partials = Eigen::VectorXcd::Zero(w.size() + 1);
  for (Eigen::Index c = 0; c < w.size(); ++c) sums.partials(c + 1) = sums.partials(c) + w(c);
  return sums;
}

Complex rootOfUnity(long k, int p) {
  const long r = ((k % p) + p) % p;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / p);
}

}  // namespace

MultiplicativeSequence::MultiplicativeSequence(std::uint64_t base, Eigen::VectorXcd weights)
    : base_(base), weights_(std::move(weights)) {
  if (base_ < 2) throw std::invalid_argument("sequence base must be at least 2");
  if (static_cast<std::uint64_t>(weights_.size()) != base_)
    throw std::invalid_argument("expected " + std::to_string(base_) + " digit weights, got " +
                                std::to_string(weights_.size()));
  if (std::abs(weights_(0) - Complex(1.0, 0.0)) > kUnitTolerance)
    throw std::invalid_argument("the weight of digit 0 must be 1");
  for (Eigen::Index c = 0; c < weights_.size(); ++c) {
    if (!std::isfinite(weights_(c).real()) || !std::isfinite(weights_(c).imag()) ||
        std::abs(std::abs(weights_(c)) - 1.0) > kUnitTolerance)
      throw std::invalid_argument("digit weight " + std::to_string(c) + " is not of modulus 1");
  }
  sums_ = makeDigitSums(weights_);
  trivial_ = ((weights_.array() - Complex(1.0, 0.0)).abs() <= kUnitTolerance).all();
}

MultiplicativeSequence MultiplicativeSequence::fromSigns(std::string_view signs) {
  std::vector<double> values;
  for (std::size_t i = 0; i < signs.size();) {
    const unsigned char ch = static_cast<unsigned char>(signs[i]);
    if (ch == '+') {
      values.push_back(1.0);
      ++i;
    } else if (ch == '-') {
      values.push_back(-1.0);
      ++i;
    } else if (signs.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      values.push_back(-1.0);
      i += 3;
    } else if (std::isspace(ch)) {
      ++i;
    } else {
      throw std::invalid_argument("malformed sign literal '" + std::string(signs) + "'");
    }
  }
  Eigen::VectorXcd w(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) w(static_cast<Eigen::Index>(i)) = values[i];
  return MultiplicativeSequence(values.size(), std::move(w));
}

MultiplicativeSequence MultiplicativeSequence::fromJson(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed weight list: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("weight list must be a JSON array");
  Eigen::VectorXcd w(static_cast<Eigen::Index>(doc.size()));
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& pair = doc[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument("each weight must be a [re, im] pair");
    w(static_cast<Eigen::Index>(i)) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return MultiplicativeSequence(doc.size(), std::move(w));
}

MultiplicativeSequence MultiplicativeSequence::parse(std::string_view literal) {
  const auto first = literal.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && literal[first] == '[') return fromJson(literal);
  return fromSigns(literal);
}

bool MultiplicativeSequence::isSignSequence() const {
  return ((weights_.array() - Complex(1.0, 0.0)).abs() <= kUnitTolerance ||
          (weights_.array() + Complex(1.0, 0.0)).abs() <= kUnitTolerance)
      .all();
}

std::vector<unsigned> digitsOf(std::uint64_t n, std::uint64_t base) {
  std::vector<unsigned> digits;
  while (n > 0) {
    digits.push_back(static_cast<unsigned>(n % base));
    n /= base;
  }
  return digits;
}

Complex term(const MultiplicativeSequence& seq, std::uint64_t n) {
  Complex value(1.0, 0.0);
  const std::uint64_t b = seq.base();
  for (; n > 0; n /= b) value *= seq.weight(n % b);
  return value;
}

int thueMorseFast(std::uint64_t n) { return (std::popcount(n) & 1) ? -1 : 1; }

Complex naivePartialSum(const MultiplicativeSequence& seq, std::uint64_t N, std::uint64_t bound) {
  if (N > bound)
    throw BudgetExceeded("naive partial sum of " + std::to_string(N) +
                         " terms exceeds the oracle bound " + std::to_string(bound));
  // Odometer over the base-b digits of n; above[i] is the product of the
  // weights of digits i and higher, so only the carried positions change.
  const std::uint64_t b = seq.base();
  std::vector<unsigned> digit(65, 0);
  std::vector<Complex> above(66, Complex(1.0, 0.0));
  Complex sum(0.0, 0.0);
  for (std::uint64_t n = 0; n < N; ++n) {
    sum += above[0];
    std::size_t i = 0;
    while (digit[i] + 1 == b) digit[i++] = 0;
    ++digit[i];
    for (std::size_t k = i + 1; k-- > 0;) above[k] = above[k + 1] * seq.weight(digit[k]);
  }
  return sum;
}

namespace detail {

Complex integerPower(Complex z, long e) {
  if (e < 0) return Complex(1.0, 0.0) / integerPower(z, -e);
  Complex result(1.0, 0.0);
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

Complex digitSeries(const MultiplicativeSequence& seq, long top, std::span<const unsigned> digits) {
  const DigitSums& d = seq.digitSums();
  const Complex growth = d.total();
  Complex sum(0.0, 0.0);
  Complex prefix(1.0, 0.0);
  long position = top;
  for (const unsigned c : digits) {
    if (c != 0) sum += prefix * d(c) * integerPower(growth, position);
    prefix *= seq.weight(c);
    --position;
  }
  return sum;
}

}  // namespace detail

Complex closedFormPartialSum(const MultiplicativeSequence& seq, std::uint64_t N) {
  std::vector<unsigned> digits = digitsOf(N, seq.base());
  if (digits.empty()) return Complex(0.0, 0.0);
  const long top = static_cast<long>(digits.size()) - 1;
  std::reverse(digits.begin(), digits.end());
  return detail::digitSeries(seq, top, digits);
}

MultiplicativeSequence buildTwist(const MultiplicativeSequence& t, int p, int j,
                                  std::uint64_t maxBase) {
  requireOddPrime(p);
  if (t.base() % static_cast<std::uint64_t>(p) == 0)
    throw std::invalid_argument("twist prime " + std::to_string(p) + " divides the base");
  if (j < 1 || j >= p)
    throw std::invalid_argument("twist index must lie in 1.." + std::to_string(p - 1));
  const int s = multiplicativeOrder(t.base(), p);
  std::uint64_t big = 1;
  for (int i = 0; i < s; ++i) {
    if (big > maxBase / t.base())
      throw std::invalid_argument("twisted base " + std::to_string(t.base()) + "^" +
                                  std::to_string(s) + " exceeds the supported size");
    big *= t.base();
  }
  Eigen::VectorXcd w(static_cast<Eigen::Index>(big));
  for (std::uint64_t c = 0; c < big; ++c)
    w(static_cast<Eigen::Index>(c)) =
        rootOfUnity(static_cast<long>((static_cast<std::uint64_t>(j) * c) % p), p) * term(t, c);
  w(0) = Complex(1.0, 0.0);
  return MultiplicativeSequence(big, std::move(w));
}

GrowthClass classify(const MultiplicativeSequence& seq) {
  const double growth = std::abs(seq.digitSums().total());
  if (growth < 1.0 - kClassifyTolerance) return {GrowthKind::Bounded, 0.0};
  if (growth <= 1.0 + kClassifyTolerance) return {GrowthKind::Logarithmic, 0.0};
  return {GrowthKind::Power, std::log(growth) / std::log(static_cast<double>(seq.base()))};
}

const char* toString(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::Bounded: return "BOUNDED";
    case GrowthKind::Logarithmic: return "LOGARITHMIC";
    case GrowthKind::Power: return "POWER";
  }
  return "?";
}

Complex rarefiedSum(const MultiplicativeSequence& t, int p, std::uint64_t N, std::uint64_t bound) {
  requireOddPrime(p);
  if (t.base() % static_cast<std::uint64_t>(p) == 0)
    throw std::invalid_argument("rarefaction prime divides the base");
  if (N > bound)
    throw BudgetExceeded("naive rarefied sum over " + std::to_string(N) +
                         " terms exceeds the oracle bound " + std::to_string(bound));
  Complex sum(0.0, 0.0);
  for (std::uint64_t n = 0; n < N; n += static_cast<std::uint64_t>(p)) sum += term(t, n);
  return sum;
}

RarefiedSummer::RarefiedSummer(const MultiplicativeSequence& t, int p)
    : base_(t), p_(p), realBase_((t.weights().imag().array() == 0.0).all()) {
  twists_.reserve(static_cast<std::size_t>(p > 1 ? p - 1 : 0));
  for (int j = 1; j < p; ++j) twists_.push_back(buildTwist(t, p, j));
}

Complex RarefiedSummer::operator()(std::uint64_t N) const {
  Complex sum = closedFormPartialSum(base_, N);
  for (const auto& twist : twists_) sum += closedFormPartialSum(twist, N);
  sum /= static_cast<double>(p_);
  // Twists j and p - j of a real sequence are conjugate.
  if (realBase_) sum.imag(0.0);
  return sum;
}

Complex rarefiedSumViaTwists(const MultiplicativeSequence& t, int p, std::uint64_t N) {
  return RarefiedSummer(t, p)(N);
}

}  // namespace rarefact
