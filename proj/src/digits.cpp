#include "rarefact/digits.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rarefact {

namespace {

void requireBase(unsigned base) {
  if (base < 2) throw std::invalid_argument("digit expansion base must be at least 2");
}

void stripLeadingZeros(std::vector<unsigned>& integerDigits) {
  while (!integerDigits.empty() && integerDigits.back() == 0) integerDigits.pop_back();
}

unsigned parseDigit(char ch, unsigned base) {
  unsigned value = 0;
  if (ch >= '0' && ch <= '9') {
    value = static_cast<unsigned>(ch - '0');
  } else if (std::isalpha(static_cast<unsigned char>(ch))) {
    value = 10u + static_cast<unsigned>(std::tolower(static_cast<unsigned char>(ch)) - 'a');
  } else {
    throw std::invalid_argument(std::string("unexpected character '") + ch + "' in digit string");
  }
  if (value >= base)
    throw std::invalid_argument(std::string("digit '") + ch + "' out of range for the base");
  return value;
}

}  // namespace

DigitExpansion DigitExpansion::fromRational(unsigned base, std::int64_t num, std::int64_t den) {
  requireBase(base);
  if (num < 0 || den <= 0) throw std::invalid_argument("expected num >= 0 and den > 0");
  if (den >= (std::int64_t{1} << 62)) throw std::invalid_argument("denominator too large");
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  DigitExpansion e(base);
  std::uint64_t whole = static_cast<std::uint64_t>(num / den);
  for (; whole > 0; whole /= base) e.integer_.push_back(static_cast<unsigned>(whole % base));
  e.remainder_ = static_cast<std::uint64_t>(num % den);
  e.den_ = e.remainder_ == 0 ? 0 : static_cast<std::uint64_t>(den);
  return e;
}

DigitExpansion DigitExpansion::fromDouble(unsigned base, double x) {
  requireBase(base);
  if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("expected a finite x >= 0");
  if (x == 0.0) return fromRational(base, 0, 1);
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  int shift = exponent - 53;
  while (shift < 0 && (mantissa & 1) == 0) {
    mantissa >>= 1;
    ++shift;
  }
  if (shift >= 0) {
    if (shift > 9) throw std::invalid_argument("value too large for an exact expansion");
    return fromRational(base, mantissa << shift, 1);
  }
  if (-shift > 61) throw std::invalid_argument("value too small for an exact expansion");
  return fromRational(base, mantissa, std::int64_t{1} << (-shift));
}

DigitExpansion DigitExpansion::fromDigitString(unsigned base, std::string_view text) {
  requireBase(base);
  DigitExpansion e(base);
  std::vector<unsigned> msdFirst;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != '.'; ++i) msdFirst.push_back(parseDigit(text[i], base));
  e.integer_.assign(msdFirst.rbegin(), msdFirst.rend());
  stripLeadingZeros(e.integer_);
  if (i < text.size()) {
    ++i;
    bool inPeriod = false;
    for (; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch == '(') {
        if (inPeriod) throw std::invalid_argument("nested repeat group in digit string");
        inPeriod = true;
      } else if (ch == ')') {
        if (!inPeriod || i + 1 != text.size())
          throw std::invalid_argument("repeat group must close the digit string");
        inPeriod = false;
      } else {
        (inPeriod ? e.period_ : e.prefix_).push_back(parseDigit(ch, base));
      }
    }
    if (inPeriod) throw std::invalid_argument("unterminated repeat group in digit string");
  }
  return e;
}

DigitExpansion DigitExpansion::fromDigits(unsigned base, std::vector<unsigned> integerDigits,
                                          std::vector<unsigned> fractionPrefix,
                                          std::vector<unsigned> fractionPeriod) {
  requireBase(base);
  auto check = [base](const std::vector<unsigned>& ds) {
    for (unsigned d : ds)
      if (d >= base) throw std::invalid_argument("digit out of range for the base");
  };
  check(integerDigits);
  check(fractionPrefix);
  check(fractionPeriod);
  DigitExpansion e(base);
  e.integer_ = std::move(integerDigits);
  stripLeadingZeros(e.integer_);
  e.prefix_ = std::move(fractionPrefix);
  e.period_ = std::move(fractionPeriod);
  return e;
}

std::vector<unsigned> DigitExpansion::fractionalDigits(std::size_t count) const {
  std::vector<unsigned> out;
  out.reserve(count);
  for (std::size_t k = 0; k < prefix_.size() && out.size() < count; ++k) out.push_back(prefix_[k]);
  if (den_ > 0) {
    unsigned __int128 r = remainder_;
    while (out.size() < count) {
      r *= base_;
      out.push_back(static_cast<unsigned>(r / den_));
      r %= den_;
    }
  } else if (!period_.empty()) {
    for (std::size_t k = 0; out.size() < count; k = (k + 1) % period_.size())
      out.push_back(period_[k]);
  } else {
    out.resize(count, 0);
  }
  return out;
}

bool DigitExpansion::isZero() const {
  auto zero = [](unsigned d) { return d == 0; };
  return integer_.empty() && den_ == 0 && std::all_of(prefix_.begin(), prefix_.end(), zero) &&
         std::all_of(period_.begin(), period_.end(), zero);
}

bool DigitExpansion::isTerminating() const {
  if (den_ > 0) {
    std::uint64_t den = den_ / std::gcd(remainder_, den_);
    for (std::uint64_t g = std::gcd(den, std::uint64_t{base_}); g > 1;
         g = std::gcd(den, std::uint64_t{base_}))
      den /= g;
    return den == 1;
  }
  return std::all_of(period_.begin(), period_.end(), [](unsigned d) { return d == 0; });
}

DigitExpansion DigitExpansion::alternate() const {
  if (!isTerminating()) throw std::logic_error("alternate expansion needs a terminating value");
  // Collect the finite fractional digits.
  std::vector<unsigned> fraction;
  if (den_ > 0) {
    unsigned __int128 r = remainder_;
    fraction = prefix_;
    while (r != 0) {
      r *= base_;
      fraction.push_back(static_cast<unsigned>(r / den_));
      r %= den_;
    }
  } else {
    fraction = prefix_;
  }
  while (!fraction.empty() && fraction.back() == 0) fraction.pop_back();

  // Subtract one unit in the last place, borrowing leftwards.
  std::vector<unsigned> integerDigits = integer_;
  bool done = false;
  for (auto it = fraction.rbegin(); it != fraction.rend() && !done; ++it) {
    if (*it == 0) {
      *it = base_ - 1;
    } else {
      --*it;
      done = true;
    }
  }
  for (std::size_t k = 0; k < integerDigits.size() && !done; ++k) {
    if (integerDigits[k] == 0) {
      integerDigits[k] = base_ - 1;
    } else {
      --integerDigits[k];
      done = true;
    }
  }
  if (!done) throw std::logic_error("zero has no alternate expansion");
  return fromDigits(base_, std::move(integerDigits), std::move(fraction), {base_ - 1});
}

DigitExpansion DigitExpansion::shifted(long shift) const {
  DigitExpansion e = *this;
  if (shift > 0) {
    const auto k = static_cast<std::size_t>(shift);
    const std::vector<unsigned> moved = fractionalDigits(k);
    std::vector<unsigned> integerDigits(moved.rbegin(), moved.rend());
    integerDigits.insert(integerDigits.end(), integer_.begin(), integer_.end());
    e.integer_ = std::move(integerDigits);
    stripLeadingZeros(e.integer_);
    if (k <= prefix_.size()) {
      e.prefix_.erase(e.prefix_.begin(), e.prefix_.begin() + static_cast<long>(k));
    } else {
      const std::size_t rest = k - prefix_.size();
      e.prefix_.clear();
      if (den_ > 0) {
        unsigned __int128 r = remainder_;
        for (std::size_t i = 0; i < rest; ++i) r = (r * base_) % den_;
        e.remainder_ = static_cast<std::uint64_t>(r);
      } else if (!period_.empty()) {
        std::rotate(e.period_.begin(),
                    e.period_.begin() + static_cast<long>(rest % period_.size()), e.period_.end());
      }
    }
  } else if (shift < 0) {
    const auto k = static_cast<std::size_t>(-shift);
    std::vector<unsigned> lowFirst = integer_;
    lowFirst.resize(std::max(lowFirst.size(), k), 0);
    std::vector<unsigned> front(lowFirst.rend() - static_cast<long>(k), lowFirst.rend());
    front.insert(front.end(), prefix_.begin(), prefix_.end());
    e.prefix_ = std::move(front);
    e.integer_.assign(lowFirst.begin() + static_cast<long>(k), lowFirst.end());
    stripLeadingZeros(e.integer_);
  }
  return e;
}

double DigitExpansion::approximate(std::size_t fractionDigits) const {
  double value = 0.0;
  for (auto it = integer_.rbegin(); it != integer_.rend(); ++it) value = value * base_ + *it;
  double scale = 1.0;
  for (unsigned d : this->fractionalDigits(fractionDigits)) {
    scale /= base_;
    value += d * scale;
  }
  return value;
}

}  // namespace rarefact
