#pragma once

// Exact base-b expansions of positive reals.
//
// Fractional digits come either from a rational remainder (long division,
// which always yields the canonical expansion that does not end in
// repeated b-1) or from an explicit prefix followed by a repeating period.
// Binary floating point never enters the digit generation.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rarefact {

class DigitExpansion {
 public:
  /// num/den in base b. Requires num >= 0, den > 0 and den < 2^62.
  static DigitExpansion fromRational(unsigned base, std::int64_t num, std::int64_t den);

  /// The exact value of a finite, non-negative double.
  static DigitExpansion fromDouble(unsigned base, double x);

  /// Digit string such as "12.0121" or "0.0(01)"; the parenthesised group
  /// repeats forever. Digits above 9 are written as letters a..z.
  static DigitExpansion fromDigitString(unsigned base, std::string_view text);

  /// Explicit digits. integerDigits is least significant first.
  static DigitExpansion fromDigits(unsigned base, std::vector<unsigned> integerDigits,
                                   std::vector<unsigned> fractionPrefix,
                                   std::vector<unsigned> fractionPeriod = {});

  unsigned base() const { return base_; }

  /// Integer digits, least significant first (c_0, c_1, ...). Empty when
  /// the value is below 1.
  const std::vector<unsigned>& integerDigits() const { return integer_; }

  /// Index of the leading integer digit, -1 when the value is below 1.
  long topIndex() const { return static_cast<long>(integer_.size()) - 1; }

  /// The first count fractional digits c_{-1}, c_{-2}, ...
  std::vector<unsigned> fractionalDigits(std::size_t count) const;

  bool isZero() const;

  /// True when only finitely many digits are nonzero.
  bool isTerminating() const;

  /// For a terminating expansion X b^{-m}, the other expansion, which ends
  /// in an infinite run of b-1. Throws std::logic_error otherwise, and for
  /// the value zero.
  DigitExpansion alternate() const;

  /// Multiply by b^shift exactly by moving the radix point. Only valid for
  /// explicit expansions or shift >= 0.
  DigitExpansion shifted(long shift) const;

  /// Approximate value, for diagnostics.
  double approximate(std::size_t fractionDigits = 64) const;

 private:
  explicit DigitExpansion(unsigned base) : base_(base) {}

  unsigned base_;
  std::vector<unsigned> integer_;
  // Explicit form.
  std::vector<unsigned> prefix_;
  std::vector<unsigned> period_;
  // Long-division form, active when den_ > 0.
  std::uint64_t remainder_ = 0;
  std::uint64_t den_ = 0;
};

}  // namespace rarefact
