#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "rarefact/fractal.hpp"

using namespace rarefact;

namespace {

MultiplicativeSequence halfTurn() {
  Eigen::VectorXcd w(2);
  w << Complex(1.0, 0.0), Complex(0.0, 1.0);
  return MultiplicativeSequence(2, w);
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("digit expansions") {
  const auto third = DigitExpansion::fromRational(2, 1, 3);
  CHECK(third.topIndex() == -1);
  CHECK(third.fractionalDigits(6) == std::vector<unsigned>{0, 1, 0, 1, 0, 1});
  CHECK_FALSE(third.isTerminating());

  const auto x = DigitExpansion::fromRational(3, 23, 9);  // 2.12 in base 3
  CHECK(x.integerDigits() == std::vector<unsigned>{2});
  CHECK(x.fractionalDigits(4) == std::vector<unsigned>{1, 2, 0, 0});
  CHECK(x.isTerminating());
  const auto y = x.alternate();  // 2.11222...
  CHECK(y.fractionalDigits(5) == std::vector<unsigned>{1, 1, 2, 2, 2});
  CHECK(y.approximate() == doctest::Approx(23.0 / 9.0));

  const auto s = DigitExpansion::fromDigitString(3, "12.0(21)");
  CHECK(s.integerDigits() == std::vector<unsigned>{2, 1});
  CHECK(s.fractionalDigits(6) == std::vector<unsigned>{0, 2, 1, 2, 1, 2});

  const auto shiftedUp = x.shifted(2);  // 212
  CHECK(shiftedUp.integerDigits() == std::vector<unsigned>{2, 1, 2});
  CHECK(shiftedUp.fractionalDigits(3) == std::vector<unsigned>{0, 0, 0});
  const auto shiftedDown = s.shifted(-3);  // 0.0120(21)
  CHECK(shiftedDown.topIndex() == -1);
  CHECK(shiftedDown.fractionalDigits(7) == std::vector<unsigned>{0, 1, 2, 0, 2, 1, 2});
  CHECK(third.shifted(3).integerDigits() == std::vector<unsigned>{0, 1});

  const auto d = DigitExpansion::fromDouble(2, 0.375);
  CHECK(d.fractionalDigits(4) == std::vector<unsigned>{0, 1, 1, 0});
  CHECK(DigitExpansion::fromRational(5, 0, 7).isZero());
  CHECK_THROWS(DigitExpansion::fromRational(5, 0, 7).alternate());
  CHECK_THROWS(third.alternate());
  CHECK_THROWS_AS(DigitExpansion::fromDigitString(2, "1.2"), std::invalid_argument);
  CHECK_THROWS_AS(DigitExpansion::fromDigitString(2, "1.(0"), std::invalid_argument);
  CHECK_THROWS_AS(DigitExpansion::fromRational(2, -1, 3), std::invalid_argument);
}

TEST_CASE("profile construction") {
  CHECK_THROWS_AS(FractalProfile(MultiplicativeSequence::thueMorse()), std::invalid_argument);
  CHECK_THROWS_AS(FractalProfile(MultiplicativeSequence::fromSigns("++-")), std::invalid_argument);
  const FractalProfile prof(halfTurn());
  // max |d(c)| = sqrt 2, |d(b)| = sqrt 2
  const double expected = std::ceil((std::log(std::sqrt(2.0)) + 12.0 * std::log(10.0)) / std::log(std::sqrt(2.0)));
  CHECK(prof.truncationDepth() == static_cast<long>(expected));
  CHECK(prof.logGrowth().imag() == doctest::Approx(kPi / 4.0));
  CHECK(FractalProfile(halfTurn(), 1).logGrowth().imag() == doctest::Approx(kPi / 4.0 + 2.0 * kPi));
}

TEST_CASE("psi at integers equals the partial sums") {
  const FractalProfile prof(halfTurn());
  for (std::int64_t N = 1; N < 1000; ++N)
    REQUIRE(rel(psi(prof, N), closedFormPartialSum(prof.sequence(), static_cast<std::uint64_t>(N))) < 1e-12);
  CHECK_THROWS_AS(psi(prof, 0), std::invalid_argument);
}

TEST_CASE("scaling law") {
  std::mt19937_64 rng(17);
  for (const auto& seq : {halfTurn(), buildTwist(MultiplicativeSequence::thueMorse(), 3, 1)}) {
    const FractalProfile prof(seq);
    const auto b = static_cast<std::int64_t>(seq.base());
    for (int i = 0; i < 100; ++i) {
      const std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 100'000)(rng);
      const std::int64_t num = std::uniform_int_distribution<std::int64_t>(1, 100 * den)(rng);
      const Complex lhs = psi(prof, b * num, den);
      const Complex rhs = seq.digitSums().total() * psi(prof, num, den);
      REQUIRE(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
    }
  }
}

TEST_CASE("two expansions") {
  const FractalProfile prof(halfTurn());
  for (std::int64_t X = 1; X < 200; ++X) {
    const auto x = DigitExpansion::fromRational(2, X, 64);
    REQUIRE(rel(psi(prof, x.alternate()), psi(prof, x)) < 1e-9);
  }
}

TEST_CASE("continuity bound") {
  const FractalProfile prof(halfTurn());
  const auto& d = prof.sequence().digitSums();
  const double g = std::abs(d.total());
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t den = std::uniform_int_distribution<std::int64_t>(3, 1 << 20)(rng);
    const std::int64_t num = std::uniform_int_distribution<std::int64_t>(1, 8 * den)(rng);
    const auto x = DigitExpansion::fromRational(2, num, den);
    for (int m = 1; m <= 20; ++m) {
      auto shared = x.fractionalDigits(static_cast<std::size_t>(m));
      const auto xm = DigitExpansion::fromDigits(2, x.integerDigits(), shared);
      // sum_{i > m} |d(b)|^{-i}
      const double tail = std::pow(g, -m) / (g - 1.0);
      REQUIRE(std::abs(psi(prof, x) - psi(prof, xm)) <= 2.0 * d.maxModulus() * tail + 1e-12);
    }
  }
}

TEST_CASE("F is periodic") {
  const FractalProfile prof(halfTurn());
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const double y = std::ldexp(static_cast<double>(rng() >> 24), -40) - 3.0;
    REQUIRE(std::abs(profileF(prof, y + 1.0) - profileF(prof, y)) < 1e-8);
  }
  // F(0) = psi(1) = d(1)
  CHECK(std::abs(profileF(prof, 0.0) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("sampling") {
  const FractalProfile prof(halfTurn());
  const auto serial = sampleF(prof, 50, 1);
  const auto parallel = sampleF(prof, 50, 4);
  REQUIRE(serial.size() == 50);
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].y == static_cast<double>(k) / 50.0);
    CHECK(serial[k].value == parallel[k].value);
    CHECK(std::abs(serial[k].value) <= profileBound(prof));
  }
  CHECK_THROWS_AS(sampleF(prof, 1), std::invalid_argument);

  std::ostringstream csv;
  writeSamplesCsv(csv, sampleF(prof, 2));
  CHECK(csv.str().rfind("y,re,im\n0,1,0\n0.5,", 0) == 0);
}

TEST_CASE("difference quotients") {
  const FractalProfile prof(halfTurn());
  const auto probe = differenceQuotientProbe(prof, DigitExpansion::fromRational(2, 5, 7), 30);
  CHECK(probe.divergent);
  REQUIRE(probe.magnitudes.size() == 30);
  CHECK(increasingBeyond(probe.magnitudes, 3));
  for (std::size_t k = 0; k < probe.positions.size(); ++k)
    CHECK(probe.magnitudes[k] == doctest::Approx(std::pow(std::sqrt(2.0), probe.positions[k])).epsilon(1e-6));

  // |d(b)| = b: no blow-up
  Eigen::VectorXcd w = Eigen::VectorXcd::Ones(3);
  const FractalProfile flat(MultiplicativeSequence(3, w));
  CHECK_FALSE(differenceQuotientProbe(flat, DigitExpansion::fromRational(3, 1, 7), 10).divergent);

  CHECK_FALSE(increasingBeyond({1.0, 3.0, 2.0, 4.0}, 0));
  CHECK(increasingBeyond({1.0, 3.0, 2.0, 4.0}, 2));
}
