#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rarefact/sequences.hpp"

using namespace rarefact;

namespace {

MultiplicativeSequence randomSequence(std::mt19937_64& rng, int maxBase = 6) {
  const int b = std::uniform_int_distribution<int>(2, maxBase)(rng);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  Eigen::VectorXcd w(b);
  w(0) = 1.0;
  for (int c = 1; c < b; ++c) w(c) = std::polar(1.0, angle(rng));
  return MultiplicativeSequence(static_cast<std::uint64_t>(b), w);
}

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("literals") {
  const auto tm = MultiplicativeSequence::fromSigns("+-");
  CHECK(tm.base() == 2);
  CHECK(tm.isSignSequence());
  CHECK_FALSE(tm.isTrivial());

  const auto unicode = MultiplicativeSequence::fromSigns("+ + \xE2\x88\x92");
  CHECK(unicode.base() == 3);
  CHECK(unicode.weight(2) == Complex(-1.0, 0.0));

  const auto json = MultiplicativeSequence::parse(" [[1,0],[0,1],[-1,0]]");
  CHECK(json.base() == 3);
  CHECK(json.weight(1) == Complex(0.0, 1.0));
  CHECK_FALSE(json.isSignSequence());

  CHECK(MultiplicativeSequence::fromSigns("+++").isTrivial());
  CHECK_THROWS_AS(MultiplicativeSequence::fromSigns("+x"), std::invalid_argument);
  CHECK_THROWS_AS(MultiplicativeSequence::fromSigns("-+"), std::invalid_argument);
  CHECK_THROWS_AS(MultiplicativeSequence::fromSigns("+"), std::invalid_argument);
  CHECK_THROWS_AS(MultiplicativeSequence::parse("[[1,0],[0.5,0]]"), std::invalid_argument);
  CHECK_THROWS_AS(MultiplicativeSequence::parse("[[1,0],[0,1]"), std::invalid_argument);
  CHECK_THROWS_AS(MultiplicativeSequence::parse("[[1,0],[0]]"), std::invalid_argument);
}

TEST_CASE("digit sums") {
  const auto seq = MultiplicativeSequence::fromSigns("++-");
  const DigitSums& d = seq.digitSums();
  CHECK(d(0) == Complex(0.0, 0.0));
  CHECK(d(1) == Complex(1.0, 0.0));
  CHECK(d(2) == Complex(2.0, 0.0));
  CHECK(d.total() == Complex(1.0, 0.0));
  CHECK(d.maxModulus() == 2.0);
}

TEST_CASE("partial sum examples") {
  const auto tm = MultiplicativeSequence::thueMorse();
  CHECK(closedFormPartialSum(tm, 0) == Complex(0.0, 0.0));
  CHECK(closedFormPartialSum(tm, 1) == Complex(1.0, 0.0));
  // 1 - 1 - 1 + 1 - 1
  CHECK(closedFormPartialSum(tm, 5) == Complex(-1.0, 0.0));
  CHECK(naivePartialSum(tm, 5) == Complex(-1.0, 0.0));
  for (std::uint64_t k = 1; k < 40; ++k) CHECK(closedFormPartialSum(tm, std::uint64_t{1} << k) == Complex(0.0, 0.0));

  const auto tern = MultiplicativeSequence::fromSigns("++-");
  // t = 1, 1, -1, 1, 1, -1, -1, -1, 1
  CHECK(naivePartialSum(tern, 9) == Complex(1.0, 0.0));
  CHECK(closedFormPartialSum(tern, 9) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(naivePartialSum(tm, 11, 10), BudgetExceeded);
}

TEST_CASE("closed form agrees with the recursive oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const auto seq = randomSequence(rng);
    const std::uint64_t N = std::uniform_int_distribution<std::uint64_t>(0, 30'000)(rng);
    const Complex expected = oracle::partialSum(seq.weights(), N);
    CHECK(near(closedFormPartialSum(seq, N), expected, 1e-9));
    CHECK(near(naivePartialSum(seq, N), expected, 1e-9));
  }
}

TEST_CASE("every prefix of a small sequence") {
  std::mt19937_64 rng(11);
  const auto seq = randomSequence(rng, 5);
  const auto terms = oracle::sequenceTerms(seq.weights(), 3000);
  Complex running(0.0, 0.0);
  for (std::uint64_t N = 0; N < terms.size(); ++N) {
    REQUIRE(near(closedFormPartialSum(seq, N), running, 1e-9));
    REQUIRE(near(term(seq, N), terms[N], 1e-12));
    running += terms[N];
  }
}

TEST_CASE("multiplicativity properties") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto seq = randomSequence(rng);
    const std::uint64_t b = seq.base();
    const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, b - 1)(rng);
    std::uint64_t scaled = c;
    for (int k = 0; k <= 10; ++k, scaled *= b) CHECK(near(term(seq, scaled), term(seq, c), 1e-12));

    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    std::uint64_t bk = 1;
    for (int e = 0; e < k; ++e) bk *= b;
    const std::uint64_t a = std::uniform_int_distribution<std::uint64_t>(1, 5000)(rng);
    const std::uint64_t low = std::uniform_int_distribution<std::uint64_t>(0, bk - 1)(rng);
    CHECK(near(term(seq, a * bk + low), term(seq, a * bk) * term(seq, low), 1e-10));
  }
}

TEST_CASE("popcount Thue-Morse") {
  const auto tm = MultiplicativeSequence::thueMorse();
  for (std::uint64_t n = 0; n < (1u << 16); ++n) REQUIRE(term(tm, n).real() == thueMorseFast(n));
  CHECK(thueMorseFast(3) == 1);
  CHECK(thueMorseFast(7) == -1);
}

TEST_CASE("digitsOf") {
  CHECK(digitsOf(0, 2).empty());
  CHECK(digitsOf(6, 2) == std::vector<unsigned>{0, 1, 1});
  CHECK(digitsOf(10, 3) == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("twists") {
  const auto tm = MultiplicativeSequence::thueMorse();
  const auto twist = buildTwist(tm, 3, 1);
  CHECK(twist.base() == 4);
  const Complex zeta = std::polar(1.0, 2.0 * kPi / 3.0);
  for (std::uint64_t n = 0; n < 500; ++n) {
    Complex expected = term(tm, n);
    for (std::uint64_t k = 0; k < n % 3; ++k) expected *= zeta;
    REQUIRE(near(term(twist, n), expected, 1e-9));
  }
  // 1 - zeta - zeta^2 + 1
  CHECK(near(twist.digitSums().total(), Complex(3.0, 0.0), 1e-12));

  CHECK(buildTwist(tm, 7, 2).base() == 8);
  CHECK(buildTwist(MultiplicativeSequence::fromSigns("++-"), 5, 1).base() == 81);
  CHECK_THROWS_AS(buildTwist(tm, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(buildTwist(tm, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(buildTwist(tm, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(buildTwist(MultiplicativeSequence::fromSigns("++-"), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(buildTwist(tm, 47, 1), std::invalid_argument);
}

TEST_CASE("growth classes") {
  CHECK((classify(MultiplicativeSequence::thueMorse()).kind == GrowthKind::Bounded));
  CHECK((classify(MultiplicativeSequence::fromSigns("++-")).kind == GrowthKind::Logarithmic));
  const GrowthClass twisted = classify(buildTwist(MultiplicativeSequence::thueMorse(), 3, 1));
  CHECK((twisted.kind == GrowthKind::Power));
  CHECK(twisted.exponent == doctest::Approx(std::log(3.0) / std::log(4.0)).epsilon(1e-14));
  CHECK(std::string(toString(GrowthKind::Logarithmic)) == "LOGARITHMIC");
}

TEST_CASE("rarefied sums") {
  const auto tm = MultiplicativeSequence::thueMorse();
  CHECK(rarefiedSum(tm, 3, 1) == Complex(1.0, 0.0));
  CHECK(rarefiedSum(tm, 3, 7) == Complex(3.0, 0.0));
  CHECK(std::abs(rarefiedSumViaTwists(tm, 3, 7) - Complex(3.0, 0.0)) < 1e-12);
  CHECK(rarefiedSumViaTwists(tm, 3, 100'000).real() > 0.0);
  CHECK_THROWS_AS(rarefiedSum(tm, 4, 10), std::invalid_argument);
  CHECK_THROWS_AS(rarefiedSum(tm, 3, 100, 50), BudgetExceeded);

  std::mt19937_64 rng(5);
  for (int p : {3, 5, 7}) {
    const auto seq = randomSequence(rng, 2);
    const RarefiedSummer summer(seq, p);
    CHECK(summer.twists().size() == static_cast<std::size_t>(p - 1));
    for (std::uint64_t N = 0; N < 3000; N += 31)
      REQUIRE(std::abs(summer(N) - oracle::rarefiedSum(seq.weights(), p, N)) < 1e-6);
  }
}

TEST_CASE("normalized 3-rarefied Thue-Morse sums at powers of 4") {
  const RarefiedSummer summer(MultiplicativeSequence::thueMorse(), 3);
  const double alpha = std::log(3.0) / std::log(4.0);
  for (int k = 1; k <= 12; ++k) {
    const auto N = static_cast<std::uint64_t>(std::pow(4.0, k));
    CHECK(summer(N).real() / std::pow(static_cast<double>(N), alpha) == doctest::Approx(2.0 / 3.0));
  }
}
