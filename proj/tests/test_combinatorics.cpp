#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "rarefact/combinatorics.hpp"
#include "rarefact/primes.hpp"

using namespace rarefact;

namespace {

Partition fromLabels(const std::vector<int>& labels) {
  std::vector<std::uint32_t> blocks(static_cast<std::size_t>(oracle::blockCount(labels)), 0);
  for (std::size_t e = 0; e < labels.size(); ++e) blocks[static_cast<std::size_t>(labels[e])] |= 1u << e;
  return Partition(static_cast<int>(labels.size()), blocks);
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("subset counts against bitmask enumeration") {
  for (int p : primesInRange(3, 13))
    for (int n = 0; n < p; ++n)
      for (int i = 0; i < p; ++i) REQUIRE(subsetCount(i, n, p) == oracle::subsetCount(i, n, p));
  CHECK(subsetCount(0, 2, 5) == 2);  // {1,4}, {2,3}
  CHECK_THROWS_AS(subsetCount(0, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(subsetCount(0, 2, 9), std::invalid_argument);
  CHECK_THROWS_AS(subsetCount(0, 20, 41, 1000), BudgetExceeded);
}

TEST_CASE("A_0 - A_1 = (-1)^n") {
  for (int p : primesInRange(3, 13))
    for (int n = 0; n < p; ++n) {
      const auto diff = static_cast<long long>(subsetCount(0, n, p)) - static_cast<long long>(subsetCount(1, n, p));
      REQUIRE(diff == (n % 2 ? -1 : 1));
    }
}

TEST_CASE("sequence counts") {
  CHECK(sequenceCountClosedForm(0, 0, 5) == 1);
  CHECK(sequenceCountClosedForm(1, 0, 5) == 0);
  CHECK(sequenceCountClosedForm(0, 1, 5) == 0);
  CHECK(sequenceCountClosedForm(1, 1, 5) == 1);
  std::mt19937_64 rng(13);
  for (int p : {3, 5, 7})
    for (int n = 0; n <= 5; ++n) {
      std::vector<int> k(static_cast<std::size_t>(n));
      for (int& v : k) v = std::uniform_int_distribution<int>(1, p - 1)(rng);
      CHECK(BigInt(sequenceCountBrute(0, k, p)) == sequenceCountClosedForm(0, n, p));
      CHECK(BigInt(sequenceCountBrute(1, k, p)) == sequenceCountClosedForm(1, n, p));
      // E_0 - E_1 = (-1)^n
      CHECK(sequenceCountClosedForm(0, n, p) - sequenceCountClosedForm(1, n, p) == (n % 2 ? -1 : 1));
    }
  CHECK_THROWS_AS(sequenceCountClosedForm(2, 3, 5), std::invalid_argument);
}

TEST_CASE("partitions") {
  const Partition x(4, {0b0001, 0b1110});
  CHECK(x.blocks() == std::vector<std::uint32_t>{0b1110, 0b0001});
  CHECK(x.type() == std::vector<int>{3, 1});
  CHECK(x.blockCount() == 2);
  CHECK(Partition(4, {0b1110, 0b0001}) == x);
  CHECK_THROWS_AS(Partition(3, {0b011, 0b110}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {0b011}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {0b111, 0}), std::invalid_argument);

  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= kMaxPartitionSize; ++n) CHECK(enumeratePartitions(n).size() == bell[n]);
  CHECK_THROWS_AS(enumeratePartitions(11), std::invalid_argument);
}

TEST_CASE("order relation against the label oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto labels = oracle::restrictedGrowthStrings(n);
    for (const auto& a : labels)
      for (const auto& b : labels) REQUIRE(coarserOrEqual(fromLabels(a), fromLabels(b)) == oracle::refines(b, a));
  }
}

TEST_CASE("Moebius values against the poset oracle") {
  for (int n = 1; n <= 6; ++n) {
    const auto labels = oracle::restrictedGrowthStrings(n);
    const auto mu = oracle::posetMobius(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Partition x = fromLabels(labels[i]);
      REQUIRE(mobius(x) == mu[i]);
      REQUIRE(mobiusProductFormula(x) == mu[i]);
    }
  }
}

TEST_CASE("recursive mu equals the product formula up to n = 9") {
  for (int n = 7; n <= 9; ++n) {
    const auto& lattice = PartitionLattice::of(n);
    for (std::size_t i = 0; i < lattice.partitions().size(); ++i)
      REQUIRE(lattice.mobiusValues()[i] == mobiusProductFormula(lattice.partitions()[i]));
  }
}

TEST_CASE("Moebius values by type on seven items") {
  std::map<std::vector<int>, std::int64_t> byType;
  for (const Partition& x : PartitionLattice::of(7).partitions()) {
    auto t = x.type();
    while (!t.empty() && t.back() == 1) t.pop_back();
    byType[t] = mobius(x);
  }
  CHECK(byType[{}] == 1);
  CHECK(byType[{2}] == -1);
  CHECK(byType[{2, 2}] == 1);
  CHECK(byType[{3}] == 2);
  CHECK(byType[{2, 2, 2}] == -1);
  CHECK(byType[{4}] == -6);
  CHECK(byType[{3, 2}] == -2);
  CHECK(byType[{4, 2}] == 6);
  CHECK(byType[{5}] == 24);
  CHECK(byType[{3, 3}] == 4);
  CHECK(byType[{3, 2, 2}] == 2);
  CHECK(byType[{4, 3}] == -12);
  CHECK(byType[{6}] == -120);
  CHECK(byType[{5, 2}] == -24);
  CHECK(byType[{7}] == 720);
}

TEST_CASE("inversion sum") {
  for (int n = 1; n <= 9; ++n) CHECK(mobiusInversionDifference(n) == (n % 2 ? -factorial(n) : factorial(n)));
  CHECK(mobiusInversionDifference(4) == 24);
}

TEST_CASE("linear forms") {
  const LinearForm f(5, {1, 0, 2, 1});
  CHECK(f.count(0) == 1);
  CHECK(f.count(1) == 2);
  CHECK(f.count(2) == 1);
  CHECK_THROWS_AS(LinearForm(5, {1, 0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearForm(5, {1, 0, 1}), std::invalid_argument);

  // Only ones: A_i(f, p) = A_i(n_1, p).
  const LinearForm ones(7, {1, 1, 1, 0, 0, 0});
  const auto counts = bruteLinearFormCounts(ones);
  for (int i = 0; i < 7; ++i) CHECK(counts.classCounts[static_cast<std::size_t>(i)] == subsetCount(i, 3, 7));
  CHECK(counts.permutationCounts[0] == counts.classCounts[0] * 36);
  CHECK_THROWS_AS(bruteLinearFormCounts(LinearForm(11, std::vector<int>(10, 1))), std::invalid_argument);
}

TEST_CASE("linear-form difference, every pattern at p = 5 and 7") {
  for (int p : {5, 7}) {
    std::vector<int> c(static_cast<std::size_t>(p - 1), 0);
    while (true) {
      const LinearForm f(p, c);
      REQUIRE(linearFormDifference(f) == bruteLinearFormDifference(f));
      std::size_t i = 0;
      while (i < c.size() && c[i] == 2) c[i++] = 0;
      if (i == c.size()) break;
      ++c[i];
    }
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  for (int n = 1; n <= 40; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto check = binomialAlternatingSum(m, n);
      REQUIRE(check.equal);
      REQUIRE(check.lhs == check.rhs);
    }
}
