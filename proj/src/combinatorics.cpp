#include "rarefact/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rarefact/primes.hpp"

namespace rarefact {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t value = 1;
  for (int i = 2; i <= n; ++i) value *= static_cast<std::uint64_t>(i);
  return value;
}

// Set partitions of the elements of `mask`, each given as a vector of block
// masks, via restricted growth strings over the elements in increasing order.
std::vector<std::vector<std::uint32_t>> partitionsOfMask(std::uint32_t mask) {
  std::vector<int> elements;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) elements.push_back(std::countr_zero(m));
  const int k = static_cast<int>(elements.size());
  std::vector<std::vector<std::uint32_t>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  std::vector<int> prefixMax(static_cast<std::size_t>(k), 0);
  while (true) {
    const int blocks = prefixMax.back() + 1;
    std::vector<std::uint32_t> result(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < k; ++i) result[static_cast<std::size_t>(rgs[i])] |= 1u << elements[i];
    out.push_back(std::move(result));
    // Advance to the next restricted growth string.
    int i = k - 1;
    while (i > 0 && rgs[i] > prefixMax[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefixMax[i] = std::max(prefixMax[i - 1], rgs[i]);
    for (int t = i + 1; t < k; ++t) {
      rgs[t] = 0;
      prefixMax[t] = prefixMax[i];
    }
  }
  return out;
}

std::uint64_t keyOfBlocks(int n, const std::vector<std::uint32_t>& blocks) {
  std::array<int, 32> label{};
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::uint32_t m = blocks[b]; m != 0; m &= m - 1) label[std::countr_zero(m)] = static_cast<int>(b);
  std::array<int, 32> renamed;
  renamed.fill(-1);
  int next = 0;
  std::uint64_t key = 0;
  for (int e = 0; e < n; ++e) {
    int& r = renamed[static_cast<std::size_t>(label[e])];
    if (r < 0) r = next++;
    key |= static_cast<std::uint64_t>(r) << (4 * e);
  }
  return key;
}

// Pascal's triangle, grown on demand and shared.
class PascalTriangle {
 public:
  BigInt get(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      std::vector<BigInt> row(rows_.size() + 1);
      row.front() = 1;
      row.back() = 1;
      const auto& prev = rows_.back();
      for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  static PascalTriangle& instance() {
    static PascalTriangle triangle;
    return triangle;
  }

 private:
  PascalTriangle() { rows_.push_back({BigInt(1)}); }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace

std::uint64_t subsetCount(int residue, int n, int p, std::uint64_t bound) {
  requireOddPrime(p);
  if (n < 0 || n > p - 1) throw std::invalid_argument("subset size must lie in 0..p-1");
  if (binomial(p - 1, n) > bound)
    throw BudgetExceeded("C(" + std::to_string(p - 1) + ", " + std::to_string(n) +
                         ") subsets exceed the enumeration bound");
  const int target = ((residue % p) + p) % p;
  // Walk the n-combinations of 1..p-1 in lexicographic order.
  std::vector<int> chosen(static_cast<std::size_t>(n));
  std::iota(chosen.begin(), chosen.end(), 1);
  std::uint64_t count = 0;
  while (true) {
    const int sum = std::accumulate(chosen.begin(), chosen.end(), 0) % p;
    if (sum == target) ++count;
    int i = n - 1;
    while (i >= 0 && chosen[static_cast<std::size_t>(i)] == p - 1 - (n - 1 - i)) --i;
    if (i < 0) break;
    ++chosen[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < n; ++t)
      chosen[static_cast<std::size_t>(t)] = chosen[static_cast<std::size_t>(t - 1)] + 1;
  }
  return count;
}

BigInt sequenceCountClosedForm(int x, int n, int p) {
  requireOddPrime(p);
  if (x != 0 && x != 1) throw std::invalid_argument("closed form covers residues 0 and 1 only");
  if (n < 0) throw std::invalid_argument("sequence length must be non-negative");
  const BigInt all = boost::multiprecision::pow(BigInt(p - 1), static_cast<unsigned>(n));
  const bool even = n % 2 == 0;
  if (x == 0) return even ? (all + p - 1) / p : (all - p + 1) / p;
  return even ? (all - 1) / p : (all + 1) / p;
}

std::uint64_t sequenceCountBrute(int x, std::span<const int> coefficients, int p) {
  requireOddPrime(p);
  const auto n = coefficients.size();
  std::vector<int> values(n, 1);
  const int target = ((x % p) + p) % p;
  std::uint64_t count = 0;
  while (true) {
    long sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += static_cast<long>(coefficients[i]) * values[i];
    if (((sum % p) + p) % p == target) ++count;
    std::size_t i = 0;
    while (i < n && values[i] == p - 1) values[i++] = 1;
    if (i == n) break;
    ++values[i];
  }
  return count;
}

Partition::Partition(int n, std::vector<std::uint32_t> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0 || n > 31) throw std::invalid_argument("partition ground set too large");
  std::uint32_t seen = 0;
  for (std::uint32_t b : blocks_) {
    if (b == 0) throw std::invalid_argument("partition blocks must be nonempty");
    if (seen & b) throw std::invalid_argument("partition blocks must be disjoint");
    seen |= b;
  }
  const std::uint32_t full = n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1));
  if (seen != full) throw std::invalid_argument("partition blocks must cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(), [](std::uint32_t a, std::uint32_t b) {
    const int sa = std::popcount(a);
    const int sb = std::popcount(b);
    if (sa != sb) return sa > sb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
}

std::vector<int> Partition::type() const {
  std::vector<int> sizes;
  for (std::uint32_t b : blocks_) sizes.push_back(std::popcount(b));
  return sizes;
}

std::uint64_t Partition::key() const { return keyOfBlocks(n_, blocks_); }

bool coarserOrEqual(const Partition& tau, const Partition& pi) {
  if (tau.size() != pi.size()) return false;
  for (std::uint32_t small : pi.blocks()) {
    const bool inside = std::any_of(tau.blocks().begin(), tau.blocks().end(),
                                    [small](std::uint32_t big) { return (small & ~big) == 0; });
    if (!inside) return false;
  }
  return true;
}

std::vector<Partition> enumeratePartitions(int n) {
  if (n < 0 || n > kMaxPartitionSize)
    throw std::invalid_argument("partition enumeration supports n <= " +
                                std::to_string(kMaxPartitionSize));
  std::vector<Partition> out;
  const std::uint32_t full = n == 0 ? 0u : (1u << n) - 1;
  for (auto& blocks : partitionsOfMask(full)) out.emplace_back(n, std::move(blocks));
  return out;
}

PartitionLattice::PartitionLattice(int n) : n_(n), partitions_(enumeratePartitions(n)) {
  // Process from the finest partition upwards: every proper refinement of
  // x has more blocks than x.
  std::vector<std::size_t> order(partitions_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return partitions_[a].blockCount() > partitions_[b].blockCount();
  });
  std::unordered_map<std::uint64_t, std::int64_t> known;
  known.reserve(partitions_.size() * 2);
  mobius_.assign(partitions_.size(), 0);

  for (std::size_t idx : order) {
    const Partition& x = partitions_[idx];
    const std::uint64_t selfKey = x.key();
    if (x.blockCount() == n_) {
      mobius_[idx] = 1;
      known.emplace(selfKey, 1);
      continue;
    }
    // Refinements of x are products of partitions of its blocks.
    std::vector<std::vector<std::vector<std::uint32_t>>> perBlock;
    for (std::uint32_t b : x.blocks()) perBlock.push_back(partitionsOfMask(b));
    std::vector<std::size_t> pick(perBlock.size(), 0);
    std::int64_t sum = 0;
    std::vector<std::uint32_t> blocks;
    while (true) {
      blocks.clear();
      for (std::size_t b = 0; b < perBlock.size(); ++b) {
        const auto& part = perBlock[b][pick[b]];
        blocks.insert(blocks.end(), part.begin(), part.end());
      }
      const std::uint64_t key = keyOfBlocks(n_, blocks);
      if (key != selfKey) sum += known.at(key);
      std::size_t b = 0;
      while (b < pick.size() && ++pick[b] == perBlock[b].size()) pick[b++] = 0;
      if (b == pick.size()) break;
    }
    mobius_[idx] = -sum;
    known.emplace(selfKey, -sum);
  }
}

const PartitionLattice& PartitionLattice::of(int n) {
  if (n < 0 || n > kMaxPartitionSize)
    throw std::invalid_argument("partition lattice supports n <= " +
                                std::to_string(kMaxPartitionSize));
  static std::array<std::once_flag, kMaxPartitionSize + 1> flags;
  static std::array<std::unique_ptr<PartitionLattice>, kMaxPartitionSize + 1> cache;
  const auto i = static_cast<std::size_t>(n);
  std::call_once(flags[i], [&] { cache[i].reset(new PartitionLattice(n)); });
  return *cache[i];
}

std::int64_t PartitionLattice::mobius(const Partition& x) const {
  const auto it = std::find(partitions_.begin(), partitions_.end(), x);
  if (it == partitions_.end()) throw std::invalid_argument("partition not in this lattice");
  return mobius_[static_cast<std::size_t>(it - partitions_.begin())];
}

std::int64_t mobius(const Partition& x) { return PartitionLattice::of(x.size()).mobius(x); }

std::int64_t mobiusProductFormula(const Partition& x) {
  std::int64_t value = 1;
  for (int size : x.type()) {
    const auto f = static_cast<std::int64_t>(factorial(size - 1));
    value *= (size - 1) % 2 == 0 ? f : -f;
  }
  return value;
}

std::int64_t mobiusInversionDifference(int n) {
  const PartitionLattice& lattice = PartitionLattice::of(n);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < lattice.partitions().size(); ++i) {
    const int blocks = lattice.partitions()[i].blockCount();
    sum += (blocks % 2 == 0 ? 1 : -1) * lattice.mobiusValues()[i];
  }
  return sum;
}

LinearForm::LinearForm(int prime, std::vector<int> coeffs) : p(prime), coefficients(std::move(coeffs)) {
  requireOddPrime(p);
  if (static_cast<int>(coefficients.size()) != p - 1)
    throw std::invalid_argument("a linear form needs exactly p - 1 coefficients");
  for (int c : coefficients)
    if (c < 0 || c > 2) throw std::invalid_argument("linear form coefficients must be 0, 1 or 2");
}

int LinearForm::count(int value) const {
  return static_cast<int>(std::count(coefficients.begin(), coefficients.end(), value));
}

BigInt linearFormDifference(const LinearForm& f) {
  const int n0 = f.count(0);
  const int n1 = f.count(1);
  const int n2 = f.count(2);
  if (n1 + 2 * n2 < f.p) {
    const BigInt c = binomial(n1 + n2, n1);
    return (n1 + n2) % 2 == 0 ? c : BigInt(-c);
  }
  const BigInt c = binomial(n0 + n1, n0);
  return (n0 + n1) % 2 == 0 ? c : BigInt(-c);
}

LinearFormCounts bruteLinearFormCounts(const LinearForm& f) {
  if (f.p > 9) throw std::invalid_argument("permutation enumeration supports p <= 9");
  std::vector<int> x(static_cast<std::size_t>(f.p - 1));
  std::iota(x.begin(), x.end(), 1);
  LinearFormCounts counts;
  counts.permutationCounts.assign(static_cast<std::size_t>(f.p), 0);
  do {
    int value = 0;
    for (std::size_t k = 0; k < x.size(); ++k) value += f.coefficients[k] * x[k];
    ++counts.permutationCounts[static_cast<std::size_t>(value % f.p)];
  } while (std::next_permutation(x.begin(), x.end()));
  const std::uint64_t symmetry = factorial(f.count(0)) * factorial(f.count(1)) * factorial(f.count(2));
  for (std::uint64_t b : counts.permutationCounts) {
    if (b % symmetry != 0) throw std::logic_error("permutation count not divisible by slot symmetry");
    counts.classCounts.push_back(b / symmetry);
  }
  return counts;
}

std::int64_t bruteLinearFormDifference(const LinearForm& f) {
  return bruteLinearFormCounts(f).difference();
}

BigInt binomial(int n, int k) { return PascalTriangle::instance().get(n, k); }

AlternatingSumCheck binomialAlternatingSum(int m, int n) {
  if (m < 0 || n < m || n < 1) throw std::invalid_argument("expected n >= m >= 0 and n >= 1");
  AlternatingSumCheck check;
  for (int k = 0; k <= m; ++k) {
    const BigInt c = binomial(n, k);
    check.lhs += (k + n) % 2 == 0 ? c : BigInt(-c);
  }
  const BigInt c = binomial(n - 1, m);
  check.rhs = (m + n) % 2 == 0 ? c : BigInt(-c);
  check.equal = check.lhs == check.rhs;
  return check;
}

}  // namespace rarefact
