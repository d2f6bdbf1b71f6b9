#pragma once

// Counting over F_p^x and the partition lattice.
//
// A_i(n, p): n-element subsets of F_p^x summing to i.
// E_x(n, p): length-n sequences over F_p^x summing to x.
// Pi_n:      set partitions of {1..n} ordered by reverse refinement, with
//            Moebius function mu(0, x).
// Linear forms f = f_1 x_1 + ... + f_{p-1} x_{p-1}, f_k in {0, 1, 2},
// evaluated on permutations (x_1..x_{p-1}) of F_p^x.

#include <cstdint>
#include <span>
#include <vector>

#include "rarefact/common.hpp"

namespace rarefact {

inline constexpr std::uint64_t kSubsetEnumerationBound = 10'000'000;
inline constexpr int kMaxPartitionSize = 10;

/// A_i(n, p) by enumerating n-subsets of {1..p-1}. Throws BudgetExceeded if
/// C(p-1, n) exceeds the bound, std::invalid_argument if n > p - 1 or p is
/// not an odd prime.
std::uint64_t subsetCount(int residue, int n, int p,
                          std::uint64_t bound = kSubsetEnumerationBound);

/// E_x(n, p) from the closed form; x must be 0 or 1.
BigInt sequenceCountClosedForm(int x, int n, int p);

/// E_x(n, p) with arbitrary coefficients k_i in F_p^x, by enumeration of
/// all (p-1)^n sequences. Test oracle for the closed form.
std::uint64_t sequenceCountBrute(int x, std::span<const int> coefficients, int p);

/// A set partition of {1..n}; block i is a bitmask over elements 1..n
/// (bit e-1 stands for element e).
class Partition {
 public:
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint
  /// and cover {1..n}. Blocks are stored in canonical order: size
  /// descending, then smallest element ascending.
  Partition(int n, std::vector<std::uint32_t> blocks);

  int size() const { return n_; }
  const std::vector<std::uint32_t>& blocks() const { return blocks_; }
  int blockCount() const { return static_cast<int>(blocks_.size()); }
  /// Block sizes, nonincreasing.
  std::vector<int> type() const;

  /// Restricted growth string: element e gets the index of its block in
  /// order of first appearance, packed 4 bits per element.
  std::uint64_t key() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  int n_;
  std::vector<std::uint32_t> blocks_;
};

/// tau >= pi in Pi_n: every block of pi lies inside a block of tau.
bool coarserOrEqual(const Partition& tau, const Partition& pi);

/// All partitions of {1..n}. Throws std::invalid_argument for n outside
/// 0..kMaxPartitionSize.
std::vector<Partition> enumeratePartitions(int n);

/// Pi_n with the Moebius values mu(0, x), computed once per n from the
/// recursive definition mu(0, x) = -sum_{y < x} mu(0, y) and then shared.
class PartitionLattice {
 public:
  static const PartitionLattice& of(int n);

  int size() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<std::int64_t>& mobiusValues() const { return mobius_; }

  std::int64_t mobius(const Partition& x) const;

 private:
  explicit PartitionLattice(int n);

  int n_;
  std::vector<Partition> partitions_;
  std::vector<std::int64_t> mobius_;
};

/// mu(0, x) via the lattice recursion.
std::int64_t mobius(const Partition& x);

/// prod over blocks of (-1)^{|B|-1} (|B|-1)!.
std::int64_t mobiusProductFormula(const Partition& x);

/// sum_{y in Pi_n} (-1)^{c(y)} mu(0, y), with c(y) the block count.
std::int64_t mobiusInversionDifference(int n);

struct LinearForm {
  int p = 0;
  std::vector<int> coefficients;

  /// Throws std::invalid_argument unless p is an odd prime and there are
  /// p - 1 coefficients in {0, 1, 2}.
  LinearForm(int p, std::vector<int> coefficients);

  int count(int value) const;
};

/// A_0(f, p) - A_1(f, p) from the small-sum / big-sum binomials. The big-sum
/// branch (via 2 - f) applies once n_1 + 2 n_2 >= p.
BigInt linearFormDifference(const LinearForm& f);

struct LinearFormCounts {
  /// B_i: permutations of F_p^x with f(x) = i, indexed by i.
  std::vector<std::uint64_t> permutationCounts;
  /// A_i = B_i / (n_0! n_1! n_2!).
  std::vector<std::uint64_t> classCounts;

  std::int64_t difference() const {
    return static_cast<std::int64_t>(classCounts[0]) - static_cast<std::int64_t>(classCounts[1]);
  }
};

/// Enumerate all (p-1)! permutations. Throws std::invalid_argument for p > 9.
LinearFormCounts bruteLinearFormCounts(const LinearForm& f);

std::int64_t bruteLinearFormDifference(const LinearForm& f);

/// Exact binomial coefficient from Pascal's rule; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

struct AlternatingSumCheck {
  BigInt lhs;  // sum_{k=0}^m (-1)^{k+n} C(n, k)
  BigInt rhs;  // (-1)^{m+n} C(n-1, m)
  bool equal = false;
};

/// Requires n >= m >= 0 and n >= 1.
AlternatingSumCheck binomialAlternatingSum(int m, int n);

}  // namespace rarefact
