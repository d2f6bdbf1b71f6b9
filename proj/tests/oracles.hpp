#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code paths with the library beyond its public types.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "rarefact/common.hpp"

namespace oracle {

using rarefact::BigInt;
using rarefact::Complex;

// t_0..t_{N-1} from t_n = t_{floor(n/b)} w_{n mod b}.
inline std::vector<Complex> sequenceTerms(const Eigen::VectorXcd& w, std::uint64_t N) {
  const auto b = static_cast<std::uint64_t>(w.size());
  std::vector<Complex> t(N);
  for (std::uint64_t n = 0; n < N; ++n)
    t[n] = n == 0 ? Complex(1.0, 0.0) : t[n / b] * w(static_cast<Eigen::Index>(n % b));
  return t;
}

inline Complex partialSum(const Eigen::VectorXcd& w, std::uint64_t N) {
  Complex s(0.0, 0.0);
  for (const Complex& v : sequenceTerms(w, N)) s += v;
  return s;
}

inline Complex rarefiedSum(const Eigen::VectorXcd& w, int p, std::uint64_t N) {
  const auto t = sequenceTerms(w, N);
  Complex s(0.0, 0.0);
  for (std::uint64_t n = 0; n < N; n += static_cast<std::uint64_t>(p)) s += t[n];
  return s;
}

// n-subsets of {1..p-1} summing to residue, by bitmask.
inline std::uint64_t subsetCount(int residue, int n, int p) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << (p - 1)); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    int sum = 0;
    for (int e = 1; e < p; ++e)
      if (mask & (1u << (e - 1))) sum += e;
    if (sum % p == residue) ++count;
  }
  return count;
}

// Set partitions as restricted growth strings.
inline std::vector<std::vector<int>> restrictedGrowthStrings(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int maxLabel) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= maxLabel + 1; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(maxLabel, v));
    }
  };
  if (n == 0) return {{}};
  rec(rec, 1, 0);
  return out;
}

inline int blockCount(const std::vector<int>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// y refines x: equal labels in y imply equal labels in x.
inline bool refines(const std::vector<int>& y, const std::vector<int>& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (y[i] == y[j] && x[i] != x[j]) return false;
  return true;
}

inline std::vector<int> blockSizes(const std::vector<int>& labels) {
  std::vector<int> sizes(static_cast<std::size_t>(blockCount(labels)), 0);
  for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// mu(0, x) for every partition of {1..n}, straight from the poset recursion.
inline std::vector<std::int64_t> posetMobius(const std::vector<std::vector<int>>& parts) {
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return blockCount(parts[a]) > blockCount(parts[b]);
  });
  std::vector<std::int64_t> mu(parts.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& x = parts[order[k]];
    if (k == 0) {
      mu[order[k]] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t m = 0; m < k; ++m)
      if (blockCount(parts[order[m]]) > blockCount(x) && refines(parts[order[m]], x))
        sum += mu[order[m]];
    mu[order[k]] = -sum;
  }
  return mu;
}

// Dense product of polynomials over Z, then folded modulo T^p - 1.
inline std::vector<BigInt> foldedProduct(int p, const std::vector<long>& support,
                                         const std::vector<int>& indices) {
  std::vector<BigInt> poly{BigInt(1)};
  for (int j : indices) {
    const std::size_t degree = (support.size() - 1) * static_cast<std::size_t>(j);
    std::vector<BigInt> next(poly.size() + degree, BigInt(0));
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t k = 0; k < support.size(); ++k)
        next[a + k * static_cast<std::size_t>(j)] += poly[a] * support[k];
    poly = std::move(next);
  }
  std::vector<BigInt> folded(static_cast<std::size_t>(p), BigInt(0));
  for (std::size_t e = 0; e < poly.size(); ++e) folded[e % static_cast<std::size_t>(p)] += poly[e];
  return folded;
}

inline std::int64_t lucas(int n) {
  std::int64_t a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline std::int64_t fibonacci(int n) {
  std::int64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline std::vector<std::int64_t> trialFactor(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q * q <= n; ++q)
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace oracle
