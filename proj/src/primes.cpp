#include "rarefact/primes.hpp"

#include <stdexcept>
#include <string>

namespace rarefact {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> primesInRange(int lo, int hi) {
  std::vector<int> out;
  for (int q = lo < 2 ? 2 : lo; q <= hi; ++q)
    if (isPrime(static_cast<std::uint64_t>(q))) out.push_back(q);
  return out;
}

int multiplicativeOrder(std::uint64_t a, int p) {
  const std::uint64_t r = a % static_cast<std::uint64_t>(p);
  if (r == 0) throw std::invalid_argument("multiplicativeOrder: p divides a");
  std::uint64_t x = r;
  int order = 1;
  while (x != 1) {
    x = x * r % static_cast<std::uint64_t>(p);
    ++order;
  }
  return order;
}

void requireOddPrime(std::int64_t p) {
  if (p < 3 || !isPrime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

}  // namespace rarefact
