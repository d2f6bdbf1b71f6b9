#include "rarefact/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "rarefact/combinatorics.hpp"
#include "rarefact/cyclotomic.hpp"
#include "rarefact/fractal.hpp"
#include "rarefact/lucas.hpp"
#include "rarefact/primes.hpp"
#include "rarefact/sequences.hpp"
#include "rarefact/spectral.hpp"

namespace rarefact {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  // Runs one check; an exception counts as a failure with its message.
  void check(const std::string& name, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "threw: " << e.what();
    }
    results_.push_back({suite_, name, ok, detail.str()});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

double relativeError(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

MultiplicativeSequence randomSequence(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> baseDist(2, 6);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const int b = baseDist(rng);
  Eigen::VectorXcd w(b);
  w(0) = 1.0;
  for (int c = 1; c < b; ++c) w(c) = std::polar(1.0, angle(rng));
  return MultiplicativeSequence(static_cast<std::uint64_t>(b), w);
}

MultiplicativeSequence halfTurnSequence() {
  Eigen::VectorXcd w(2);
  w << Complex(1.0, 0.0), Complex(0.0, 1.0);
  return MultiplicativeSequence(2, w);
}

// Reference values for the trace and Lucas rows.
const std::map<int, long long> kTraceTable{{5, 5},   {13, 13},  {17, 34},    {29, 29},  {37, 74},
                                           {41, 410}, {53, 53}, {61, 305}, {73, 18250}, {89, 9434}};
const std::map<int, long long> kLucasTable{{5, 11}, {7, 29}, {11, 199}, {13, 521}, {17, 3571}, {23, 64079}};

}  // namespace

std::vector<CheckResult> verifySequences(const VerifyOptions& opts) {
  Recorder rec("sequences");
  std::mt19937_64 rng(opts.seed);

  rec.check("closed form matches naive sum", [&](std::ostream& d) {
    std::uniform_int_distribution<std::uint64_t> nDist(0, 100'000);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto seq = i % 3 == 0 ? MultiplicativeSequence::thueMorse()
                       : i % 3 == 1 ? MultiplicativeSequence::fromSigns("++-")
                                    : randomSequence(rng);
      const std::uint64_t N = nDist(rng);
      worst = std::max(worst, relativeError(closedFormPartialSum(seq, N), naivePartialSum(seq, N)));
    }
    d << "max relative error " << worst;
    return worst <= 1e-9;
  });

  rec.check("term(c b^k) = term(c)", [&](std::ostream&) {
    for (int i = 0; i < 20; ++i) {
      const auto seq = randomSequence(rng);
      for (std::uint64_t c = 0; c < seq.base(); ++c) {
        std::uint64_t scaled = c;
        for (int k = 0; k <= 10; ++k, scaled *= seq.base())
          if (std::abs(term(seq, scaled) - term(seq, c)) > 1e-12) return false;
      }
    }
    return true;
  });

  rec.check("term(a b^k + c) = term(a b^k) term(c)", [&](std::ostream&) {
    for (int i = 0; i < 200; ++i) {
      const auto seq = randomSequence(rng);
      const int k = std::uniform_int_distribution<int>(1, 8)(rng);
      std::uint64_t bk = 1;
      for (int e = 0; e < k; ++e) bk *= seq.base();
      const std::uint64_t a = std::uniform_int_distribution<std::uint64_t>(0, 1000)(rng);
      const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, bk - 1)(rng);
      if (std::abs(term(seq, a * bk + c) - term(seq, a * bk) * term(seq, c)) > 1e-10) return false;
    }
    return true;
  });

  rec.check("popcount Thue-Morse agrees with digit product", [&](std::ostream&) {
    const auto tm = MultiplicativeSequence::thueMorse();
    for (std::uint64_t n = 0; n < (1u << 20); ++n)
      if (term(tm, n).real() != thueMorseFast(n)) return false;
    return true;
  });

  rec.check("twist decomposition matches direct rarefied sum", [&](std::ostream& d) {
    double worst = 0.0;
    for (int p : primesInRange(3, std::min(opts.pmax, 7))) {
      for (const char* lit : {"+-", "++-"}) {
        const auto seq = MultiplicativeSequence::fromSigns(lit);
        if (seq.base() % p == 0) continue;
        const RarefiedSummer summer(seq, p);
        for (std::uint64_t N = 0; N <= 10'000; N += 97)
          worst = std::max(worst, std::abs(summer(N) - rarefiedSum(seq, p, N)));
      }
    }
    d << "max absolute error " << worst;
    return worst <= 1e-6;
  });

  rec.check("Thue-Morse multiples of 3 have positive partial sums", [&](std::ostream& d) {
    const auto tm = MultiplicativeSequence::thueMorse();
    long running = 0;
    for (std::uint64_t n = 0; n < 100'000; ++n) {
      if (n % 3 == 0) running += thueMorseFast(n);
      if (running <= 0) {
        d << "S_3(" << n + 1 << ") = " << running;
        return false;
      }
    }
    return std::abs(rarefiedSumViaTwists(tm, 3, 100'000) - Complex(double(running), 0.0)) < 1e-6;
  });

  rec.check("S_3(4^k) / 3^k = 2/3", [&](std::ostream& d) {
    const RarefiedSummer summer(MultiplicativeSequence::thueMorse(), 3);
    std::uint64_t N = 4;
    double scale = 3.0;
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k, N *= 4, scale *= 3.0)
      worst = std::max(worst, std::abs(summer(N) / scale - Complex(2.0 / 3.0, 0.0)));
    d << "max deviation " << worst;
    return worst < 1e-9;
  });

  rec.check("growth classes", [&](std::ostream&) {
    return classify(MultiplicativeSequence::thueMorse()).kind == GrowthKind::Bounded &&
           classify(MultiplicativeSequence::fromSigns("++-")).kind == GrowthKind::Logarithmic &&
           classify(halfTurnSequence()).kind == GrowthKind::Power &&
           std::abs(classify(buildTwist(MultiplicativeSequence::thueMorse(), 3, 1)).exponent -
                    std::log(3.0) / std::log(4.0)) < 1e-12;
  });

  return rec.take();
}

std::vector<CheckResult> verifyFractal(const VerifyOptions& opts) {
  Recorder rec("fractal");
  std::mt19937_64 rng(opts.seed + 1);
  const std::vector<FractalProfile> profiles{
      FractalProfile(halfTurnSequence()),
      FractalProfile(buildTwist(MultiplicativeSequence::thueMorse(), 3, 1)),
      FractalProfile(MultiplicativeSequence::parse("[[1,0],[0.5,0.8660254037844386],[1,0]]"))};

  rec.check("psi(b x) = d(b) psi(x)", [&](std::ostream& d) {
    double worst = 0.0;
    std::uniform_int_distribution<std::int64_t> denDist(1, 1'000'000);
    for (const auto& prof : profiles) {
      const auto b = static_cast<std::int64_t>(prof.sequence().base());
      for (int i = 0; i < 100; ++i) {
        const std::int64_t den = denDist(rng);
        const std::int64_t num = std::uniform_int_distribution<std::int64_t>(1, 100 * den - 1)(rng);
        const Complex lhs = psi(prof, b * num, den);
        const Complex rhs = prof.sequence().digitSums().total() * psi(prof, num, den);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      }
    }
    d << "max relative error " << worst;
    return worst <= 1e-9;
  });

  rec.check("F(y + 1) = F(y)", [&](std::ostream& d) {
    double worst = 0.0;
    std::uniform_int_distribution<std::int64_t> grid(0, (std::int64_t{1} << 40) - 1);
    for (const auto& prof : profiles) {
      for (int i = 0; i < 100; ++i) {
        const double y = std::ldexp(static_cast<double>(grid(rng)), -40) + (i % 5) - 2;
        worst = std::max(worst, std::abs(profileF(prof, y + 1.0) - profileF(prof, y)));
      }
    }
    d << "max difference " << worst;
    return worst <= 1e-8;
  });

  rec.check("both expansions of b-adic rationals agree", [&](std::ostream& d) {
    double worst = 0.0;
    for (const auto& prof : profiles) {
      const auto b = static_cast<std::int64_t>(prof.sequence().base());
      for (int i = 0; i < 50; ++i) {
        const int m = std::uniform_int_distribution<int>(0, 6)(rng);
        std::int64_t den = 1;
        for (int e = 0; e < m; ++e) den *= b;
        const std::int64_t num = std::uniform_int_distribution<std::int64_t>(1, 50 * den)(rng);
        const auto x = DigitExpansion::fromRational(static_cast<unsigned>(b), num, den);
        worst = std::max(worst, relativeError(psi(prof, x.alternate()), psi(prof, x)));
      }
    }
    d << "max relative difference " << worst;
    return worst <= 1e-9;
  });

  rec.check("psi at integers is the partial sum", [&](std::ostream&) {
    for (const auto& prof : profiles)
      for (std::int64_t N = 1; N < 2000; N += 37)
        if (relativeError(psi(prof, N), closedFormPartialSum(prof.sequence(), N)) > 1e-12)
          return false;
    return true;
  });

  rec.check("difference quotients grow for the (1, i) profile", [&](std::ostream& d) {
    const auto probe = differenceQuotientProbe(profiles[0], DigitExpansion::fromRational(2, 1, 3), 40);
    d << probe.magnitudes.size() << " positions";
    return probe.divergent && increasingBeyond(probe.magnitudes, 3);
  });

  rec.check("samples bounded by the profile bound", [&](std::ostream&) {
    for (const auto& prof : profiles) {
      const double bound = profileBound(prof);
      for (const auto& s : sampleF(prof, 64, 2))
        if (std::abs(s.value) > bound) return false;
    }
    return true;
  });

  return rec.take();
}

std::vector<CheckResult> verifySpectral(const VerifyOptions& opts) {
  Recorder rec("spectral");
  const auto primes = primesInRange(3, opts.pmax);

  rec.check("alpha_3 = log 3 / log 4", [&](std::ostream& d) {
    const auto rep = spectralReport(3);
    d << "alpha " << rep.alpha << ", r " << rep.r;
    return rep.r == 1 && std::abs(rep.alpha - std::log(3.0) / std::log(4.0)) <= 1e-12;
  });

  rec.check("p = 5 dominant eigenvalue", [&](std::ostream& d) {
    const auto rep = spectralReport(5);
    d << "lambda1 " << rep.lambda1 << ", alpha " << rep.alpha;
    return std::abs(rep.lambda1 - 5.0) <= 1e-12 &&
           std::abs(rep.alpha - std::log(5.0) / (4.0 * std::log(2.0))) <= 1e-12;
  });

  rec.check("circulant eigenvalues match dense solver", [&](std::ostream& d) {
    double worst = 0.0;
    for (int p : primes) {
      if (p > 13) break;
      const int s = multiplicativeOrder(2, p);
      Eigen::EigenSolver<Eigen::MatrixXd> solver(spectralMatrix<double>(p, s), false);
      std::vector<Complex> dense(solver.eigenvalues().begin(), solver.eigenvalues().end());
      for (const Complex lambda : eigenvaluesOfM(p)) {
        auto nearest = std::min_element(dense.begin(), dense.end(), [&](Complex a, Complex b) {
          return std::abs(a - lambda) < std::abs(b - lambda);
        });
        worst = std::max(worst, std::abs(*nearest - lambda));
        dense.erase(nearest);
      }
    }
    d << "max deviation " << worst;
    return worst <= 1e-8;
  });

  rec.check("r != 2 and product of nonzero eigenvalues = p^s", [&](std::ostream& d) {
    for (int p : primes) {
      const auto rep = spectralReport(p);
      const LogProduct prod = nonzeroEigenvalueProduct(rep.eigenvalues);
      const double expected = rep.s * std::log(static_cast<double>(p));
      if (rep.r == 2 || std::abs(prod.logModulus - expected) > 1e-6 ||
          std::abs(prod.argument) > 1e-6) {
        d << "p = " << p;
        return false;
      }
    }
    return true;
  });

  return rec.take();
}

std::vector<CheckResult> verifyCombinatorics(const VerifyOptions& opts) {
  Recorder rec("combinatorics");
  const auto primes = primesInRange(3, opts.pmax);

  rec.check("A_0(n,p) - A_1(n,p) = (-1)^n", [&](std::ostream& d) {
    for (int p : primes)
      for (int n = 0; n < p; ++n) {
        const auto diff = static_cast<long long>(subsetCount(0, n, p)) -
                          static_cast<long long>(subsetCount(1, n, p));
        if (diff != (n % 2 == 0 ? 1 : -1)) {
          d << "p = " << p << ", n = " << n;
          return false;
        }
      }
    return true;
  });

  rec.check("E_x(n,p) closed form", [&](std::ostream& d) {
    std::mt19937_64 rng(opts.seed + 2);
    for (int p : primesInRange(3, 7))
      for (int n = 0; n <= 5; ++n) {
        std::vector<int> k(static_cast<std::size_t>(n));
        for (int& v : k) v = std::uniform_int_distribution<int>(1, p - 1)(rng);
        for (int x = 0; x <= 1; ++x)
          if (BigInt(sequenceCountBrute(x, k, p)) != sequenceCountClosedForm(x, n, p)) {
            d << "p = " << p << ", n = " << n << ", x = " << x;
            return false;
          }
      }
    return true;
  });

  rec.check("recursive mu = product formula", [&](std::ostream& d) {
    for (int n = 1; n <= 8; ++n) {
      const auto& lattice = PartitionLattice::of(n);
      for (std::size_t i = 0; i < lattice.partitions().size(); ++i)
        if (lattice.mobiusValues()[i] != mobiusProductFormula(lattice.partitions()[i])) {
          d << "n = " << n;
          return false;
        }
    }
    return true;
  });

  rec.check("sum (-1)^c(y) mu(0,y) = (-1)^n n!", [&](std::ostream& d) {
    std::int64_t factorial = 1;
    for (int n = 1; n <= 8; ++n) {
      factorial *= n;
      if (mobiusInversionDifference(n) != (n % 2 == 0 ? factorial : -factorial)) {
        d << "n = " << n;
        return false;
      }
    }
    return true;
  });

  rec.check("linear-form difference matches enumeration", [&](std::ostream& d) {
    for (int p : {5, 7}) {
      if (p > std::max(opts.pmax, 5)) break;
      std::vector<int> coeffs(static_cast<std::size_t>(p - 1), 0);
      int patterns = 0;
      while (true) {
        const LinearForm f(p, coeffs);
        if (linearFormDifference(f) != bruteLinearFormDifference(f)) {
          d << "p = " << p << ", pattern " << patterns;
          return false;
        }
        ++patterns;
        std::size_t i = 0;
        while (i < coeffs.size() && coeffs[i] == 2) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
        ++coeffs[i];
      }
      d << "p = " << p << ": " << patterns << " patterns; ";
    }
    return true;
  });

  rec.check("alternating binomial sums", [&](std::ostream&) {
    for (int n = 1; n <= 30; ++n)
      for (int m = 0; m <= n; ++m)
        if (!binomialAlternatingSum(m, n).equal) return false;
    return true;
  });

  return rec.take();
}

std::vector<CheckResult> verifyCyclotomic(const VerifyOptions& opts) {
  Recorder rec("cyclotomic");
  const auto primes = primesInRange(3, opts.pmax);
  const Support oneMinusT = supportFromCoefficients({1, -1});

  rec.check("prod (1 - T^j) = (p-1) - sum T^i", [&](std::ostream& d) {
    for (int p : primes) {
      std::vector<BigInt> expected(static_cast<std::size_t>(p), BigInt(-1));
      expected[0] = p - 1;
      const RingElement e = productOverUnits(p, oneMinusT);
      if (!(e == RingElement(p, expected)) || normFromExpansion(e) != p) {
        d << "p = " << p;
        return false;
      }
    }
    return true;
  });

  rec.check("norm is multiplicative over cosets", [&](std::ostream& d) {
    for (int p : primes) {
      for (const Support& support : {oneMinusT, supportFromCoefficients({1, 1, -1})}) {
        RingElement product = RingElement::one(p);
        for (const auto& part : cosetProducts(CosetSystem::squares(p), support))
          product = mulMod(product, part);
        if (!(product == productOverUnits(p, support))) {
          d << "p = " << p;
          return false;
        }
      }
    }
    return true;
  });

  rec.check("d(b^s) of the twist is a coset product", [&](std::ostream& d) {
    const std::vector<std::pair<int, int>> cases{{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}};
    double worst = 0.0;
    for (auto [b, p] : cases) {
      const auto seq = MultiplicativeSequence::fromSigns(b == 2 ? "+-" : "++-");
      const Complex numeric = buildTwist(seq, p, 1).digitSums().total();
      const CosetSystem system(p, {b});
      const Support support = supportFromCoefficients(b == 2 ? std::vector<long>{1, -1}
                                                             : std::vector<long>{1, 1, -1});
      const auto products = cosetProducts(system, support);
      worst = std::max(worst, std::abs(numeric - evaluateNumeric(products[system.cosetOf(1)], 1)));
    }
    d << "max deviation " << worst;
    return worst <= 1e-6;
  });

  rec.check("coset products are real or pure imaginary", [&](std::ostream& d) {
    for (int p : primes) {
      if (p < 5) continue;
      const CosetSystem system = CosetSystem::squares(p);
      const bool even = system.subgroup().size() % 2 == 0;
      for (const auto& part : cosetProducts(system, oneMinusT)) {
        const Complex v = evaluateNumeric(part, 1);
        const double off = even ? std::abs(v.imag()) : std::abs(v.real());
        if (off >= 1e-6 * std::abs(v) || (even && v.real() <= 0.0)) {
          d << "p = " << p;
          return false;
        }
      }
    }
    return true;
  });

  rec.check("eigenvalues of M are coset products", [&](std::ostream& d) {
    double worst = 0.0;
    for (int p : primes) {
      const CosetSystem system(p, {2});
      const auto products = cosetProducts(system, oneMinusT);
      const auto lambda = eigenvaluesOfM(p);
      for (int j = 1; j < p; ++j)
        worst = std::max(worst, std::abs(lambda(j) - evaluateNumeric(products[system.cosetOf(j)], 1)));
    }
    d << "max deviation " << worst;
    return worst <= 1e-6;
  });

  rec.check("trace table rows", [&](std::ostream& d) {
    int rows = 0;
    for (const auto& [p, value] : kTraceTable) {
      if (p > opts.pmax) break;
      if (traceOfCosetProducts(CosetSystem::squares(p), oneMinusT) != value) {
        d << "p = " << p;
        return false;
      }
      ++rows;
    }
    d << rows << " rows";
    return true;
  });

  return rec.take();
}

std::vector<CheckResult> verifyLucas(const VerifyOptions& opts) {
  Recorder rec("lucas");

  rec.check("N(1 + zeta - zeta^2) = binomial sum = L_p", [&](std::ostream& d) {
    const Support support = supportFromCoefficients({1, 1, -1});
    for (int p : primesInRange(5, opts.pmax)) {
      const BigInt norm = normFromExpansion(productOverUnits(p, support));
      if (norm != binomialsFormula(p) || norm != lucas(p)) {
        d << "p = " << p;
        return false;
      }
      if (auto it = kLucasTable.find(p); it != kLucasTable.end() && norm != it->second) {
        d << "table mismatch at p = " << p;
        return false;
      }
    }
    return true;
  });

  rec.check("domino counts by enumeration", [&](std::ostream& d) {
    for (int n = 2; n <= kMaxExhaustiveDominoes; ++n) {
      if (BigInt(dominoIntervalExhaustive(n)) != fibonacci(n) || dominoInterval(n) != fibonacci(n)) {
        d << "interval n = " << n;
        return false;
      }
      if (n >= 3 && (BigInt(dominoCircleExhaustive(n)) != lucas(n) || dominoCircle(n) != lucas(n))) {
        d << "circle n = " << n;
        return false;
      }
    }
    return true;
  });

  rec.check("Lucas identities", [&](std::ostream& d) {
    for (int n = 1; n <= 60; ++n)
      if (!lucasIdentityCheck(n)) {
        d << "n = " << n;
        return false;
      }
    return true;
  });

  rec.check("L_n even iff 3 | n", [&](std::ostream&) {
    for (int n = 0; n <= 60; ++n)
      if ((lucas(n) % 2 == 0) != (n % 3 == 0)) return false;
    return true;
  });

  rec.check("prime factors of L_n are 2 or +-1 mod 5", [&](std::ostream& d) {
    const int top = std::max(4 * opts.pmax + 1, 9);
    int inconclusive = 0;
    for (int n = 3; n <= top; n += 2) {
      const auto v = factorCongruenceCheck(n);
      if (v.verdict == Verdict::Fail) {
        d << "n = " << n << ": " << formatFactors(v.factors);
        return false;
      }
      if (v.verdict == Verdict::Inconclusive) ++inconclusive;
    }
    d << "odd n <= " << top << ", " << inconclusive << " inconclusive";
    return inconclusive == 0;
  });

  return rec.take();
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"sequences",     "fractal",    "spectral", "combinatorics",
                                              "cyclotomic", "lucas", "all"};
  return names;
}

std::vector<CheckResult> runSuite(const std::string& suite, const VerifyOptions& opts) {
  using Runner = std::vector<CheckResult> (*)(const VerifyOptions&);
  static const std::vector<std::pair<std::string, Runner>> runners{
      {"sequences", verifySequences},   {"fractal", verifyFractal},
      {"spectral", verifySpectral},     {"combinatorics", verifyCombinatorics},
      {"cyclotomic", verifyCyclotomic}, {"lucas", verifyLucas}};
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& [name, runner] : runners) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    auto part = runner(opts);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (!matched) throw std::invalid_argument("unknown suite \"" + suite + "\"");
  return out;
}

bool allPassed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace rarefact
