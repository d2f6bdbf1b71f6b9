#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rarefact/fractal.hpp"
#include "rarefact/lucas.hpp"
#include "rarefact/sequences.hpp"

namespace rarefact {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  /// sum, rarefy, sample-f, spectral, norm, xi, trace-table, lucas, verify.
  std::string subcommand;
  int pmax = 13;
  int p = 3;
  /// Sign string or JSON list of [re, im] weights.
  std::string sequence = "+-";
  std::uint64_t N = 0;
  std::size_t count = 256;
  OutputFormat format = OutputFormat::Csv;
  double tailTolerance = kDefaultTailTolerance;
  long branch = 0;
  /// Twist index for sample-f; 0 samples the sequence itself.
  int twist = 0;
  unsigned threads = 1;
  std::uint64_t oracleBound = kDefaultOracleBound;
  /// Dense coefficient list c_0,c_1,... of the support polynomial.
  std::string support = "1,-1";
  /// Generators of the subgroup for xi; empty means the squares.
  std::vector<int> generators;
  bool factor = false;
  /// rarefy: use the direct loop instead of the twist decomposition.
  bool naive = false;
  std::string suite = "all";
  FactorBudget budget;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Executes one subcommand. Exit status 0 on success, 1 when a verdict is
/// FAIL, 2 for usage errors, malformed literals and budget overruns.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (RAREFACT_SEED overrides the factorization seed) and runs.
int runCommandLine(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 17 significant digits.
std::string formatReal(double x);
/// "re" when the imaginary part is zero, otherwise "re+imi" / "re-imi".
std::string formatComplex(Complex z);

/// "1,+1,-1" -> {1, 1, -1}. Throws std::invalid_argument when malformed.
std::vector<long> parseCoefficientList(const std::string& text);

}  // namespace rarefact
