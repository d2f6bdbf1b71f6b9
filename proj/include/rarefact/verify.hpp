#pragma once

// Identity suites run by `rarefact verify`: each check recomputes one
// identity exhaustively at desk scale and records pass/fail.

#include <iosfwd>
#include <string>
#include <vector>

namespace rarefact {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Upper prime bound for the prime-indexed sweeps.
  int pmax = 13;
  unsigned seed = 20240601;
};

std::vector<CheckResult> verifySequences(const VerifyOptions& opts);
std::vector<CheckResult> verifyFractal(const VerifyOptions& opts);
std::vector<CheckResult> verifySpectral(const VerifyOptions& opts);
std::vector<CheckResult> verifyCombinatorics(const VerifyOptions& opts);
std::vector<CheckResult> verifyCyclotomic(const VerifyOptions& opts);
std::vector<CheckResult> verifyLucas(const VerifyOptions& opts);

/// Names accepted by runSuite: the six module suites and "all".
const std::vector<std::string>& suiteNames();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> runSuite(const std::string& suite, const VerifyOptions& opts);

bool allPassed(const std::vector<CheckResult>& results);

}  // namespace rarefact
