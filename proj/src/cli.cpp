#include "rarefact/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rarefact/cyclotomic.hpp"
#include "rarefact/primes.hpp"
#include "rarefact/spectral.hpp"
#include "rarefact/verify.hpp"

namespace rarefact {

namespace {

using Json = nlohmann::ordered_json;

// A header plus rows of already-formatted cells. Numeric cells are kept as
// strings so CSV and JSON show the same 17-digit rendering.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Columns emitted as JSON numbers rather than strings.
  std::vector<bool> numeric;
};

std::string csvCell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csvCell(cells[i]);
      out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return;
  }
  Json records = Json::array();
  for (const auto& row : table.rows) {
    Json record = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i < table.numeric.size() && table.numeric[i])
        record[table.header[i]] = Json::parse(row[i]);
      else
        record[table.header[i]] = row[i];
    }
    records.push_back(std::move(record));
  }
  out << records.dump(2) << '\n';
}

void emitScalar(const std::string& name, Complex value, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << formatComplex(value) << '\n';
    return;
  }
  Json record = Json::object();
  record["quantity"] = name;
  record["re"] = Json::parse(formatReal(value.real()));
  record["im"] = Json::parse(formatReal(value.imag()));
  out << record.dump(2) << '\n';
}

std::string str(const BigInt& v) { return v.str(); }

Support parseSupport(const std::string& text) {
  return supportFromCoefficients(parseCoefficientList(text));
}

int runSum(const RunConfig& c, std::ostream& out) {
  const auto seq = MultiplicativeSequence::parse(c.sequence);
  emitScalar("sum", closedFormPartialSum(seq, c.N), c.format, out);
  return exit_code::kOk;
}

int runRarefy(const RunConfig& c, std::ostream& out) {
  const auto seq = MultiplicativeSequence::parse(c.sequence);
  const Complex value = c.naive ? rarefiedSum(seq, c.p, c.N, c.oracleBound)
                                : rarefiedSumViaTwists(seq, c.p, c.N);
  emitScalar("rarefied_sum", value, c.format, out);
  return exit_code::kOk;
}

int runSampleF(const RunConfig& c, std::ostream& out) {
  auto seq = MultiplicativeSequence::parse(c.sequence);
  if (c.twist != 0) seq = buildTwist(seq, c.p, c.twist);
  const FractalProfile profile(seq, c.branch, c.tailTolerance);
  const auto samples = sampleF(profile, c.count, c.threads);
  if (c.format == OutputFormat::Csv) {
    writeSamplesCsv(out, samples);
    return exit_code::kOk;
  }
  Table table{{"y", "re", "im"}, {}, {true, true, true}};
  for (const auto& s : samples)
    table.rows.push_back({formatReal(s.y), formatReal(s.value.real()), formatReal(s.value.imag())});
  emit(table, c.format, out);
  return exit_code::kOk;
}

int runSpectral(const RunConfig& c, std::ostream& out) {
  Table table{{"p", "s", "r", "lambda1", "lambda2", "alpha", "beta"}, {}, std::vector<bool>(7, true)};
  for (int p : primesInRange(3, c.pmax)) {
    const SpectralReport rep = spectralReport(p);
    table.rows.push_back({std::to_string(p), std::to_string(rep.s), std::to_string(rep.r),
                          formatReal(rep.lambda1), formatReal(rep.lambda2), formatReal(rep.alpha),
                          formatReal(rep.beta)});
  }
  emit(table, c.format, out);
  return exit_code::kOk;
}

int runNorm(const RunConfig& c, std::ostream& out) {
  requireOddPrime(c.p);
  const BigInt norm = normFromExpansion(productOverUnits(c.p, parseSupport(c.support)));
  if (c.format == OutputFormat::Csv) {
    out << norm << '\n';
  } else {
    Json record = Json::object();
    record["p"] = c.p;
    record["norm"] = str(norm);
    out << record.dump(2) << '\n';
  }
  return exit_code::kOk;
}

int runXi(const RunConfig& c, std::ostream& out) {
  requireOddPrime(c.p);
  const CosetSystem system =
      c.generators.empty() ? CosetSystem::squares(c.p) : CosetSystem(c.p, c.generators);
  const auto products = cosetProducts(system, parseSupport(c.support));
  Table table{{"representative", "size", "re", "im"}, {}, {true, true, true, true}};
  for (std::size_t k = 0; k < products.size(); ++k) {
    const Complex v = evaluateNumeric(products[k], 1);
    const auto& coset = system.cosets()[k];
    table.rows.push_back({std::to_string(coset.front()), std::to_string(coset.size()),
                          formatReal(v.real()), formatReal(v.imag())});
  }
  emit(table, c.format, out);
  return exit_code::kOk;
}

int runTraceTable(const RunConfig& c, std::ostream& out) {
  const Support support = parseSupport(c.support);
  Table table{{"p", "trace"}, {}, {true, false}};
  for (int p : primesInRange(5, c.pmax)) {
    if (p % 4 != 1) continue;
    table.rows.push_back({std::to_string(p), str(traceOfCosetProducts(CosetSystem::squares(p), support))});
  }
  emit(table, c.format, out);
  return exit_code::kOk;
}

int runLucas(const RunConfig& c, std::ostream& out) {
  Table table;
  table.header = {"p", "L_p"};
  table.numeric = {true, false};
  if (c.factor) {
    table.header.insert(table.header.end(), {"factors", "congruence_verdict"});
    table.numeric.insert(table.numeric.end(), {false, false});
  }
  bool failed = false;
  for (int p : primesInRange(5, c.pmax)) {
    std::vector<std::string> row{std::to_string(p), str(lucas(p))};
    if (c.factor) {
      const CongruenceVerdict v = factorCongruenceCheck(p, c.budget);
      row.push_back(formatFactors(v.factors));
      row.push_back(toString(v.verdict));
      failed = failed || v.verdict == Verdict::Fail;
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, c.format, out);
  return failed ? exit_code::kFail : exit_code::kOk;
}

int runVerify(const RunConfig& c, std::ostream& out) {
  VerifyOptions opts;
  opts.pmax = c.pmax;
  const auto results = runSuite(c.suite, opts);
  Table table{{"suite", "check", "result", "detail"}, {}, {}};
  for (const auto& r : results)
    table.rows.push_back({r.suite, r.name, r.passed ? "PASS" : "FAIL", r.detail});
  emit(table, c.format, out);
  return allPassed(results) ? exit_code::kOk : exit_code::kFail;
}

}  // namespace

std::string formatReal(double x) {
  if (x == 0.0) return "0";
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

std::string formatComplex(Complex z) {
  if (z.imag() == 0.0) return formatReal(z.real());
  std::string im = formatReal(z.imag());
  if (im.front() != '-') im = "+" + im;
  return formatReal(z.real()) + im + "i";
}

std::vector<long> parseCoefficientList(const std::string& text) {
  std::vector<long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty coefficient in \"" + text + "\"");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("bad coefficient \"" + item + "\"");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty coefficient list");
  return values;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& cmd = config.subcommand;
    if (cmd == "sum") return runSum(config, out);
    if (cmd == "rarefy") return runRarefy(config, out);
    if (cmd == "sample-f") return runSampleF(config, out);
    if (cmd == "spectral") return runSpectral(config, out);
    if (cmd == "norm") return runNorm(config, out);
    if (cmd == "xi") return runXi(config, out);
    if (cmd == "trace-table") return runTraceTable(config, out);
    if (cmd == "lucas") return runLucas(config, out);
    if (cmd == "verify") return runVerify(config, out);
    err << "error: unknown subcommand \"" << cmd << "\"\n";
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const AsymmetricExpansion& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_code::kUsage;
}

int runCommandLine(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Rarefied sums of digit-multiplicative sequences and their cyclotomic invariants",
               "rarefact"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "csv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto addSeq = [&](CLI::App* sub) {
    sub->add_option("--seq", config.sequence, "Sign string such as \"+-\" or JSON [[re,im],...]")
        ->capture_default_str();
  };
  auto addPrime = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", config.p, "Odd prime");
    if (required) opt->required();
  };
  auto addPmax = [&](CLI::App* sub) {
    sub->add_option("--pmax", config.pmax, "Largest prime considered")->capture_default_str();
  };

  auto* sum = app.add_subcommand("sum", "Partial sum of t_n over n < N");
  addSeq(sum);
  sum->add_option("--N", config.N, "Bound N")->required();

  auto* rarefy = app.add_subcommand("rarefy", "Sum of t_n over n < N with p | n");
  addSeq(rarefy);
  addPrime(rarefy, true);
  rarefy->add_option("--N", config.N, "Bound N")->required();
  rarefy->add_flag("--naive", config.naive, "Direct loop instead of the twist decomposition");
  rarefy->add_option("--oracle-bound", config.oracleBound, "Largest N for --naive")
      ->capture_default_str();

  auto* sample = app.add_subcommand("sample-f", "Sample the periodic profile F on [0, 1)");
  addSeq(sample);
  addPrime(sample, false);
  sample->add_option("--j", config.twist, "Sample the j-th twist modulo p instead")
      ->capture_default_str();
  sample->add_option("--count", config.count, "Number of samples")->capture_default_str();
  sample->add_option("--branch", config.branch, "Branch k of the logarithm")->capture_default_str();
  sample->add_option("--tol", config.tailTolerance, "Series tail tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--threads", config.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  auto* spectral = app.add_subcommand("spectral", "Spectral exponents per prime");
  addPmax(spectral);

  auto* norm = app.add_subcommand("norm", "Exact norm of the support polynomial at zeta_p");
  addPrime(norm, true);
  norm->add_option("--support", config.support, "Coefficients c_0,c_1,...")->capture_default_str();

  auto* xi = app.add_subcommand("xi", "Coset products evaluated at zeta_p");
  addPrime(xi, true);
  xi->add_option("--support", config.support, "Coefficients c_0,c_1,...")->capture_default_str();
  xi->add_option("--gen", config.generators, "Subgroup generators (default: the squares)")
      ->delimiter(',');

  auto* trace = app.add_subcommand("trace-table", "Traces of coset products, p = 1 mod 4");
  addPmax(trace);
  trace->add_option("--support", config.support, "Coefficients c_0,c_1,...")->capture_default_str();

  auto* lucasCmd = app.add_subcommand("lucas", "Lucas numbers at primes");
  addPmax(lucasCmd);
  lucasCmd->add_flag("--factor", config.factor, "Factor L_p and check residues mod 5");
  lucasCmd->add_option("--max-digits", config.budget.maxDigits, "Factorization size budget")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("suite,--suite", config.suite, "Suite name")
      ->check(CLI::IsMember(suiteNames()))
      ->capture_default_str();
  addPmax(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (const char* seed = std::getenv("RAREFACT_SEED")) {
    try {
      config.budget.seed = std::stoull(seed);
    } catch (const std::exception&) {
      err << "error: RAREFACT_SEED must be an unsigned integer\n";
      return exit_code::kUsage;
    }
  }
  return run(config, out, err);
}

}  // namespace rarefact
