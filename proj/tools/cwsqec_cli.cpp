// Command line front end: verify code files, decode injected errors, print
// measurement budgets and sweep whole error sets.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwsqec/counts.hpp"
#include "cwsqec/decoder.hpp"
#include "cwsqec/graph_code.hpp"
#include "cwsqec/oracle.hpp"

namespace {

using nlohmann::json;
using namespace cwsqec;

constexpr int kExitSuccess = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSizeCap = 3;
constexpr double kFidelityThreshold = 1.0 - 1e-9;

struct CommonOptions {
  std::string code_path;
  std::string format = "human";  // human | json | csv
  std::string out_path;          // empty writes to stdout
  std::string oracle = "off";    // on | off
  uint64_t seed = 0;
};

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) throw std::runtime_error("cannot open output file " + opts.out_path);
  out << text;
}

CwsCode load_code(const std::string& path) {
  CwsCode code = parse_code_file(path);
  code.validate();
  return code;
}

size_t default_budget(const CwsCode& code, int t_flag) {
  if (t_flag >= 0) return static_cast<size_t>(t_flag);
  if (!code.declared_distance) {
    throw std::invalid_argument("no --t given and the code file declares no distance");
  }
  return (*code.declared_distance - 1) / 2;
}

std::unique_ptr<MeasurementChannel> make_channel(const CwsCode& code, const PauliOperator& error,
                                                 bool use_oracle, uint64_t seed) {
  const auto coefficients = GraphBasisChannel::random_coefficients(code.dimension(), seed);
  if (use_oracle) {
    return std::make_unique<oracle::AmplitudeChannel>(code, error, coefficients, seed + 1);
  }
  return std::make_unique<GraphBasisChannel>(code, error, coefficients, seed + 1);
}

struct RunResult {
  DecodeReport report;
  double fidelity = 0.0;
  bool fidelity_ok = false;
  uint64_t budget = 0;
  bool budget_ok = false;
  bool ok = false;
};

RunResult run_strategy(const CwsCode& code, size_t t, const std::string& strategy,
                       const PauliOperator& error, bool use_oracle, uint64_t seed) {
  const auto channel = make_channel(code, error, use_oracle, seed);
  RunResult result;
  result.report = strategy == "clustered" ? clustered_decode(code, t, *channel)
                                          : exhaustive_decode(code, t, *channel);
  result.budget = strategy == "clustered" ? result.report.clustered_bound
                                          : result.report.exhaustive_bound;
  result.budget_ok = result.report.measurements_used <= result.budget;
  if (result.report.recovery) {
    result.fidelity = channel->recovered_fidelity(*result.report.recovery);
    result.fidelity_ok = result.fidelity >= kFidelityThreshold;
  }
  result.ok = result.report.corrected && result.fidelity_ok && result.budget_ok;
  return result;
}

std::vector<std::string> strategy_list(const std::string& strategy) {
  if (strategy == "both") return {"clustered", "exhaustive"};
  return {strategy};
}

json run_to_json(const RunResult& run) {
  const DecodeReport& r = run.report;
  json j;
  j["strategy"] = r.strategy;
  j["corrected"] = r.corrected;
  j["uncorrectable"] = r.uncorrectable;
  j["consistent"] = r.consistent;
  j["identified_class"] = r.identified_class ? json(r.identified_class->str()) : json();
  j["recovery"] = r.recovery ? json(r.recovery->str()) : json();
  if (r.winning_cluster) j["winning_cluster"] = *r.winning_cluster;
  j["measurements_used"] = r.measurements_used;
  j["measurement_budget"] = run.budget;
  j["budget_ok"] = run.budget_ok;
  j["gate_total"] = r.gate_total;
  j["max_measurement_gates"] = r.max_measurement_gates;
  j["max_measurement_ancillas"] = r.max_measurement_ancillas;
  j["structure_bounds_ok"] = r.structure_bounds_ok;
  j["theorem_bound"] = r.theorem_bound;
  j["theorem_bound_ok"] = r.theorem_bound_ok;
  j["fidelity"] = run.fidelity;
  j["fidelity_ok"] = run.fidelity_ok;
  json transcript = json::array();
  for (const TranscriptEntry& entry : r.transcript) {
    transcript.push_back({{"id", entry.id},
                          {"outcome", entry.outcome},
                          {"deterministic", entry.deterministic},
                          {"two_qubit_gates", entry.two_qubit_gates}});
  }
  j["transcript"] = transcript;
  return j;
}

std::string run_to_human(const RunResult& run) {
  const DecodeReport& r = run.report;
  std::ostringstream out;
  out << "strategy " << r.strategy << ": ";
  if (r.uncorrectable) {
    out << "uncorrectable (every hypothesis rejected)\n";
  } else {
    out << (run.ok ? "corrected" : "FAILED") << ", class "
        << (r.identified_class ? r.identified_class->str() : "-") << ", recovery \""
        << (r.recovery ? r.recovery->str() : "-") << "\"\n";
  }
  out << "  measurements " << r.measurements_used << "/" << run.budget << ", gates total "
      << r.gate_total << " (max " << r.max_measurement_gates << " per measurement, ceiling "
      << r.theorem_bound << "), fidelity " << std::setprecision(12) << run.fidelity << "\n";
  for (const TranscriptEntry& entry : r.transcript) {
    out << "    " << std::left << std::setw(24) << entry.id << (entry.outcome > 0 ? "+1" : "-1")
        << (entry.deterministic ? "  deterministic" : "  sampled") << "  gates "
        << entry.two_qubit_gates << "\n";
  }
  return out.str();
}

std::string csv_header() {
  return "code,n,K,t,error,strategy,measurements,two_qubit_gates,class,fidelity_ok\n";
}

std::string run_to_csv_row(const std::string& code_path, const CwsCode& code, size_t t,
                           const std::string& error_text, const RunResult& run) {
  std::ostringstream out;
  out << code_path << "," << code.n() << "," << code.dimension() << "," << t << "," << error_text
      << "," << run.report.strategy << "," << run.report.measurements_used << ","
      << run.report.gate_total << ","
      << (run.report.identified_class ? run.report.identified_class->str() : "-") << ","
      << (run.fidelity_ok ? 1 : 0) << "\n";
  return out.str();
}

int run_decode(const CommonOptions& opts, const std::string& strategy,
               const std::string& error_text, int t_flag) {
  const CwsCode code = load_code(opts.code_path);
  const size_t t = default_budget(code, t_flag);
  const PauliOperator error = PauliOperator::from_string(code.n(), error_text);
  const bool use_oracle = opts.oracle == "on";

  bool all_ok = true;
  std::vector<RunResult> runs;
  uint64_t seed = opts.seed;
  for (const std::string& name : strategy_list(strategy)) {
    runs.push_back(run_strategy(code, t, name, error, use_oracle, seed));
    all_ok = all_ok && runs.back().ok;
    seed += 101;
  }

  if (opts.format == "json") {
    json j;
    j["code"] = opts.code_path;
    j["n"] = code.n();
    j["K"] = code.dimension();
    j["t"] = t;
    j["error"] = error.str();
    j["channel"] = use_oracle ? "amplitude" : "graph-basis";
    j["runs"] = json::array();
    for (const RunResult& run : runs) j["runs"].push_back(run_to_json(run));
    j["ok"] = all_ok;
    emit(opts, j.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::string text = csv_header();
    for (const RunResult& run : runs) {
      text += run_to_csv_row(opts.code_path, code, t, error.str(), run);
    }
    emit(opts, text);
  } else {
    std::ostringstream out;
    out << "code " << opts.code_path << " ((" << code.n() << "," << code.dimension()
        << ")), t=" << t << ", error \"" << error.str() << "\", channel "
        << (use_oracle ? "amplitude" : "graph-basis") << "\n";
    for (const RunResult& run : runs) out << run_to_human(run);
    emit(opts, out.str());
  }
  return all_ok ? kExitSuccess : kExitDecodeFailure;
}

int run_verify(const CommonOptions& opts, int max_weight_flag) {
  const CwsCode code = load_code(opts.code_path);
  const bool use_oracle = opts.oracle == "on";

  const BinaryMatrix kernel = classical_kernel(code.codewords);
  const size_t kernel_dimension = kernel.row_count();

  size_t max_weight = 0;
  if (max_weight_flag > 0) {
    max_weight = static_cast<size_t>(max_weight_flag);
  } else if (code.declared_distance) {
    max_weight = *code.declared_distance;
  } else {
    max_weight = 3;
  }
  max_weight = std::min(max_weight, code.n());

  std::optional<size_t> violation;
  bool distance_ok = true;
  if (use_oracle) {
    oracle::check_size(code.n());
    violation = oracle::verify_distance(code, max_weight);
    if (code.declared_distance) {
      // The declaration names the exact distance: undetectable errors start
      // precisely at that weight.
      distance_ok = violation == *code.declared_distance;
    }
  }

  const bool ok = !use_oracle || distance_ok;
  if (opts.format == "json") {
    json j;
    j["code"] = opts.code_path;
    j["n"] = code.n();
    j["K"] = code.dimension();
    j["declared_distance"] = code.declared_distance ? json(*code.declared_distance) : json();
    j["kernel_dimension"] = kernel_dimension;
    j["oracle"] = use_oracle;
    j["checked_weight"] = use_oracle ? json(max_weight) : json();
    j["distance"] = violation ? json(*violation) : json();
    j["distance_ok"] = ok;
    emit(opts, j.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream out;
    out << "code,n,K,declared_distance,kernel_dimension,distance,distance_ok\n"
        << opts.code_path << "," << code.n() << "," << code.dimension() << ","
        << (code.declared_distance ? std::to_string(*code.declared_distance) : "-") << ","
        << kernel_dimension << "," << (violation ? std::to_string(*violation) : "-") << ","
        << (ok ? 1 : 0) << "\n";
    emit(opts, out.str());
  } else {
    std::ostringstream out;
    out << "code " << opts.code_path << ": ((" << code.n() << "," << code.dimension();
    if (code.declared_distance) out << "," << *code.declared_distance;
    out << ")), kernel dimension " << kernel_dimension << "\n";
    if (!use_oracle) {
      out << "structure ok (distance unchecked, oracle off)\n";
    } else if (violation) {
      out << "first undetectable error weight: " << *violation
          << (distance_ok ? " (matches declaration)" : " (CONTRADICTS declaration)") << "\n";
    } else {
      out << "no undetectable error up to weight " << max_weight;
      if (code.declared_distance && !distance_ok) {
        out << " (declaration says weight " << *code.declared_distance << " should fail)";
      }
      out << "\n";
    }
    emit(opts, out.str());
  }
  return ok ? kExitSuccess : kExitDecodeFailure;
}

int run_counts(const CommonOptions& opts, size_t n, size_t t) {
  const uint64_t exhaustive = exhaustive_measurement_bound(n, t);
  const uint64_t clustered = clustered_measurement_bound(n, t);
  const bool bound_met = ratio_bound_met(n, t);
  const std::string guarantee = t == 0 ? "none" : (t == 1 ? "(3n+1)/(n+1)" : "3^t");

  if (opts.format == "json") {
    json j;
    j["n"] = n;
    j["t"] = t;
    j["exhaustive_bound"] = exhaustive;
    j["clustered_bound"] = clustered;
    j["ratio"] = clustered == 0 ? json() : json(static_cast<double>(exhaustive) / clustered);
    j["guarantee"] = guarantee;
    j["ratio_bound_met"] = bound_met;
    emit(opts, j.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream out;
    out << "n,t,exhaustive_bound,clustered_bound,guarantee,ratio_bound_met\n"
        << n << "," << t << "," << exhaustive << "," << clustered << "," << guarantee << ","
        << (bound_met ? 1 : 0) << "\n";
    emit(opts, out.str());
  } else {
    std::ostringstream out;
    out << "n=" << n << " t=" << t << ": exhaustive worst case " << exhaustive
        << " measurements, clustered worst case " << clustered << "\n";
    if (t == 0) {
      out << "t=0 locates nothing; no measurements needed and no ratio guarantee\n";
    } else {
      out << "advertised reduction factor " << guarantee << ": "
          << (bound_met ? "met" : "VIOLATED at this length") << "\n";
    }
    emit(opts, out.str());
  }
  return kExitSuccess;
}

int run_benchmark(const CommonOptions& opts, const std::string& strategy, int t_flag) {
  const CwsCode code = load_code(opts.code_path);
  const size_t t = default_budget(code, t_flag);
  const bool use_oracle = opts.oracle == "on";

  struct Aggregate {
    size_t runs = 0;
    size_t failures = 0;
    uint64_t max_measurements = 0;
    uint64_t sum_measurements = 0;
    uint64_t max_gates = 0;
  };
  std::map<std::string, Aggregate> aggregates;

  std::string csv = csv_header();
  json json_rows = json::array();
  std::ostringstream human;
  bool all_ok = true;
  uint64_t seed = opts.seed;

  for (const PauliOperator& error : enumerate_errors(code.n(), t)) {
    for (const std::string& name : strategy_list(strategy)) {
      const RunResult run = run_strategy(code, t, name, error, use_oracle, seed);
      seed += 101;
      all_ok = all_ok && run.ok;

      Aggregate& agg = aggregates[name];
      ++agg.runs;
      if (!run.ok) ++agg.failures;
      agg.max_measurements = std::max<uint64_t>(agg.max_measurements,
                                                run.report.measurements_used);
      agg.sum_measurements += run.report.measurements_used;
      agg.max_gates = std::max(agg.max_gates, run.report.max_measurement_gates);

      if (opts.format == "json") {
        json row = run_to_json(run);
        row["error"] = error.str();
        if (!run.ok) row["failed"] = true;
        json_rows.push_back(row);
      } else if (opts.format == "human") {
        human << std::left << std::setw(14) << error.str() << std::setw(12) << name
              << " measurements " << std::setw(4) << run.report.measurements_used << " gates "
              << std::setw(6) << run.report.gate_total << (run.ok ? "ok" : "FAILED") << "\n";
      } else {
        csv += run_to_csv_row(opts.code_path, code, t, error.str(), run);
      }
    }
  }

  if (opts.format == "json") {
    json j;
    j["code"] = opts.code_path;
    j["n"] = code.n();
    j["K"] = code.dimension();
    j["t"] = t;
    j["runs"] = json_rows;
    j["ok"] = all_ok;
    emit(opts, j.dump(2) + "\n");
  } else if (opts.format == "human") {
    emit(opts, human.str());
  } else {
    emit(opts, csv);
  }

  for (const auto& [name, agg] : aggregates) {
    std::cerr << "benchmark " << name << ": " << agg.runs << " runs, " << agg.failures
              << " failures, measurements max " << agg.max_measurements << " mean "
              << std::setprecision(3)
              << (agg.runs ? static_cast<double>(agg.sum_measurements) / agg.runs : 0.0)
              << ", per-measurement gates max " << agg.max_gates << "\n";
  }
  return all_ok ? kExitSuccess : kExitDecodeFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codeword-stabilized code decoding toolkit"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string strategy = "both";
  std::string error_text;
  int t_flag = -1;
  int max_weight_flag = 0;
  size_t counts_n = 0;
  size_t counts_t = 0;

  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", opts.out_path, "write the report to a file");
    cmd->add_option("--seed", opts.seed, "seed for channel coefficients and sampling");
    cmd->add_option("--oracle", opts.oracle,
                    "on: dense amplitude channel (capped size); off: exact graph-basis channel")
        ->check(CLI::IsMember({"on", "off"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "validate a code file and its distance");
  verify->add_option("--code", opts.code_path, "code file")->required();
  verify->add_option("--max-weight", max_weight_flag,
                     "largest error weight to scan (0: declared distance, or 3)");
  add_output_flags(verify);
  verify->get_option("--oracle")->default_str("on");

  CLI::App* decode = app.add_subcommand("decode", "decode one injected error");
  decode->add_option("--code", opts.code_path, "code file")->required();
  decode->add_option("--error", error_text, "injected Pauli error, e.g. \"X1 Z3\"")->required();
  decode->add_option("--t", t_flag, "error weight budget (default from declared distance)");
  decode->add_option("--strategy", strategy, "decoding strategy")
      ->check(CLI::IsMember({"clustered", "exhaustive", "both"}));
  add_output_flags(decode);

  CLI::App* counts = app.add_subcommand("counts", "worst-case measurement budgets");
  counts->add_option("--n", counts_n, "qubit count")->required();
  counts->add_option("--t", counts_t, "error weight budget")->required();
  add_output_flags(counts);

  CLI::App* benchmark = app.add_subcommand("benchmark", "sweep every error of weight <= t");
  benchmark->add_option("--code", opts.code_path, "code file")->required();
  benchmark->add_option("--t", t_flag, "error weight budget (default from declared distance)");
  benchmark->add_option("--strategy", strategy, "decoding strategy")
      ->check(CLI::IsMember({"clustered", "exhaustive", "both"}));
  add_output_flags(benchmark);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitInvalidInput;
  }

  try {
    if (app.got_subcommand(verify)) {
      if (verify->get_option("--oracle")->count() == 0) opts.oracle = "on";
      return run_verify(opts, max_weight_flag);
    }
    if (app.got_subcommand(decode)) return run_decode(opts, strategy, error_text, t_flag);
    if (app.got_subcommand(counts)) return run_counts(opts, counts_n, counts_t);
    if (app.got_subcommand(benchmark)) return run_benchmark(opts, strategy, t_flag);
  } catch (const oracle::SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
