#ifndef LARGESET_CLI_CORE_HPP
#define LARGESET_CLI_CORE_HPP

#include <filesystem>
#include <optional>

#include "largeset/catalog.hpp"
#include "largeset/report.hpp"

namespace largeset {

// One experiment: a catalog construction, a window, operations with their
// parameters, and reproducibility knobs. The seed fully determines every
// randomized search order; unknown keys are rejected.
struct ExperimentConfig {
  std::string construction;
  ParamMap construction_params;
  std::optional<Window> window;
  std::vector<std::string> ops;

  int k = 3;
  int n = 2;
  int kmax = 4;
  int pad = 4;
  Side side = Side::left;
  std::vector<int64_t> dlist = {5, 10, 20};
  int probe_max = 6;
  double threshold = 0.5;  // coverage threshold for delta representations
  int length = 10;         // target sequence length / subgroup size

  uint64_t seed = 0;
  uint64_t budget = 50000000;
  std::string format = "json";  // stdout echo; files carry both formats
  std::string out_dir = "out";

  // flat key=value text (with '#' comments) or a JSON object; errors
  // carry line/key diagnostics
  static ExperimentConfig parse_text(const std::string& text);
  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::filesystem::path& file);

  nlohmann::json to_json() const;
};

struct EvalResult {
  nlohmann::json report;  // the full JSON document written to disk
  std::vector<LargenessReport> reports;
  int exit_code = 0;  // 0 decided, 2 undecided
};

// Runs the configured operations. with_timestamp controls the timestamp
// field (excluded from determinism comparisons).
EvalResult run_eval(const ExperimentConfig& config, bool with_timestamp = true);

// Runs and writes <out>/report.json and <out>/report.csv atomically.
EvalResult cmd_eval(const ExperimentConfig& config);

std::string cmd_catalog(const std::string& family_filter, const std::string& format);

// Prints one line per check to `out`; returns 0 if every check passed.
int cmd_verify(const std::string& suite, uint64_t seed, std::ostream& out);

// DIMACS export of the quotient graph of (construction, window); written
// to <out>/graph.dimacs.
std::filesystem::path cmd_export_graph(const ExperimentConfig& config);

void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace largeset

#endif
