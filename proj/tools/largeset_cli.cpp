#include <iostream>

#include <CLI11.hpp>

#include "largeset/cli_core.hpp"

using namespace largeset;

namespace {

// shared flags override whatever the config file says
struct CommonFlags {
  std::string config_path;
  std::string window;
  std::string format;
  std::string out_dir;
  int64_t seed = -1;
  int64_t budget = -1;

  void attach(CLI::App* app, bool config_required) {
    auto* copt = app->add_option("--config", config_path, "experiment config file");
    if (config_required) copt->required();
    app->add_option("--window", window, "window spec (int:LO:HI | bool:LEN:LO:HI | free:LEN)");
    app->add_option("--seed", seed, "seed for randomized search order");
    app->add_option("--budget", budget, "search node budget");
    app->add_option("--format", format, "json or csv");
    app->add_option("--out", out_dir, "output directory");
  }

  ExperimentConfig load() const {
    ExperimentConfig c = ExperimentConfig::load(config_path);
    if (!window.empty()) c.window = Window::parse(window);
    if (seed >= 0) c.seed = static_cast<uint64_t>(seed);
    if (budget >= 0) c.budget = static_cast<uint64_t>(budget);
    if (!format.empty()) {
      if (format != "json" && format != "csv") throw config_error("format must be json or csv");
      c.format = format;
    }
    if (!out_dir.empty()) c.out_dir = out_dir;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"windowed largeness computations on concrete groups"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "list the construction catalog");
  std::string cat_family, cat_format = "text";
  cat->add_option("--family", cat_family, "integer | boolean | free");
  cat->add_option("--format", cat_format, "text or json");

  auto* eval = app.add_subcommand("eval", "run operations from a config and write reports");
  CommonFlags eval_flags;
  eval_flags.attach(eval, true);

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  int64_t verify_seed = 42;
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--seed", verify_seed, "seed for generated instances");

  auto* exportg = app.add_subcommand("export-graph", "write the quotient graph in DIMACS form");
  CommonFlags export_flags;
  export_flags.attach(exportg, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) {
      std::cout << cmd_catalog(cat_family, cat_format);
      return 0;
    }
    if (eval->parsed()) {
      ExperimentConfig config = eval_flags.load();
      EvalResult res = cmd_eval(config);
      if (config.format == "csv") {
        std::cout << report_csv_header() << '\n';
        for (const LargenessReport& r : res.reports) std::cout << report_to_csv_row(r) << '\n';
      } else {
        std::cout << res.report.dump(2) << '\n';
      }
      return res.exit_code;
    }
    if (verify->parsed()) {
      return cmd_verify(suite, static_cast<uint64_t>(verify_seed), std::cout);
    }
    if (exportg->parsed()) {
      ExperimentConfig config = export_flags.load();
      std::filesystem::path path = cmd_export_graph(config);
      std::cout << "wrote " << path.string() << '\n';
      return 0;
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
