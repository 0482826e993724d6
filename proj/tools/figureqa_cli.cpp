// figureqa_cli: generate, validate, and summarize figure QA corpora.
//
// Exit codes: 0 success, 1 validation violations, 2 usage or config error,
// 3 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "figureqa/corpus.hpp"
#include "figureqa/validate.hpp"

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic scientific-figure question answering corpus generator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  int workers = 1;
  auto* generate = app.add_subcommand("generate", "Generate a corpus from a config file");
  generate->add_option("--config", config_path, "key = value config file")->required();
  generate->add_option("--seed", seed, "Override master_seed");
  generate->add_option("--out", out_dir, "Override output_dir");
  generate->add_option("--workers", workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  std::string validate_dir;
  bool full_scan = false;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "Re-check a generated corpus");
  validate->add_option("dir", validate_dir, "Corpus directory")->required();
  validate->add_flag("--full-pixel-scan", full_scan, "Scan every image instead of a sample");
  validate->add_flag("--json", validate_json, "Machine-readable report");

  std::string stats_dir;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Per-split, per-type, per-template counts");
  stats->add_option("dir", stats_dir, "Corpus directory")->required();
  stats->add_flag("--json", stats_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) {
      figureqa::CorpusConfig config = figureqa::load_config(config_path);
      if (seed) config.master_seed = *seed;
      if (out_dir) config.output_dir = *out_dir;
      const auto manifest = figureqa::generate_corpus(config, workers);
      for (const auto& s : manifest.splits)
        std::cout << figureqa::to_string(s.split) << ": " << s.figure_count << " figures, " << s.qa_count
                  << " questions\n";
      std::cout << "wrote " << config.output_dir.string() << "\n";
      return 0;
    }
    if (*validate) {
      figureqa::ValidateOptions options;
      options.full_pixel_scan = full_scan;
      const auto report = figureqa::validate_corpus(validate_dir, options);
      if (validate_json)
        std::cout << figureqa::report_to_json(report).dump(2) << "\n";
      else
        std::cout << figureqa::report_to_text(report);
      return report.ok() ? 0 : kExitViolations;
    }
    if (*stats) {
      const auto s = figureqa::corpus_stats(stats_dir);
      if (stats_json)
        std::cout << figureqa::stats_to_json(s).dump(2) << "\n";
      else
        std::cout << figureqa::stats_to_text(s);
      return 0;
    }
  } catch (const figureqa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const figureqa::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const figureqa::SchemaError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
