#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>

#include "figureqa/corpus.hpp"
#include "figureqa/validate.hpp"
#include "support.hpp"

using namespace figureqa;
using testing::TempDir;
namespace fs = std::filesystem;

namespace {

CorpusConfig small_config(const fs::path& out, int train, int others = 0) {
  CorpusConfig c;
  c.master_seed = 4242;
  c.counts = {train, others, others, others, others};
  c.output_dir = out;
  return c;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FIGUREQA_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config(
      "# demo\nmaster_seed = 9\ntrain = 12\nval2=3\nbase_height = 300\noutput_dir = out/x\n"
      "per_segment_boxes = true\nmagnitude_factors = 1, 5\n");
  CHECK(c.master_seed == 9);
  CHECK(c.count(Split::Train) == 12);
  CHECK(c.count(Split::Val2) == 3);
  CHECK(c.count(Split::Val1) == 200);
  CHECK(c.base_height == 300);
  CHECK(c.output_dir == fs::path("out/x"));
  CHECK(c.per_segment_boxes);
  CHECK(c.magnitude_factors == std::vector<int>{1, 5});
  CHECK(parse_config(config_to_text(c)).counts == c.counts);

  CHECK_THROWS_AS(parse_config("colour = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("train = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("train = ten\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("train\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("per_segment_boxes = maybe\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/figureqa.cfg"), ConfigError);
}

TEST_CASE("split color modes") {
  CHECK(split_color_mode(Split::Train) == ColorMode::Training);
  CHECK(split_color_mode(Split::Val1) == ColorMode::Training);
  CHECK(split_color_mode(Split::Test1) == ColorMode::Training);
  CHECK(split_color_mode(Split::Val2) == ColorMode::Alternated);
  CHECK(split_color_mode(Split::Test2) == ColorMode::Alternated);
}

TEST_CASE("ten training figures") {
  TempDir dir("ten");
  const auto manifest = generate_corpus(small_config(dir.path(), 10), 2);
  int pngs = 0;
  for (const auto& e : fs::directory_iterator(dir.path() / "train" / "images"))
    pngs += e.path().extension() == ".png";
  CHECK(pngs == 10);
  const auto records = Json::parse(testing::slurp(dir.path() / "train" / "annotations.json"));
  CHECK(records.size() == 10);
  CHECK(manifest.splits.front().figure_count == 10);
  for (const auto& r : records) {
    CHECK(r.contains("source_data"));
    CHECK(r.contains("boxes"));
    CHECK(r["source_data"]["series"][0]["color"].contains("rgb"));
  }
  for (auto s : {"val1", "val2", "test1", "test2"})
    CHECK(Json::parse(testing::slurp(dir.path() / s / "qa_pairs.json")).empty());

  const auto report = validate_corpus(dir.path(), {.full_pixel_scan = true});
  INFO(report_to_text(report));
  CHECK(report.ok());
  CHECK(report.figures_pixel_scanned == 10);
}

TEST_CASE("same config and any worker count give the same bytes") {
  TempDir a("det_a"), b("det_b"), c("det_c");
  generate_corpus(small_config(a.path(), 25, 5), 1);
  generate_corpus(small_config(b.path(), 25, 5), 1);
  generate_corpus(small_config(c.path(), 25, 5), 8);
  const auto ta = testing::tree(a.path());
  CHECK(ta.size() == 1 + 5 * 2 + 25 + 4 * 5);
  CHECK(ta == testing::tree(b.path()));
  CHECK(ta == testing::tree(c.path()));
}

TEST_CASE("validator catches a flipped answer") {
  TempDir dir("flip");
  generate_corpus(small_config(dir.path(), 20), 4);
  const fs::path qa_file = dir.path() / "train" / "qa_pairs.json";
  auto qa = Json::parse(testing::slurp(qa_file));
  REQUIRE(!qa.empty());
  qa[3]["answer"] = qa[3]["answer"] == "yes" ? "no" : "yes";
  testing::spit(qa_file, qa.dump(1));
  const auto report = validate_corpus(dir.path());
  CHECK(report.oracle_mismatches == 1);
  CHECK_FALSE(report.ok());
}

TEST_CASE("validator catches a foreign color in a training vertical bar chart") {
  TempDir dir("scheme");
  const auto manifest = generate_corpus(small_config(dir.path(), 10), 2);
  const fs::path ann_file = dir.path() / "train" / "annotations.json";
  auto records = Json::parse(testing::slurp(ann_file));
  REQUIRE(records[0]["source_data"]["figure_type"] == "vbar");
  const int intruder = manifest.scheme.subset_b[0];
  const auto colors = build_color_table();
  records[0]["source_data"]["series"][0]["color"] = color_to_json(colors, intruder);
  testing::spit(ann_file, records.dump(1));
  const auto report = validate_corpus(dir.path());
  CHECK(report.scheme_violations >= 1);
  CHECK_FALSE(report.ok());
}

TEST_CASE("stats on empty and round-robin splits") {
  TempDir dir("stats");
  generate_corpus(small_config(dir.path(), 23, 0), 4);
  const auto stats = corpus_stats(dir.path());
  REQUIRE(stats.size() == 5);
  CHECK(stats[0].figures == 23);
  for (int k = 0; k < 5; ++k) CHECK(stats[0].figures_by_type[k] == (k < 3 ? 5 : 4));
  for (const auto& c : stats[0].by_template) CHECK(c.yes == c.no);
  for (int s = 1; s < 5; ++s) {
    CHECK(stats[s].figures == 0);
    for (const auto& c : stats[s].by_template) CHECK(c.yes + c.no == 0);
  }
  const auto text = stats_to_text(stats);
  CHECK(text.find("0.500") != std::string::npos);
  CHECK(text.find("split val1: 0 figures, 0 questions") != std::string::npos);
}

TEST_CASE("command line exit codes") {
  TempDir dir("cli");
  const fs::path cfg = dir.path() / "corpus.cfg";
  testing::spit(cfg, "master_seed = 3\ntrain = 6\nval1 = 0\nval2 = 2\ntest1 = 0\ntest2 = 0\n");
  const fs::path out = dir.path() / "out";
  CHECK(run_cli("generate --config " + cfg.string() + " --out " + out.string() + " --workers 2") == 0);
  CHECK(fs::exists(out / "manifest.json"));
  CHECK(run_cli("validate " + out.string() + " --full-pixel-scan") == 0);
  CHECK(run_cli("stats " + out.string() + " --json") == 0);

  const fs::path bad = dir.path() / "bad.cfg";
  testing::spit(bad, "trian = 6\n");
  CHECK(run_cli("generate --config " + bad.string()) == 2);
  CHECK(run_cli("generate") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("validate " + (dir.path() / "missing").string()) == 3);

  auto qa = Json::parse(testing::slurp(out / "train" / "qa_pairs.json"));
  qa[0]["answer"] = qa[0]["answer"] == "yes" ? "no" : "yes";
  testing::spit(out / "train" / "qa_pairs.json", qa.dump());
  CHECK(run_cli("validate " + out.string()) == 1);
}
