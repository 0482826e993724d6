#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "figureqa/color.hpp"
#include "figureqa/serialize.hpp"

namespace figureqa {

inline constexpr std::string_view kGeneratorVersion = "figureqa-gen 1.0.0";

enum class Split { Train, Val1, Val2, Test1, Test2 };
inline constexpr std::array<Split, 5> kSplits{Split::Train, Split::Val1, Split::Val2, Split::Test1, Split::Test2};

std::string_view to_string(Split s);
/// Training coloring for train/val1/test1; alternated for val2/test2.
ColorMode split_color_mode(Split s);

struct CorpusConfig {
  std::uint64_t master_seed = 0;
  std::array<int, 5> counts{1000, 200, 200, 200, 200};  // indexed like kSplits
  int base_height = 256;
  std::filesystem::path output_dir = "corpus";
  bool per_segment_boxes = false;
  std::vector<int> magnitude_factors{1, 10, 100};

  int& count(Split s) { return counts[static_cast<std::size_t>(s)]; }
  int count(Split s) const { return counts[static_cast<std::size_t>(s)]; }
};

/// Filesystem failure while reading or writing a corpus.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A figure that kept failing to render after every resample.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `key = value` lines (`#` starts a comment). Keys: master_seed,
/// train, val1, val2, test1, test2, base_height, output_dir,
/// per_segment_boxes, magnitude_factors (comma separated). Unknown keys and
/// malformed values throw ConfigError.
CorpusConfig parse_config(std::string_view text);
CorpusConfig load_config(const std::filesystem::path& file);
std::string config_to_text(const CorpusConfig& config);

inline constexpr int kMaxRenderAttempts = 16;

struct SplitSummary {
  Split split = Split::Train;
  int first_figure_id = 0;
  int figure_count = 0;
  std::size_t qa_count = 0;
};

struct CorpusManifest {
  CorpusConfig config;
  ColorScheme scheme;
  std::vector<SplitSummary> splits;
  Json to_json() const;
};

/// Samples, renders, and annotates every split, balances questions per split,
/// and writes the corpus under config.output_dir:
///
///   manifest.json
///   <split>/images/<figure_id>.png
///   <split>/annotations.json
///   <split>/qa_pairs.json
///
/// Figures are assigned types round-robin within each split. Output bytes
/// are identical for any worker count.
CorpusManifest generate_corpus(const CorpusConfig& config, int workers = 1);

/// Writes `bytes` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace figureqa
