#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "figureqa/canvas.hpp"
#include "figureqa/color.hpp"
#include "figureqa/corpus.hpp"
#include "figureqa/qa.hpp"
#include "figureqa/renderer.hpp"

namespace figureqa {

/// Checks a rendered image against its boxes using only the pixels:
///  - every box lies inside the canvas with positive size,
///  - data boxes carry a color id,
///  - every pixel showing a series color lies inside a data box of that color,
///  - every data box (except per-segment boxes) is tight: each of its four
///    edges contains a pixel of its color.
/// Returns the number of failures; descriptions are appended to `messages`.
int box_fidelity_failures(const Canvas& canvas, std::span<const BoundingBox> boxes,
                          std::span<const ColorEntry> colors, std::span<const int> series_color_ids,
                          std::vector<std::string>* messages = nullptr);

struct YesNo {
  int yes = 0;
  int no = 0;
};

struct SplitReport {
  std::string name;
  int figures = 0;
  std::array<int, 5> figures_by_type{};
  std::array<YesNo, kTemplateCount> by_template{};
};

struct ValidationReport {
  std::vector<SplitReport> splits;
  int oracle_mismatches = 0;
  int imbalanced_templates = 0;
  int bbox_failures = 0;
  int figures_pixel_scanned = 0;
  int scheme_violations = 0;
  int schema_errors = 0;
  int applicability_violations = 0;
  int referential_errors = 0;
  std::vector<std::string> messages;

  int violation_count() const {
    return oracle_mismatches + imbalanced_templates + bbox_failures + scheme_violations + schema_errors +
           applicability_violations + referential_errors;
  }
  bool ok() const { return violation_count() == 0; }
};

struct ValidateOptions {
  bool full_pixel_scan = false;
  int pixel_scan_stride = 10;  // sampled scan: every n-th figure of each split
  bool check_pixels = true;
};

/// Re-derives everything a corpus claims from its source data and images.
/// Per-record problems are counted rather than thrown; a missing or
/// unreadable manifest throws IoError / SchemaError.
ValidationReport validate_corpus(const std::filesystem::path& dir, const ValidateOptions& options = {});

std::string report_to_text(const ValidationReport& report);
Json report_to_json(const ValidationReport& report);

/// Per-split, per-type, per-template counts without the expensive checks.
std::vector<SplitReport> corpus_stats(const std::filesystem::path& dir);
std::string stats_to_text(const std::vector<SplitReport>& stats);
Json stats_to_json(const std::vector<SplitReport>& stats);

}  // namespace figureqa
