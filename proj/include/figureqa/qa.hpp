#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figureqa/color.hpp"
#include "figureqa/figure.hpp"
#include "figureqa/metrics.hpp"

namespace figureqa {

inline constexpr int kTemplateCount = 15;

struct QuestionTemplate {
  int id = 0;
  std::string_view surface_form;  // "X" and "Y" mark the color slots
  bool for_bars_and_pie = false;  // otherwise line and dot-line figures
  bool two_subjects = false;
};

std::span<const QuestionTemplate> question_templates();
const QuestionTemplate& question_template(int id);
bool template_applies(int template_id, FigureType type);

/// Substitutes color names into a template's surface form.
std::string render_question(const QuestionTemplate& t, std::string_view x_name, std::string_view y_name = {});

struct QAPair {
  int figure_id = 0;
  int template_id = 0;
  std::string question;
  int color_x = 0;
  std::optional<int> color_y;
  bool answer = false;
  friend bool operator==(const QAPair&, const QAPair&) = default;
};

/// Per-series scalars the templates ask about.
struct ElementSummary {
  double value = 0;  // bar height or pie fraction; unused for curves
  double auc = 0;
  double roughness = 0;
  double min_y = 0;
  double max_y = 0;
};

std::vector<ElementSummary> summarize(const FigureSpec& spec);

/// Answer of `template_id` about series indices (x, y), computed from source data.
bool answer_question(const FigureSpec& spec, std::span<const ElementSummary> summaries, int template_id,
                     std::size_t x, std::size_t y = 0);

/// One yes- and one no-answered instance per applicable template, where each
/// side is realizable. Subjects are drawn uniformly from the eligible colors
/// (ordered pairs for two-color templates) with a stream derived from the
/// figure seed.
std::vector<QAPair> generate_qa(const FigureSpec& spec, std::span<const ColorEntry> colors);

/// Discards pairs from the majority answer of every template, uniformly at
/// random with `seed`, until yes and no counts match. Pairs whose figure has
/// no opposite-answer sibling for the same template go first, so per-figure
/// yes/no pairs survive whenever the global counts allow it. Output is sorted
/// by (figure id, template id, answer) with no before yes.
std::vector<QAPair> balance(std::vector<QAPair> pairs, std::uint64_t seed);

}  // namespace figureqa
