#include "figureqa/qa.hpp"

#include <algorithm>
#include <stdexcept>

#include "figureqa/rng.hpp"

namespace figureqa {

namespace {

constexpr std::array<QuestionTemplate, kTemplateCount> kTemplates{{
    {1, "Is X the minimum?", true, false},
    {2, "Is X the maximum?", true, false},
    {3, "Is X the low median?", true, false},
    {4, "Is X the high median?", true, false},
    {5, "Is X less than Y?", true, true},
    {6, "Is X greater than Y?", true, true},
    {7, "Does X have the minimum area under the curve?", false, false},
    {8, "Does X have the maximum area under the curve?", false, false},
    {9, "Is X the smoothest?", false, false},
    {10, "Is X the roughest?", false, false},
    {11, "Does X have the lowest value?", false, false},
    {12, "Does X have the highest value?", false, false},
    {13, "Is X less than Y?", false, true},
    {14, "Is X greater than Y?", false, true},
    {15, "Does X intersect Y?", false, true},
}};

constexpr std::uint64_t kQuestionStream = 0x51A0'0001;

template <typename Fn>
std::size_t arg_best(std::size_t n, Fn&& better) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (better(i, best)) best = i;
  return best;
}

const ColorEntry& color_of(std::span<const ColorEntry> colors, int id) {
  const auto it = std::find_if(colors.begin(), colors.end(), [&](const auto& e) { return e.id == id; });
  if (it == colors.end()) throw std::invalid_argument("unknown color id " + std::to_string(id));
  return *it;
}

}  // namespace

std::span<const QuestionTemplate> question_templates() { return kTemplates; }

const QuestionTemplate& question_template(int id) {
  if (id < 1 || id > kTemplateCount) throw std::out_of_range("template id must be in 1..15");
  return kTemplates[static_cast<std::size_t>(id - 1)];
}

bool template_applies(int template_id, FigureType type) {
  return question_template(template_id).for_bars_and_pie ? !is_line(type) : is_line(type);
}

std::string render_question(const QuestionTemplate& t, std::string_view x_name, std::string_view y_name) {
  std::string out;
  for (char c : t.surface_form) {
    if (c == 'X')
      out += x_name;
    else if (c == 'Y' && t.two_subjects)
      out += y_name;
    else
      out += c;
  }
  return out;
}

std::vector<ElementSummary> summarize(const FigureSpec& spec) {
  std::vector<ElementSummary> out;
  for (const auto& s : spec.series) {
    ElementSummary e;
    if (is_line(spec.type)) {
      e.auc = area_under_curve(s.x, s.y);
      e.roughness = roughness(s.x, s.y);
      e.min_y = *std::min_element(s.y.begin(), s.y.end());
      e.max_y = *std::max_element(s.y.begin(), s.y.end());
    } else {
      e.value = element_value(s);
      e.min_y = e.max_y = e.value;
    }
    out.push_back(e);
  }
  return out;
}

bool answer_question(const FigureSpec& spec, std::span<const ElementSummary> sum, int template_id, std::size_t x,
                     std::size_t y) {
  const std::size_t n = sum.size();
  if (x >= n || (question_template(template_id).two_subjects && (y >= n || x == y)))
    throw std::invalid_argument("answer_question: bad subject indices");
  if (!template_applies(template_id, spec.type)) throw InapplicableError("template does not apply to figure type");
  auto values = [&] {
    std::vector<double> v;
    for (const auto& e : sum) v.push_back(e.value);
    return v;
  };
  switch (template_id) {
    case 1: return x == arg_best(n, [&](auto i, auto b) { return sum[i].value < sum[b].value; });
    case 2: return x == arg_best(n, [&](auto i, auto b) { return sum[i].value > sum[b].value; });
    case 3: return x == low_high_median(values()).low;
    case 4: return x == low_high_median(values()).high;
    case 5: return sum[x].value < sum[y].value;
    case 6: return sum[x].value > sum[y].value;
    case 7: return x == arg_best(n, [&](auto i, auto b) { return sum[i].auc < sum[b].auc; });
    case 8: return x == arg_best(n, [&](auto i, auto b) { return sum[i].auc > sum[b].auc; });
    case 9: return x == arg_best(n, [&](auto i, auto b) { return sum[i].roughness < sum[b].roughness; });
    case 10: return x == arg_best(n, [&](auto i, auto b) { return sum[i].roughness > sum[b].roughness; });
    case 11: return x == arg_best(n, [&](auto i, auto b) { return sum[i].min_y < sum[b].min_y; });
    case 12: return x == arg_best(n, [&](auto i, auto b) { return sum[i].max_y > sum[b].max_y; });
    case 13: return curve_compare(spec.series[x], spec.series[y]) == CurveOrder::Less;
    case 14: return curve_compare(spec.series[x], spec.series[y]) == CurveOrder::Greater;
    case 15: return curves_intersect(spec.series[x], spec.series[y]);
    default: throw std::out_of_range("template id");
  }
}

std::vector<QAPair> generate_qa(const FigureSpec& spec, std::span<const ColorEntry> colors) {
  const auto sum = summarize(spec);
  const std::size_t n = sum.size();
  Rng rng(hash64(spec.seed, kQuestionStream));
  std::vector<QAPair> out;

  for (const auto& t : kTemplates) {
    if (!template_applies(t.id, spec.type)) continue;
    if ((t.id == 3 || t.id == 4) && n < 3) continue;

    std::vector<std::pair<std::size_t, std::size_t>> yes, no;
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.two_subjects) {
        (answer_question(spec, sum, t.id, i) ? yes : no).emplace_back(i, i);
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) (answer_question(spec, sum, t.id, i, j) ? yes : no).emplace_back(i, j);
    }

    for (const bool answer : {true, false}) {
      const auto& pool = answer ? yes : no;
      if (pool.empty()) continue;
      const auto [i, j] = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
      QAPair qa;
      qa.figure_id = spec.figure_id;
      qa.template_id = t.id;
      qa.color_x = spec.series[i].color_id;
      const auto& cx = color_of(colors, qa.color_x);
      if (t.two_subjects) {
        qa.color_y = spec.series[j].color_id;
        qa.question = render_question(t, cx.name, color_of(colors, *qa.color_y).name);
      } else {
        qa.question = render_question(t, cx.name);
      }
      qa.answer = answer;
      out.push_back(std::move(qa));
    }
  }
  return out;
}

}  // namespace figureqa
