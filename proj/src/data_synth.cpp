#include "figureqa/data_synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "figureqa/metrics.hpp"

namespace figureqa {

namespace {

constexpr int kMaxResamples = 1000;

double position(int i, int n) { return n == 1 ? 0.0 : static_cast<double>(i) / (n - 1); }

IntRange shape_point_range(ShapeFunction shape) {
  switch (shape) {
    case ShapeFunction::UniformRandom:
    case ShapeFunction::BellShape: return {2, 10};
    case ShapeFunction::Linear: return {2, 20};
    case ShapeFunction::LinearNoise:
    case ShapeFunction::Quadratic: return {5, 20};
  }
  return {0, -1};
}

std::vector<int> pick_colors(std::span<const int> pool, int count, Rng& rng) {
  std::vector<int> ids(pool.begin(), pool.end());
  for (int i = 0; i < count; ++i) {
    const int j = rng.uniform_int(i, static_cast<int>(ids.size()) - 1);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(count);
  return ids;
}

template <typename T>
T pick(std::span<const T> items, Rng& rng) {
  return items[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(items.size()) - 1))];
}

std::vector<double> sample_pie_fractions(int n, Rng& rng) {
  std::vector<double> w(n);
  for (auto& v : w) v = rng.uniform(0.05, 1.0);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  const double free = 1.0 - kMinPieSlice * n;
  for (auto& v : w) v = kMinPieSlice + free * v / total;
  return w;
}

bool curves_unambiguous(const std::vector<Series>& series) {
  std::vector<double> auc, rough, lo, hi;
  for (const auto& s : series) {
    auc.push_back(area_under_curve(s.x, s.y));
    rough.push_back(roughness(s.x, s.y));
    lo.push_back(*std::min_element(s.y.begin(), s.y.end()));
    hi.push_back(*std::max_element(s.y.begin(), s.y.end()));
  }
  return pairwise_distinct(auc) && pairwise_distinct(rough) && pairwise_distinct(lo) &&
         pairwise_distinct(hi);
}

}  // namespace

std::vector<double> sample_shape(ShapeFunction shape, int n_points, Rng& rng, ValueRange range) {
  if (!shape_point_range(shape).contains(n_points))
    throw std::invalid_argument("sample_shape: " + std::to_string(n_points) + " points invalid for " +
                                std::string(to_string(shape)));
  const double lo = range.lo, hi = range.hi, r = range.span();
  std::vector<double> y(n_points);

  switch (shape) {
    case ShapeFunction::UniformRandom:
      for (auto& v : y) v = rng.uniform(lo, hi);
      break;
    case ShapeFunction::Linear: {
      const double y0 = rng.uniform(lo, hi), y1 = rng.uniform(lo, hi);
      for (int i = 0; i < n_points; ++i) y[i] = y0 + (y1 - y0) * position(i, n_points);
      break;
    }
    case ShapeFunction::BellShape: {
      const double mu = rng.uniform(0.0, 1.0);
      const double sigma = rng.uniform(0.1, 0.5);
      const double base = rng.uniform(lo, lo + 0.3 * r);
      const double amp = rng.uniform(0.3 * r, hi - base);
      for (int i = 0; i < n_points; ++i) {
        const double d = position(i, n_points) - mu;
        y[i] = base + amp * std::exp(-d * d / (2 * sigma * sigma));
      }
      break;
    }
    case ShapeFunction::LinearNoise: {
      const double noise = 0.1 * r;
      const double y0 = rng.uniform(lo + noise, hi - noise), y1 = rng.uniform(lo + noise, hi - noise);
      for (int i = 0; i < n_points; ++i)
        y[i] = y0 + (y1 - y0) * position(i, n_points) + rng.uniform(-noise, noise);
      break;
    }
    case ShapeFunction::Quadratic: {
      // Coefficients fixed by values at t = 0, 1/2, 1.
      const double f0 = rng.uniform(lo, hi), fm = rng.uniform(lo, hi), f1 = rng.uniform(lo, hi);
      const double c = f0;
      const double a = 2 * f1 - 4 * fm + 2 * f0;
      const double b = f1 - f0 - a;
      for (int i = 0; i < n_points; ++i) {
        const double t = position(i, n_points);
        y[i] = a * t * t + b * t + c;
      }
      break;
    }
  }
  for (auto& v : y) v = std::clamp(v, lo, hi);
  return y;
}

std::uint64_t figure_seed(std::uint64_t master_seed, int figure_id, int attempt) {
  const std::uint64_t base = hash64(master_seed, static_cast<std::uint64_t>(figure_id));
  return attempt == 0 ? base : hash64(base, static_cast<std::uint64_t>(attempt));
}

FigureSpec sample_figure(FigureType type, int figure_id, const ColorScheme& scheme,
                         std::uint64_t master_seed, const SynthOptions& options, int attempt) {
  if (options.magnitude_factors.empty()) throw std::invalid_argument("no magnitude factors");
  FigureSpec spec;
  spec.figure_id = figure_id;
  spec.type = type;
  spec.attempt = attempt;
  spec.seed = figure_seed(master_seed, figure_id, attempt);
  Rng rng(spec.seed);

  spec.magnitude = pick(std::span<const int>(options.magnitude_factors), rng);
  const ValueRange range{kBaseValueRange.lo * spec.magnitude, kBaseValueRange.hi * spec.magnitude};

  const IntRange count_range = element_count_range(type);
  const int count = rng.uniform_int(count_range.lo, count_range.hi);
  const std::vector<int> colors = pick_colors(scheme.ids_for(type), count, rng);

  auto& style = spec.style;
  style.width_to_height = rng.uniform(1.0, 2.0);
  style.font_size_index = rng.uniform_int(0, kFontSizeCount - 1);
  style.gridlines = rng.coin();
  style.legend_inside = rng.coin();
  style.legend_right = rng.coin();
  if (is_line(type))
    for (int i = 0; i < count; ++i) style.line_style_ids.push_back(rng.uniform_int(0, kLineStyleCount - 1));

  spec.series.resize(count);
  for (int i = 0; i < count; ++i) spec.series[i].color_id = colors[i];

  if (is_bar(type)) {
    spec.shape = pick(admissible_shapes(type), rng);
    for (int tries = 0;; ++tries) {
      if (tries == kMaxResamples) throw std::runtime_error("sample_figure: could not separate bar values");
      const auto values = sample_shape(*spec.shape, count, rng, range);
      if (!pairwise_distinct(values)) continue;
      for (int i = 0; i < count; ++i) spec.series[i].x = {static_cast<double>(i)}, spec.series[i].y = {values[i]};
      break;
    }
  } else if (type == FigureType::Pie) {
    for (int tries = 0;; ++tries) {
      if (tries == kMaxResamples) throw std::runtime_error("sample_figure: could not separate pie slices");
      const auto fractions = sample_pie_fractions(count, rng);
      if (!pairwise_distinct(fractions)) continue;
      for (int i = 0; i < count; ++i)
        spec.series[i].x = {static_cast<double>(i)}, spec.series[i].y = {fractions[i]};
      break;
    }
  } else {
    const IntRange points = point_count_range(type);
    const int n = rng.uniform_int(points.lo, points.hi);
    const double x0 = rng.uniform(0.0, 50.0);
    const double span = rng.uniform(10.0, 100.0);
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = x0 + span * position(i, n);

    // Two linear curves would tie at zero roughness.
    const std::array<ShapeFunction, 2> non_linear{ShapeFunction::LinearNoise, ShapeFunction::Quadratic};
    for (int tries = 0;; ++tries) {
      if (tries == kMaxResamples) throw std::runtime_error("sample_figure: could not separate curves");
      bool have_linear = false;
      for (auto& s : spec.series) {
        s.shape = have_linear ? pick(std::span<const ShapeFunction>(non_linear), rng)
                              : pick(admissible_shapes(type), rng);
        have_linear = have_linear || *s.shape == ShapeFunction::Linear;
        s.x = grid;
        s.y = sample_shape(*s.shape, n, rng, range);
      }
      if (curves_unambiguous(spec.series)) break;
    }
  }
  return spec;
}

std::string check_figure(const FigureSpec& spec, const ColorScheme& scheme) {
  const auto count = static_cast<int>(spec.series.size());
  if (!element_count_range(spec.type).contains(count)) return "element count out of range";
  std::vector<int> seen;
  const auto subset = subset_for(spec.type, scheme.mode);
  for (const auto& s : spec.series) {
    if (std::find(seen.begin(), seen.end(), s.color_id) != seen.end()) return "repeated color id";
    seen.push_back(s.color_id);
    if (!scheme.contains(subset, s.color_id)) return "color outside the scheme subset";
    if (s.x.size() != s.y.size()) return "x/y length mismatch";
    if (!point_count_range(spec.type).contains(static_cast<int>(s.y.size()))) return "point count out of range";
    for (std::size_t i = 1; i < s.x.size(); ++i)
      if (!(s.x[i] > s.x[i - 1])) return "x values not strictly increasing";
  }
  if (is_line(spec.type)) {
    for (const auto& s : spec.series)
      if (s.x != spec.series.front().x) return "curves do not share an x-grid";
    if (spec.style.line_style_ids.size() != spec.series.size()) return "missing line styles";
  }
  if (spec.type == FigureType::Pie) {
    double total = 0;
    for (const auto& s : spec.series) total += element_value(s);
    if (std::abs(total - 1.0) > 1e-9) return "pie fractions do not sum to 1";
  }
  if (spec.style.width_to_height < 1.0 || spec.style.width_to_height > 2.0) return "aspect ratio out of range";
  if (spec.style.font_size_index < 0 || spec.style.font_size_index >= kFontSizeCount) return "bad font size";
  return {};
}

}  // namespace figureqa
