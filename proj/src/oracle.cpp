#include "figureqa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace figureqa::oracle {

namespace {

double interpolate(const Series& s, double t) {
  if (t <= s.x.front()) return s.y.front();
  if (t >= s.x.back()) return s.y.back();
  std::size_t k = 0;
  while (s.x[k + 1] < t) ++k;
  const double u = (t - s.x[k]) / (s.x[k + 1] - s.x[k]);
  return s.y[k] * (1 - u) + s.y[k + 1] * u;
}

// Number of series whose score is strictly below series x's score.
template <typename Score>
int rank_below(const FigureSpec& spec, std::size_t x, Score&& score) {
  int below = 0;
  const double mine = score(spec.series[x]);
  for (const auto& s : spec.series) below += score(s) < mine ? 1 : 0;
  return below;
}

template <typename Score>
int rank_above(const FigureSpec& spec, std::size_t x, Score&& score) {
  int above = 0;
  const double mine = score(spec.series[x]);
  for (const auto& s : spec.series) above += score(s) > mine ? 1 : 0;
  return above;
}

double lowest(const Series& s) {
  double v = s.y[0];
  for (double y : s.y) v = y < v ? y : v;
  return v;
}

double highest(const Series& s) {
  double v = s.y[0];
  for (double y : s.y) v = y > v ? y : v;
  return v;
}

}  // namespace

double area_by_decomposition(const Series& s) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < s.x.size(); ++i) {
    const double dx = s.x[i + 1] - s.x[i];
    total += dx * std::min(s.y[i], s.y[i + 1]) + dx * std::abs(s.y[i + 1] - s.y[i]) / 2;
  }
  return total;
}

double roughness_by_slopes(const Series& s) {
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < s.x.size(); ++i) slopes.push_back((s.y[i + 1] - s.y[i]) / (s.x[i + 1] - s.x[i]));
  double total = 0;
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) total += std::abs(slopes[i + 1] - slopes[i]);
  return total;
}

bool intersect_by_sampling(const Series& a, const Series& b, int samples, double tolerance) {
  const double lo = a.x.front(), hi = a.x.back();
  std::vector<double> ts(a.x.begin(), a.x.end());
  for (int k = 0; k < samples; ++k) ts.push_back(lo + (hi - lo) * k / (samples - 1));
  std::sort(ts.begin(), ts.end());
  double prev = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double d = interpolate(a, ts[k]) - interpolate(b, ts[k]);
    if (std::abs(d) <= tolerance) return true;
    if (k > 0 && ((prev < 0) != (d < 0))) return true;
    prev = d;
  }
  return false;
}

std::optional<bool> answer(const FigureSpec& spec, int template_id, std::size_t x, std::optional<std::size_t> y) {
  const bool line = is_line(spec.type);
  const bool bar_like = !line;
  const int n = static_cast<int>(spec.series.size());
  auto value = [](const Series& s) { return s.y.front(); };
  auto auc = [](const Series& s) { return area_by_decomposition(s); };
  auto rough = [](const Series& s) { return roughness_by_slopes(s); };

  switch (template_id) {
    case 1: if (!bar_like) return std::nullopt; return rank_below(spec, x, value) == 0;
    case 2: if (!bar_like) return std::nullopt; return rank_above(spec, x, value) == 0;
    case 3:
      if (!bar_like || n < 3) return std::nullopt;
      return rank_below(spec, x, value) == (n - 1) / 2;
    case 4:
      if (!bar_like || n < 3) return std::nullopt;
      return rank_below(spec, x, value) == n / 2;
    case 5: if (!bar_like || !y) return std::nullopt; return value(spec.series[x]) < value(spec.series[*y]);
    case 6: if (!bar_like || !y) return std::nullopt; return value(spec.series[x]) > value(spec.series[*y]);
    case 7: if (!line) return std::nullopt; return rank_below(spec, x, auc) == 0;
    case 8: if (!line) return std::nullopt; return rank_above(spec, x, auc) == 0;
    case 9: if (!line) return std::nullopt; return rank_below(spec, x, rough) == 0;
    case 10: if (!line) return std::nullopt; return rank_above(spec, x, rough) == 0;
    case 11: if (!line) return std::nullopt; return rank_below(spec, x, lowest) == 0;
    case 12: if (!line) return std::nullopt; return rank_above(spec, x, highest) == 0;
    case 13:
    case 14: {
      if (!line || !y) return std::nullopt;
      const auto& a = spec.series[x];
      const auto& b = spec.series[*y];
      int below = 0, above = 0;
      for (std::size_t i = 0; i < a.y.size(); ++i) below += a.y[i] < b.y[i], above += a.y[i] > b.y[i];
      const int total = static_cast<int>(a.y.size());
      return template_id == 13 ? below == total : above == total;
    }
    case 15:
      if (!line || !y) return std::nullopt;
      return intersect_by_sampling(spec.series[x], spec.series[*y]);
    default: return std::nullopt;
  }
}

}  // namespace figureqa::oracle
