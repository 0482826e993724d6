#include "figureqa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace figureqa {

namespace {

void require_grid(std::span<const double> x, std::span<const double> y, std::size_t min_points,
                  const char* what) {
  if (x.size() != y.size()) throw std::invalid_argument(std::string(what) + ": x/y length mismatch");
  if (x.size() < min_points)
    throw InapplicableError(std::string(what) + ": needs at least " + std::to_string(min_points) + " points");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw std::invalid_argument(std::string(what) + ": x must be strictly increasing");
}

void require_shared_grid(const Series& a, const Series& b) {
  if (a.x != b.x || a.y.size() != b.y.size() || a.x.size() != a.y.size())
    throw std::invalid_argument("curves must share the same x-grid");
}

}  // namespace

double roughness(std::span<const double> x, std::span<const double> y) {
  require_grid(x, y, 3, "roughness");
  double total = 0.0;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    const double right = (y[i + 2] - y[i + 1]) / (x[i + 2] - x[i + 1]);
    const double left = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    total += std::abs(right - left);
  }
  return total;
}

double area_under_curve(std::span<const double> x, std::span<const double> y) {
  require_grid(x, y, 2, "area_under_curve");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) total += (x[i + 1] - x[i]) * (y[i] + y[i + 1]) / 2;
  return total;
}

MedianIndices low_high_median(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3) throw InapplicableError("low_high_median: needs at least 3 values");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  for (std::size_t i = 1; i < n; ++i)
    if (values[order[i]] == values[order[i - 1]]) throw std::invalid_argument("low_high_median: tied values");
  if (n % 2 == 1) return {order[n / 2], order[n / 2]};
  return {order[n / 2 - 1], order[n / 2]};
}

CurveOrder curve_compare(const Series& a, const Series& b) {
  require_shared_grid(a, b);
  bool all_less = true, all_greater = true;
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    all_less = all_less && a.y[i] < b.y[i];
    all_greater = all_greater && a.y[i] > b.y[i];
  }
  if (all_less) return CurveOrder::Less;
  if (all_greater) return CurveOrder::Greater;
  return CurveOrder::Neither;
}

bool curves_intersect(const Series& a, const Series& b) {
  require_shared_grid(a, b);
  if (a.y.size() == 1) return a.y[0] == b.y[0];
  for (std::size_t i = 0; i + 1 < a.y.size(); ++i) {
    const double d0 = a.y[i] - b.y[i], d1 = a.y[i + 1] - b.y[i + 1];
    if (d0 * d1 <= 0) return true;
  }
  return false;
}

bool pairwise_distinct(std::span<const double> values, double rel) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const double scale = std::max(std::abs(values[i]), std::abs(values[j]));
      if (std::abs(values[i] - values[j]) <= rel * scale) return false;
    }
  return true;
}

}  // namespace figureqa
