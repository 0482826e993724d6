#pragma once

#include <span>
#include <stdexcept>
#include <utility>

#include "figureqa/figure.hpp"

namespace figureqa {

/// Raised when a metric is asked for on too few points.
class InapplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum of absolute differences between consecutive finite-difference slopes.
/// Requires at least 3 points and strictly increasing x.
double roughness(std::span<const double> x, std::span<const double> y);

/// Trapezoidal integral over the x-grid. Requires at least 2 points.
double area_under_curve(std::span<const double> x, std::span<const double> y);

struct MedianIndices {
  std::size_t low = 0;
  std::size_t high = 0;
};

/// Original indices of the lower and upper middle elements of the ascending
/// sort. They coincide for odd counts. Requires at least 3 values; ties are
/// rejected since they make the answer ambiguous.
MedianIndices low_high_median(std::span<const double> values);

enum class CurveOrder { Less, Greater, Neither };

/// Pointwise strict comparison over a shared x-grid.
CurveOrder curve_compare(const Series& a, const Series& b);

/// True iff the piecewise-linear interpolants touch or cross.
bool curves_intersect(const Series& a, const Series& b);

inline constexpr double kSeparation = 1e-6;

/// Every pair differs by more than kSeparation relative to the larger magnitude.
bool pairwise_distinct(std::span<const double> values, double rel = kSeparation);

}  // namespace figureqa
