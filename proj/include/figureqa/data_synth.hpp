#pragma once

#include <cstdint>
#include <vector>

#include "figureqa/color.hpp"
#include "figureqa/figure.hpp"
#include "figureqa/rng.hpp"

namespace figureqa {

struct ValueRange {
  double lo = 1.0;
  double hi = 10.0;
  double span() const { return hi - lo; }
};

/// Base value range before the per-figure magnitude factor is applied.
inline constexpr ValueRange kBaseValueRange{1.0, 10.0};

/// Fraction every pie slice keeps after normalization.
inline constexpr double kMinPieSlice = 0.03;

/// Samples `n_points` values following `shape` inside `range`.
///
/// Values are computed on equally spaced positions t in [0, 1]:
///   UniformRandom  independent draws
///   Linear         endpoint values interpolated, exactly affine in t
///   BellShape      base + amp * exp(-(t - mu)^2 / (2 sigma^2)), sigma in [0.1, 0.5]
///   LinearNoise    affine base plus uniform noise of +-10% of the range
///   Quadratic      a t^2 + b t + c through three sampled values, clipped
///
/// Throws std::invalid_argument when `n_points` is outside what any figure
/// type using this shape could request.
std::vector<double> sample_shape(ShapeFunction shape, int n_points, Rng& rng,
                                 ValueRange range = kBaseValueRange);

struct SynthOptions {
  std::vector<int> magnitude_factors{1, 10, 100};
};

/// Seed of the random stream for one figure. Attempts > 0 are used by the
/// corpus generator to resample figures the renderer rejected.
std::uint64_t figure_seed(std::uint64_t master_seed, int figure_id, int attempt = 0);

/// Pure function of its arguments. Values are resampled from the same stream
/// until every per-figure quantity a question can ask about is unambiguous.
FigureSpec sample_figure(FigureType type, int figure_id, const ColorScheme& scheme,
                         std::uint64_t master_seed, const SynthOptions& options = {},
                         int attempt = 0);

/// Checks the structural invariants of a spec against a scheme; returns a
/// description of the first violation, or an empty string.
std::string check_figure(const FigureSpec& spec, const ColorScheme& scheme);

}  // namespace figureqa
