#pragma once

#include <cstddef>
#include <optional>

#include "figureqa/figure.hpp"

namespace figureqa::oracle {

// Brute-force re-derivations of every question answer, written independently
// of the qa engine so the validator can cross-check it.

/// Area as rectangle-plus-triangle pieces per interval.
double area_by_decomposition(const Series& s);

/// Roughness straight from the slope sequence.
double roughness_by_slopes(const Series& s);

/// Samples the difference of the two interpolants at `samples` evenly spaced
/// abscissae plus every grid point; reports contact when some sample is within
/// `tolerance` of zero or consecutive samples change sign.
bool intersect_by_sampling(const Series& a, const Series& b, int samples = 10000, double tolerance = 1e-9);

/// Answer of a question about series indices x (and y for two-color
/// templates). Returns nullopt if the template does not apply to the figure.
std::optional<bool> answer(const FigureSpec& spec, int template_id, std::size_t x,
                           std::optional<std::size_t> y = std::nullopt);

}  // namespace figureqa::oracle
