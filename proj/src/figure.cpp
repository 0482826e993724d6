#include "figureqa/figure.hpp"

namespace figureqa {

namespace {

constexpr std::array<ShapeFunction, 3> kBarShapes{ShapeFunction::UniformRandom, ShapeFunction::Linear,
                                                  ShapeFunction::BellShape};
constexpr std::array<ShapeFunction, 3> kLineShapes{ShapeFunction::Linear, ShapeFunction::LinearNoise,
                                                   ShapeFunction::Quadratic};

}  // namespace

std::span<const ShapeFunction> admissible_shapes(FigureType type) {
  if (is_bar(type)) return kBarShapes;
  if (is_line(type)) return kLineShapes;
  return {};
}

IntRange element_count_range(FigureType type) {
  return is_bar(type) ? IntRange{2, 10} : IntRange{2, 7};
}

IntRange point_count_range(FigureType type) {
  return is_line(type) ? IntRange{5, 20} : IntRange{1, 1};
}

std::string_view to_string(FigureType t) {
  switch (t) {
    case FigureType::VerticalBar: return "vbar";
    case FigureType::HorizontalBar: return "hbar";
    case FigureType::Line: return "line";
    case FigureType::DotLine: return "dot_line";
    case FigureType::Pie: return "pie";
  }
  return "?";
}

std::string_view to_string(ShapeFunction s) {
  switch (s) {
    case ShapeFunction::UniformRandom: return "uniform_random";
    case ShapeFunction::Linear: return "linear";
    case ShapeFunction::BellShape: return "bell_shape";
    case ShapeFunction::LinearNoise: return "linear_noise";
    case ShapeFunction::Quadratic: return "quadratic";
  }
  return "?";
}

std::optional<FigureType> figure_type_from_string(std::string_view s) {
  for (auto t : kFigureTypes)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::optional<ShapeFunction> shape_from_string(std::string_view s) {
  for (auto f : {ShapeFunction::UniformRandom, ShapeFunction::Linear, ShapeFunction::BellShape,
                 ShapeFunction::LinearNoise, ShapeFunction::Quadratic})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

}  // namespace figureqa
