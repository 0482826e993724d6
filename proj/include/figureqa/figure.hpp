#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace figureqa {

enum class FigureType { VerticalBar, HorizontalBar, Line, DotLine, Pie };

inline constexpr std::array<FigureType, 5> kFigureTypes{
    FigureType::VerticalBar, FigureType::HorizontalBar, FigureType::Line, FigureType::DotLine,
    FigureType::Pie};

constexpr bool is_bar(FigureType t) {
  return t == FigureType::VerticalBar || t == FigureType::HorizontalBar;
}
constexpr bool is_line(FigureType t) { return t == FigureType::Line || t == FigureType::DotLine; }

enum class ShapeFunction { UniformRandom, Linear, BellShape, LinearNoise, Quadratic };

/// Shapes admissible for a figure type; empty for pie charts.
std::span<const ShapeFunction> admissible_shapes(FigureType type);

struct IntRange {
  int lo = 0, hi = 0;
  constexpr bool contains(int v) const { return v >= lo && v <= hi; }
};

/// Number of colored elements (bars, curves, slices) per figure.
IntRange element_count_range(FigureType type);
/// Points per curve; bars and slices carry a single value each.
IntRange point_count_range(FigureType type);

/// One colored plot element. Bars and pie slices are one-point series at
/// x = position index; curves share the figure's x-grid.
struct Series {
  int color_id = 0;
  std::vector<double> x;
  std::vector<double> y;
  std::optional<ShapeFunction> shape;  // curves only
  friend bool operator==(const Series&, const Series&) = default;
};

inline constexpr int kLineStyleCount = 5;
inline constexpr int kFontSizeCount = 4;

struct StyleParams {
  double width_to_height = 1.0;
  int font_size_index = 0;
  bool gridlines = false;
  bool legend_inside = false;
  /// Legend cell on the 3x3 plot grid, filled in from the render placement;
  /// -1 while unplaced or when the legend sits outside.
  int legend_cell = -1;
  /// Outside placement: right of the plot area when set, below it otherwise.
  bool legend_right = false;
  std::vector<int> line_style_ids;  // one per series, line types only
  friend bool operator==(const StyleParams&, const StyleParams&) = default;
};

struct FigureSpec {
  int figure_id = 0;
  FigureType type = FigureType::VerticalBar;
  std::vector<Series> series;
  std::optional<ShapeFunction> shape;  // bar types only
  StyleParams style;
  double magnitude = 1.0;
  std::uint64_t seed = 0;
  int attempt = 0;
  friend bool operator==(const FigureSpec&, const FigureSpec&) = default;
};

std::string_view to_string(FigureType t);
std::string_view to_string(ShapeFunction s);
std::optional<FigureType> figure_type_from_string(std::string_view s);
std::optional<ShapeFunction> shape_from_string(std::string_view s);

/// Scalar value of a bar or pie slice.
inline double element_value(const Series& s) { return s.y.front(); }

}  // namespace figureqa
