#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "figureqa/canvas.hpp"
#include "figureqa/color.hpp"
#include "figureqa/figure.hpp"
#include "figureqa/font.hpp"
#include "figureqa/legend.hpp"

namespace figureqa {

enum class ElementClass {
  Bar,
  LineSegmentGroup,
  DotMarkerGroup,
  PieSlice,
  XAxis,
  YAxis,
  TickLabel,
  AxisLabel,
  Title,
  LegendToken,
  LegendLabel,
  GridLine,
  LineSegment,  // optional per-segment boxes inside a LineSegmentGroup
};

std::string_view to_string(ElementClass c);
std::optional<ElementClass> element_class_from_string(std::string_view s);

/// Classes painted in a series color; their boxes always carry a color id.
constexpr bool is_data_element(ElementClass c) {
  return c == ElementClass::Bar || c == ElementClass::LineSegmentGroup || c == ElementClass::DotMarkerGroup ||
         c == ElementClass::PieSlice || c == ElementClass::LegendToken || c == ElementClass::LineSegment;
}

struct BoundingBox {
  ElementClass element_class = ElementClass::Bar;
  std::optional<int> color_id;
  int x = 0, y = 0, w = 0, h = 0;
  std::string text;  // rendered string for text elements
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RenderOptions {
  int base_height = 256;
  bool per_segment_boxes = false;
};

struct Rendering {
  Canvas canvas;
  std::vector<BoundingBox> boxes;
  LegendPlacement legend;
};

struct RenderResult {
  std::vector<std::uint8_t> png;
  std::vector<BoundingBox> boxes;
  int width = 0;
  int height = 0;
  LegendPlacement legend;
};

inline constexpr Rgb kInkColor{0, 0, 0};
inline constexpr Rgb kGridColor{225, 225, 225};
inline constexpr Rgb kLegendFrameColor{200, 200, 200};

inline constexpr std::string_view kTitleText = "title";
inline constexpr std::string_view kXAxisLabelText = "xaxis_label";
inline constexpr std::string_view kYAxisLabelText = "yaxis_label";

/// Rasterizes a figure without anti-aliasing; every series pixel carries the
/// exact table rgb and every box is tight over the pixels showing its element.
/// Throws RenderError when the figure cannot be laid out legibly (callers
/// resample the figure).
Rendering render_raster(const FigureSpec& spec, std::span<const ColorEntry> colors, const FontSet& fonts,
                        const RenderOptions& options = {});

/// render_raster followed by PNG encoding.
RenderResult render(const FigureSpec& spec, std::span<const ColorEntry> colors,
                    const FontSet& fonts = FontSet::embedded(), const RenderOptions& options = {});

}  // namespace figureqa
