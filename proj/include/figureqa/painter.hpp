#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "figureqa/canvas.hpp"
#include "figureqa/font.hpp"

namespace figureqa {

struct Rect {
  int x = 0, y = 0, w = 0, h = 0;
  int right() const { return x + w; }    // exclusive
  int bottom() const { return y + h; }   // exclusive
  bool empty() const { return w <= 0 || h <= 0; }
  bool contains(int px, int py) const { return px >= x && py >= y && px < right() && py < bottom(); }
  friend bool operator==(const Rect&, const Rect&) = default;
};

Rect united(const Rect& a, const Rect& b);

struct PointF {
  double x = 0, y = 0;
};

/// On/off run lengths in pixels of path length; empty means solid.
using DashPattern = std::span<const int>;

/// Dash patterns indexed by line style id: solid, dashed, dotted, dash-dot, long-dash.
DashPattern line_style_pattern(int style_id);

/// Aliased raster operations that record, for every pixel, which element
/// painted it last. Element boxes are derived from that ownership map, so a
/// box covers exactly the pixels still showing the element's color.
class Painter {
 public:
  static constexpr std::int32_t kNoOwner = -1;

  Painter(int width, int height);

  const Canvas& canvas() const { return canvas_; }
  Canvas take_canvas() { return std::move(canvas_); }
  std::int32_t owner_at(int x, int y) const { return owner_[index(x, y)]; }

  void plot(int x, int y, Rgb color, std::int32_t owner);
  void fill_rect(const Rect& r, Rgb color, std::int32_t owner);
  void stroke_rect(const Rect& r, Rgb color, std::int32_t owner);
  void hline(int x0, int x1, int y, Rgb color, std::int32_t owner);
  void vline(int x, int y0, int y1, Rgb color, std::int32_t owner);

  /// Square-brush polyline. The dash phase runs continuously across vertices.
  /// `segment_owners` holds one owner per segment (points.size() - 1 entries).
  void stroke_polyline(std::span<const PointF> points, int thickness, DashPattern dash, Rgb color,
                       std::span<const std::int32_t> segment_owners);

  /// Pixels whose centers lie within `radius` of the center.
  void fill_circle(double cx, double cy, double radius, Rgb color, std::int32_t owner);

  /// Pie slices clockwise from 12 o'clock; `fractions` must sum to 1.
  void fill_pie(double cx, double cy, double radius, std::span<const double> fractions,
                std::span<const Rgb> colors, std::span<const std::int32_t> owners);

  /// Text with its line box's top-left corner at (x, y).
  void draw_text(int x, int y, std::string_view text, const BitmapFont& font, Rgb color, std::int32_t owner);
  /// Text rotated a quarter turn counter-clockwise, reading bottom to top; the
  /// rotated line box has its top-left corner at (x, y).
  void draw_text_vertical(int x, int y, std::string_view text, const BitmapFont& font, Rgb color,
                          std::int32_t owner);

  /// Tight boxes of the pixels currently owned by each id in [0, owner_count).
  std::vector<std::optional<Rect>> owned_boxes(std::size_t owner_count) const;
  /// Number of pixels inside `region` owned by any id in [first, last).
  int count_owned(const Rect& region, std::int32_t first, std::int32_t last) const;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * canvas_.width() + x; }
  template <typename Fn>
  void for_each_glyph_pixel(std::string_view text, const BitmapFont& font, Fn&& fn) const;

  Canvas canvas_;
  std::vector<std::int32_t> owner_;
};

}  // namespace figureqa
