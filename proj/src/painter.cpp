#include "figureqa/painter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace figureqa {

namespace {

constexpr std::array<int, 0> kSolid{};
constexpr std::array<int, 2> kDashed{7, 4};
constexpr std::array<int, 2> kDotted{2, 3};
constexpr std::array<int, 4> kDashDot{7, 3, 2, 3};
constexpr std::array<int, 2> kLongDash{13, 4};

bool dash_on(DashPattern dash, double arc) {
  if (dash.empty()) return true;
  int total = 0;
  for (int d : dash) total += d;
  double phase = std::fmod(arc, static_cast<double>(total));
  for (std::size_t i = 0; i < dash.size(); ++i) {
    if (phase < dash[i]) return i % 2 == 0;
    phase -= dash[i];
  }
  return false;
}

int round_px(double v) { return static_cast<int>(std::floor(v + 0.5)); }

}  // namespace

Rect united(const Rect& a, const Rect& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int x0 = std::min(a.x, b.x), y0 = std::min(a.y, b.y);
  return {x0, y0, std::max(a.right(), b.right()) - x0, std::max(a.bottom(), b.bottom()) - y0};
}

DashPattern line_style_pattern(int style_id) {
  switch (style_id) {
    case 0: return kSolid;
    case 1: return kDashed;
    case 2: return kDotted;
    case 3: return kDashDot;
    case 4: return kLongDash;
    default: throw std::out_of_range("line style id must be in 0..4");
  }
}

Painter::Painter(int width, int height)
    : canvas_(width, height), owner_(static_cast<std::size_t>(width) * height, kNoOwner) {}

void Painter::plot(int x, int y, Rgb color, std::int32_t owner) {
  if (!canvas_.contains(x, y)) return;
  canvas_.set(x, y, color);
  owner_[index(x, y)] = owner;
}

void Painter::fill_rect(const Rect& r, Rgb color, std::int32_t owner) {
  for (int y = r.y; y < r.bottom(); ++y)
    for (int x = r.x; x < r.right(); ++x) plot(x, y, color, owner);
}

void Painter::stroke_rect(const Rect& r, Rgb color, std::int32_t owner) {
  if (r.empty()) return;
  hline(r.x, r.right() - 1, r.y, color, owner);
  hline(r.x, r.right() - 1, r.bottom() - 1, color, owner);
  vline(r.x, r.y, r.bottom() - 1, color, owner);
  vline(r.right() - 1, r.y, r.bottom() - 1, color, owner);
}

void Painter::hline(int x0, int x1, int y, Rgb color, std::int32_t owner) {
  if (x0 > x1) std::swap(x0, x1);
  for (int x = x0; x <= x1; ++x) plot(x, y, color, owner);
}

void Painter::vline(int x, int y0, int y1, Rgb color, std::int32_t owner) {
  if (y0 > y1) std::swap(y0, y1);
  for (int y = y0; y <= y1; ++y) plot(x, y, color, owner);
}

void Painter::stroke_polyline(std::span<const PointF> points, int thickness, DashPattern dash, Rgb color,
                              std::span<const std::int32_t> segment_owners) {
  if (points.size() < 2) return;
  if (segment_owners.size() != points.size() - 1)
    throw std::invalid_argument("stroke_polyline: one owner per segment required");
  const int lo = -(thickness - 1) / 2;
  const int hi = thickness / 2;
  auto stamp = [&](int x, int y, std::int32_t owner) {
    for (int dy = lo; dy <= hi; ++dy)
      for (int dx = lo; dx <= hi; ++dx) plot(x + dx, y + dy, color, owner);
  };

  double arc = 0.0;
  for (std::size_t s = 0; s + 1 < points.size(); ++s) {
    int x0 = round_px(points[s].x), y0 = round_px(points[s].y);
    const int x1 = round_px(points[s + 1].x), y1 = round_px(points[s + 1].y);
    const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    if (s == 0 && dash_on(dash, arc)) stamp(x0, y0, segment_owners[s]);
    while (x0 != x1 || y0 != y1) {
      const int e2 = 2 * err;
      bool moved_x = false, moved_y = false;
      if (e2 >= dy) err += dy, x0 += sx, moved_x = true;
      if (e2 <= dx) err += dx, y0 += sy, moved_y = true;
      arc += (moved_x && moved_y) ? std::numbers::sqrt2 : 1.0;
      if (dash_on(dash, arc)) stamp(x0, y0, segment_owners[s]);
    }
  }
}

void Painter::fill_circle(double cx, double cy, double radius, Rgb color, std::int32_t owner) {
  const int x0 = static_cast<int>(std::floor(cx - radius)), x1 = static_cast<int>(std::ceil(cx + radius));
  const int y0 = static_cast<int>(std::floor(cy - radius)), y1 = static_cast<int>(std::ceil(cy + radius));
  const double r2 = radius * radius;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
      if (dx * dx + dy * dy <= r2) plot(x, y, color, owner);
    }
}

void Painter::fill_pie(double cx, double cy, double radius, std::span<const double> fractions,
                       std::span<const Rgb> colors, std::span<const std::int32_t> owners) {
  if (fractions.size() != colors.size() || fractions.size() != owners.size() || fractions.empty())
    throw std::invalid_argument("fill_pie: mismatched slice data");
  std::vector<double> ends(fractions.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < fractions.size(); ++i) ends[i] = (acc += fractions[i]);
  ends.back() = 1.0;

  const int x0 = static_cast<int>(std::floor(cx - radius)), x1 = static_cast<int>(std::ceil(cx + radius));
  const int y0 = static_cast<int>(std::floor(cy - radius)), y1 = static_cast<int>(std::ceil(cy + radius));
  const double r2 = radius * radius;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
      if (dx * dx + dy * dy > r2) continue;
      double turn = std::atan2(dx, -dy) / (2 * std::numbers::pi);  // clockwise from 12 o'clock
      if (turn < 0) turn += 1.0;
      const auto slice = static_cast<std::size_t>(std::upper_bound(ends.begin(), ends.end(), turn) - ends.begin());
      const std::size_t i = std::min(slice, ends.size() - 1);
      plot(x, y, colors[i], owners[i]);
    }
}

template <typename Fn>
void Painter::for_each_glyph_pixel(std::string_view text, const BitmapFont& font, Fn&& fn) const {
  int pen = 0;
  for (char c : text) {
    const Glyph& g = font.glyph(c);
    for (int gy = 0; gy < g.height; ++gy)
      for (int gx = 0; gx < g.width; ++gx)
        if (g.on(gx, gy)) fn(pen + g.x_offset + gx, g.y_offset + gy);
    pen += g.advance;
  }
}

void Painter::draw_text(int x, int y, std::string_view text, const BitmapFont& font, Rgb color,
                        std::int32_t owner) {
  for_each_glyph_pixel(text, font, [&](int tx, int ty) { plot(x + tx, y + ty, color, owner); });
}

void Painter::draw_text_vertical(int x, int y, std::string_view text, const BitmapFont& font, Rgb color,
                                 std::int32_t owner) {
  const int width = font.text_width(text);
  for_each_glyph_pixel(text, font, [&](int tx, int ty) { plot(x + ty, y + width - 1 - tx, color, owner); });
}

std::vector<std::optional<Rect>> Painter::owned_boxes(std::size_t owner_count) const {
  struct Extent {
    int x0 = INT32_MAX, y0 = INT32_MAX, x1 = -1, y1 = -1;
  };
  std::vector<Extent> ext(owner_count);
  for (int y = 0; y < canvas_.height(); ++y)
    for (int x = 0; x < canvas_.width(); ++x) {
      const std::int32_t o = owner_[index(x, y)];
      if (o < 0 || static_cast<std::size_t>(o) >= owner_count) continue;
      auto& e = ext[static_cast<std::size_t>(o)];
      e.x0 = std::min(e.x0, x), e.y0 = std::min(e.y0, y);
      e.x1 = std::max(e.x1, x), e.y1 = std::max(e.y1, y);
    }
  std::vector<std::optional<Rect>> out(owner_count);
  for (std::size_t i = 0; i < owner_count; ++i)
    if (ext[i].x1 >= 0) out[i] = Rect{ext[i].x0, ext[i].y0, ext[i].x1 - ext[i].x0 + 1, ext[i].y1 - ext[i].y0 + 1};
  return out;
}

int Painter::count_owned(const Rect& region, std::int32_t first, std::int32_t last) const {
  int n = 0;
  for (int y = std::max(region.y, 0); y < std::min(region.bottom(), canvas_.height()); ++y)
    for (int x = std::max(region.x, 0); x < std::min(region.right(), canvas_.width()); ++x) {
      const std::int32_t o = owner_[index(x, y)];
      n += (o >= first && o < last) ? 1 : 0;
    }
  return n;
}

}  // namespace figureqa
