#include "figureqa/renderer.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "figureqa/painter.hpp"
#include "figureqa/png.hpp"
#include "figureqa/ticks.hpp"

namespace figureqa {

namespace {

constexpr int kPad = 4;
constexpr int kTickLength = 4;
constexpr int kLegendPad = 4;
constexpr int kLegendGap = 8;
constexpr int kLineTokenWidth = 22;
constexpr int kLineThickness = 2;
constexpr int kMinPlotSide = 40;
constexpr double kBarFill = 0.7;

constexpr std::array<std::string_view, 13> kClassNames{
    "bar",         "line_segment_group", "dot_marker_group", "pie_slice",    "x_axis",
    "y_axis",      "tick_label",         "axis_label",       "title",        "legend_token",
    "legend_label", "grid_line",          "line_segment"};

struct Element {
  ElementClass cls;
  std::optional<int> color_id;
  std::string text;
  int parent = -1;
};

struct LegendEntryLayout {
  int token_width = 0;
  int token_height = 0;
  int entry_height = 0;
  std::vector<int> entry_widths;
};

int round_px(double v) { return static_cast<int>(std::floor(v + 0.5)); }

class FigureRenderer {
 public:
  FigureRenderer(const FigureSpec& spec, std::span<const ColorEntry> colors, const FontSet& fonts,
                 const RenderOptions& options)
      : spec_(spec), colors_(colors), font_(fonts.size(spec.style.font_size_index)), options_(options) {
    height_ = options.base_height;
    width_ = round_px(height_ * spec.style.width_to_height);
    lh_ = font_.line_height();
    for (const auto& s : spec.series) {
      const auto it = std::find_if(colors.begin(), colors.end(), [&](const auto& e) { return e.id == s.color_id; });
      if (it == colors.end()) throw RenderError("unknown color id " + std::to_string(s.color_id));
      series_colors_.push_back(&*it);
    }
    legend_layout_ = measure_legend();
  }

  /// Lays out and draws the figure with the legend on `side`. Returns nullopt
  /// when an inside legend had to fall back to an outside position.
  std::optional<Rendering> run(LegendSide side) {
    painter_.emplace(width_, height_);
    elements_.clear();
    const LegendSize vertical = legend_size(LegendOrientation::Vertical, 0);

    Rect area{kPad, kPad, width_ - 2 * kPad, height_ - 2 * kPad};
    draw_title(area);
    LegendPlacement placement;
    placement.side = side;
    if (side == LegendSide::Right) {
      placement.orientation = LegendOrientation::Vertical;
      if (vertical.width > area.w / 2 || vertical.height > area.h) throw RenderError("legend does not fit");
      placement.rect = {area.right() - vertical.width, area.y + (area.h - vertical.height) / 2, vertical.width,
                        vertical.height};
      area.w -= vertical.width + kPad;
    } else if (side == LegendSide::Below) {
      placement.orientation = LegendOrientation::Horizontal;
      const LegendSize flow = legend_size(LegendOrientation::Horizontal, area.w);
      if (flow.width > area.w || flow.height > area.h / 3) throw RenderError("legend does not fit");
      placement.rect = {area.x + (area.w - flow.width) / 2, area.bottom() - flow.height, flow.width, flow.height};
      area.h -= flow.height + kPad;
    }

    const Rect plot = spec_.type == FigureType::Pie ? area : draw_axes(area);
    if (plot.w < kMinPlotSide || plot.h < kMinPlotSide) throw RenderError("plot area too small");

    data_begin_ = static_cast<std::int32_t>(elements_.size());
    draw_data(plot);
    data_end_ = static_cast<std::int32_t>(elements_.size());

    if (side == LegendSide::Inside) {
      Occupancy occ{};
      for (int c = 0; c < 9; ++c) occ[c] = painter_->count_owned(grid_cell(plot, c), data_begin_, data_end_);
      const LegendSize horizontal = legend_size(LegendOrientation::Horizontal, 0);
      placement = place_legend(spec_.style, occ, plot, vertical, horizontal);
      if (placement.side != LegendSide::Inside) return std::nullopt;
    }
    draw_legend(placement);
    return finish(placement);
  }

 private:
  std::int32_t add(ElementClass cls, std::optional<int> color_id = std::nullopt, std::string text = {},
                   int parent = -1) {
    elements_.push_back({cls, color_id, std::move(text), parent});
    return static_cast<std::int32_t>(elements_.size() - 1);
  }

  Rgb series_rgb(std::size_t i) const { return series_colors_[i]->rgb; }
  int series_color_id(std::size_t i) const { return series_colors_[i]->id; }

  void draw_title(Rect& area) {
    const int w = font_.text_width(kTitleText);
    painter_->draw_text(area.x + (area.w - w) / 2, area.y, kTitleText, font_, kInkColor,
                        add(ElementClass::Title, std::nullopt, std::string(kTitleText)));
    area.y += lh_ + kPad;
    area.h -= lh_ + kPad;
  }

  // Value range shown along the value axis (and the x axis of line charts).
  std::pair<double, double> value_extent() const {
    if (is_bar(spec_.type)) {
      double hi = 0;
      for (const auto& s : spec_.series) hi = std::max(hi, element_value(s));
      return {0.0, hi};
    }
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& s : spec_.series)
      for (double v : s.y) lo = std::min(lo, v), hi = std::max(hi, v);
    return {lo, hi};
  }

  // Picks the densest tick set whose labels fit along `length` pixels.
  TickSet horizontal_ticks(double lo, double hi, int length) const {
    for (int m = 10; m >= 2; --m) {
      TickSet t = compute_ticks(lo, hi, m);
      int total = 0;
      for (double v : t.values) total += font_.text_width(format_tick(v, t.decimals)) + kLegendGap;
      if (total <= length) return t;
    }
    throw RenderError("x tick labels do not fit");
  }

  Rect draw_axes(const Rect& area) {
    const bool vbar = spec_.type == FigureType::VerticalBar;
    const bool hbar = spec_.type == FigureType::HorizontalBar;
    const bool numeric_y = !hbar;
    const bool numeric_x = !vbar;
    const auto [vlo, vhi] = value_extent();

    const int bottom_reserve = lh_ + 2 + (numeric_x ? lh_ + 1 : 0) + kTickLength + 1;
    const int est_h = area.h - bottom_reserve;
    if (est_h < kMinPlotSide) throw RenderError("plot area too small");

    std::optional<TickSet> yticks;
    int ylabel_w = 0;
    if (numeric_y) {
      yticks = compute_ticks(vlo, vhi, std::clamp(est_h / (lh_ + 6), 2, 10));
      for (double v : yticks->values) ylabel_w = std::max(ylabel_w, font_.text_width(format_tick(v, yticks->decimals)));
    }
    const int left_reserve = lh_ + 2 + (numeric_y ? ylabel_w + 2 : 0) + kTickLength + 1;
    Rect plot{area.x + left_reserve, area.y, area.w - left_reserve, est_h};
    if (plot.w < kMinPlotSide || plot.h < kMinPlotSide) throw RenderError("plot area too small");

    std::optional<TickSet> xticks;
    if (numeric_x) {
      const double xlo = hbar ? vlo : spec_.series.front().x.front();
      const double xhi = hbar ? vhi : spec_.series.front().x.back();
      xticks = horizontal_ticks(xlo, xhi, plot.w);
    }
    x_domain_ = xticks ? std::pair{xticks->values.front(), xticks->values.back()} : std::pair{0.0, 1.0};
    y_domain_ = yticks ? std::pair{yticks->values.front(), yticks->values.back()} : std::pair{0.0, 1.0};
    inset_ = is_line(spec_.type) ? 5 : 0;

    // Gridlines sit under everything else.
    if (spec_.style.gridlines) {
      if (yticks)
        for (double v : yticks->values) {
          if (is_bar(spec_.type) && v == y_domain_.first) continue;
          painter_->hline(plot.x, plot.right() - 1, round_px(map_y(plot, v)), kGridColor, add(ElementClass::GridLine));
        }
      if (xticks)
        for (double v : xticks->values) {
          if (is_bar(spec_.type) && v == x_domain_.first) continue;
          painter_->vline(round_px(map_x(plot, v)), plot.y, plot.bottom() - 1, kGridColor, add(ElementClass::GridLine));
        }
    }

    const auto yaxis = add(ElementClass::YAxis);
    painter_->vline(plot.x - 1, plot.y, plot.bottom(), kInkColor, yaxis);
    const auto xaxis = add(ElementClass::XAxis);
    painter_->hline(plot.x - 1, plot.right() - 1, plot.bottom(), kInkColor, xaxis);

    if (yticks)
      for (double v : yticks->values) {
        const int py = round_px(map_y(plot, v));
        painter_->hline(plot.x - 1 - kTickLength, plot.x - 2, py, kInkColor, yaxis);
        const std::string label = format_tick(v, yticks->decimals);
        const int w = font_.text_width(label);
        const int ty = std::clamp(py - lh_ / 2, 0, height_ - lh_);
        painter_->draw_text(plot.x - 1 - kTickLength - 2 - w, ty, label, font_, kInkColor,
                            add(ElementClass::TickLabel, std::nullopt, label));
      }
    if (xticks)
      for (double v : xticks->values) {
        const int px = round_px(map_x(plot, v));
        painter_->vline(px, plot.bottom() + 1, plot.bottom() + kTickLength, kInkColor, xaxis);
        const std::string label = format_tick(v, xticks->decimals);
        const int w = font_.text_width(label);
        const int tx = std::clamp(px - w / 2, 0, width_ - w);
        painter_->draw_text(tx, plot.bottom() + kTickLength + 1, label, font_, kInkColor,
                            add(ElementClass::TickLabel, std::nullopt, label));
      }

    const int xw = font_.text_width(kXAxisLabelText);
    painter_->draw_text(plot.x + (plot.w - xw) / 2, area.bottom() - lh_, kXAxisLabelText, font_, kInkColor,
                        add(ElementClass::AxisLabel, std::nullopt, std::string(kXAxisLabelText)));
    const int yw = font_.text_width(kYAxisLabelText);
    painter_->draw_text_vertical(area.x, plot.y + std::max(0, (plot.h - yw) / 2), kYAxisLabelText, font_, kInkColor,
                                 add(ElementClass::AxisLabel, std::nullopt, std::string(kYAxisLabelText)));
    return plot;
  }

  double map_x(const Rect& plot, double v) const {
    const double t = (v - x_domain_.first) / (x_domain_.second - x_domain_.first);
    return plot.x + inset_ + t * (plot.w - 1 - 2 * inset_);
  }
  double map_y(const Rect& plot, double v) const {
    const double t = (v - y_domain_.first) / (y_domain_.second - y_domain_.first);
    return plot.bottom() - 1 - inset_ - t * (plot.h - 1 - 2 * inset_);
  }

  void draw_data(const Rect& plot) {
    const std::size_t n = spec_.series.size();
    switch (spec_.type) {
      case FigureType::VerticalBar: {
        const double slot = static_cast<double>(plot.w) / n;
        const int bw = std::max(1, round_px(slot * kBarFill));
        for (std::size_t i = 0; i < n; ++i) {
          const int left = plot.x + round_px(slot * i + (slot - bw) / 2);
          const int top = std::min(round_px(map_y(plot, element_value(spec_.series[i]))), plot.bottom() - 2);
          painter_->fill_rect({left, top, bw, plot.bottom() - top}, series_rgb(i),
                              add(ElementClass::Bar, series_color_id(i)));
        }
        break;
      }
      case FigureType::HorizontalBar: {
        const double slot = static_cast<double>(plot.h) / n;
        const int bh = std::max(1, round_px(slot * kBarFill));
        for (std::size_t i = 0; i < n; ++i) {
          const int top = plot.y + round_px(slot * i + (slot - bh) / 2);
          const int right = std::max(round_px(map_x(plot, element_value(spec_.series[i]))), plot.x + 1);
          painter_->fill_rect({plot.x, top, right - plot.x + 1, bh}, series_rgb(i),
                              add(ElementClass::Bar, series_color_id(i)));
        }
        break;
      }
      case FigureType::Line:
      case FigureType::DotLine: {
        const bool dots = spec_.type == FigureType::DotLine;
        const double radius = marker_radius();
        for (std::size_t i = 0; i < n; ++i) {
          const auto& s = spec_.series[i];
          std::vector<PointF> pts;
          for (std::size_t k = 0; k < s.x.size(); ++k) pts.push_back({map_x(plot, s.x[k]), map_y(plot, s.y[k])});
          const auto group = add(ElementClass::LineSegmentGroup, series_color_id(i));
          std::vector<std::int32_t> owners;
          for (std::size_t k = 0; k + 1 < pts.size(); ++k)
            owners.push_back(add(ElementClass::LineSegment, series_color_id(i), {}, group));
          painter_->stroke_polyline(pts, kLineThickness, line_style_pattern(spec_.style.line_style_ids.at(i)),
                                    series_rgb(i), owners);
          if (dots) {
            const auto markers = add(ElementClass::DotMarkerGroup, series_color_id(i));
            for (const auto& p : pts) painter_->fill_circle(p.x + 0.5, p.y + 0.5, radius, series_rgb(i), markers);
          }
        }
        break;
      }
      case FigureType::Pie: {
        const double radius = std::min(plot.w, plot.h) / 2.0 - 2.0;
        std::vector<double> fractions;
        std::vector<Rgb> rgbs;
        std::vector<std::int32_t> owners;
        for (std::size_t i = 0; i < n; ++i) {
          fractions.push_back(element_value(spec_.series[i]));
          rgbs.push_back(series_rgb(i));
          owners.push_back(add(ElementClass::PieSlice, series_color_id(i)));
        }
        painter_->fill_pie(plot.x + plot.w / 2.0, plot.y + plot.h / 2.0, radius, fractions, rgbs, owners);
        break;
      }
    }
  }

  double marker_radius() const { return 2.0 + 0.5 * spec_.style.font_size_index; }

  LegendEntryLayout measure_legend() const {
    LegendEntryLayout m;
    m.token_height = std::max(6, lh_ - 6);
    m.token_width = is_line(spec_.type) ? kLineTokenWidth : m.token_height;
    if (spec_.type == FigureType::DotLine)
      m.token_height = std::max(m.token_height, static_cast<int>(std::ceil(2 * marker_radius())) + 1);
    m.entry_height = std::max(lh_, m.token_height) + 2;
    for (const auto* c : series_colors_) m.entry_widths.push_back(m.token_width + 4 + font_.text_width(c->name));
    return m;
  }

  // Entry origins relative to the legend's top-left corner. Horizontal legends
  // flow into extra rows when `max_width` > 0 and a row would overflow it.
  std::vector<std::pair<int, int>> legend_origins(LegendOrientation o, int max_width, LegendSize* size) const {
    const auto& m = legend_layout_;
    std::vector<std::pair<int, int>> pos;
    int x = kLegendPad, y = kLegendPad, widest = 0;
    for (std::size_t i = 0; i < m.entry_widths.size(); ++i) {
      const int w = m.entry_widths[i];
      if (o == LegendOrientation::Vertical) {
        if (i > 0) y += m.entry_height;
      } else if (i > 0) {
        if (max_width > 0 && x + kLegendGap + w + kLegendPad > max_width) {
          x = kLegendPad;
          y += m.entry_height;
        } else {
          x += kLegendGap;
        }
      }
      pos.emplace_back(x, y);
      widest = std::max(widest, x + w);
      if (o == LegendOrientation::Horizontal) x += w;
    }
    if (size) *size = {widest + kLegendPad, y + m.entry_height + kLegendPad};
    return pos;
  }

  LegendSize legend_size(LegendOrientation o, int max_width) const {
    LegendSize s;
    legend_origins(o, max_width, &s);
    return s;
  }

  void draw_legend(const LegendPlacement& placement) {
    const auto& m = legend_layout_;
    const Rect& r = placement.rect;
    const auto origins = legend_origins(placement.orientation, placement.side == LegendSide::Below ? r.w : 0, nullptr);
    painter_->fill_rect(r, kWhite, Painter::kNoOwner);
    painter_->stroke_rect(r, kLegendFrameColor, Painter::kNoOwner);
    for (std::size_t i = 0; i < origins.size(); ++i) {
      const int ex = r.x + origins[i].first, ey = r.y + origins[i].second;
      const int ty = ey + (m.entry_height - m.token_height) / 2;
      const auto token = add(ElementClass::LegendToken, series_color_id(i));
      if (is_line(spec_.type)) {
        const double cy = ty + m.token_height / 2;
        const std::array<PointF, 2> seg{PointF{static_cast<double>(ex), cy},
                                        PointF{static_cast<double>(ex + m.token_width - 1), cy}};
        const std::array<std::int32_t, 1> owner{token};
        painter_->stroke_polyline(seg, kLineThickness, line_style_pattern(spec_.style.line_style_ids.at(i)),
                                  series_rgb(i), owner);
        if (spec_.type == FigureType::DotLine)
          painter_->fill_circle(ex + m.token_width / 2.0, cy + 0.5, marker_radius(), series_rgb(i), token);
      } else {
        painter_->fill_rect({ex, ty, m.token_width, m.token_height}, series_rgb(i), token);
      }
      const std::string& name = series_colors_[i]->name;
      painter_->draw_text(ex + m.token_width + 4, ey + (m.entry_height - lh_) / 2, name, font_, kInkColor,
                          add(ElementClass::LegendLabel, series_color_id(i), name));
    }
  }

  Rendering finish(const LegendPlacement& placement) {
    auto owned = painter_->owned_boxes(elements_.size());
    // Groups take the union of their segments.
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const int parent = elements_[i].parent;
      if (parent >= 0 && owned[i]) {
        auto& p = owned[static_cast<std::size_t>(parent)];
        p = p ? united(*p, *owned[i]) : *owned[i];
      }
    }
    Rendering out;
    out.legend = placement;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const auto& e = elements_[i];
      if (e.cls == ElementClass::LineSegment && !options_.per_segment_boxes) continue;
      if (!owned[i]) {
        if (is_data_element(e.cls) && e.cls != ElementClass::LineSegment)
          throw RenderError("element fully occluded: " + std::string(to_string(e.cls)));
        if (e.cls == ElementClass::LegendLabel) throw RenderError("legend label not drawn");
        continue;
      }
      const Rect& b = *owned[i];
      out.boxes.push_back({e.cls, e.color_id, b.x, b.y, b.w, b.h, e.text});
    }
    out.canvas = painter_->take_canvas();
    return out;
  }

  const FigureSpec& spec_;
  std::span<const ColorEntry> colors_;
  const BitmapFont& font_;
  RenderOptions options_;
  int width_ = 0, height_ = 0, lh_ = 0;
  std::vector<const ColorEntry*> series_colors_;
  LegendEntryLayout legend_layout_;

  std::optional<Painter> painter_;
  std::vector<Element> elements_;
  std::int32_t data_begin_ = 0, data_end_ = 0;
  std::pair<double, double> x_domain_{0, 1}, y_domain_{0, 1};
  int inset_ = 0;
};

}  // namespace

std::string_view to_string(ElementClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<ElementClass> element_class_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (kClassNames[i] == s) return static_cast<ElementClass>(i);
  return std::nullopt;
}

Rendering render_raster(const FigureSpec& spec, std::span<const ColorEntry> colors, const FontSet& fonts,
                        const RenderOptions& options) {
  if (spec.series.empty()) throw RenderError("figure has no series");
  if (spec.style.font_size_index < 0 || spec.style.font_size_index >= static_cast<int>(fonts.size_count()))
    throw RenderError("font size index out of range");
  if (options.base_height < 64) throw RenderError("base height too small");
  FigureRenderer renderer(spec, colors, fonts, options);
  if (spec.style.legend_inside)
    if (auto r = renderer.run(LegendSide::Inside)) return std::move(*r);
  return std::move(*renderer.run(spec.style.legend_right ? LegendSide::Right : LegendSide::Below));
}

RenderResult render(const FigureSpec& spec, std::span<const ColorEntry> colors, const FontSet& fonts,
                    const RenderOptions& options) {
  Rendering r = render_raster(spec, colors, fonts, options);
  RenderResult out;
  out.width = r.canvas.width();
  out.height = r.canvas.height();
  out.png = encode_png(r.canvas);
  out.boxes = std::move(r.boxes);
  out.legend = r.legend;
  return out;
}

}  // namespace figureqa
