#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "figureqa/data_synth.hpp"
#include "figureqa/legend.hpp"
#include "figureqa/png.hpp"
#include "figureqa/renderer.hpp"
#include "figureqa/validate.hpp"
#include "support.hpp"

using namespace figureqa;

namespace {

const std::vector<ColorEntry>& colors() {
  static const auto t = build_color_table();
  return t;
}

const ColorScheme& scheme() {
  static const ColorScheme s = split_colors(colors(), 31);
  return s;
}

struct Extent {
  int x0 = 1 << 30, y0 = 1 << 30, x1 = -1, y1 = -1;
  void add(int x, int y) { x0 = std::min(x0, x), y0 = std::min(y0, y), x1 = std::max(x1, x), y1 = std::max(y1, y); }
};

bool inside(const BoundingBox& b, int x, int y) { return x >= b.x && y >= b.y && x < b.x + b.w && y < b.y + b.h; }

// Scans the decoded pixels on its own: every series-colored pixel must fall in
// a box of that color, and every data box edge must touch its color.
int scan_failures(const Canvas& img, const std::vector<BoundingBox>& boxes, const FigureSpec& spec) {
  int failures = 0;
  std::map<int, Rgb> series_rgb;
  for (const auto& s : spec.series) series_rgb[s.color_id] = colors()[s.color_id].rgb;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      for (const auto& [id, rgb] : series_rgb) {
        if (!(img.at(x, y) == rgb)) continue;
        const bool covered = std::any_of(boxes.begin(), boxes.end(), [&](const BoundingBox& b) {
          return is_data_element(b.element_class) && b.color_id == id && inside(b, x, y);
        });
        failures += !covered;
      }
  for (const auto& b : boxes) {
    if (b.x < 0 || b.y < 0 || b.w <= 0 || b.h <= 0 || b.x + b.w > img.width() || b.y + b.h > img.height()) {
      ++failures;
      continue;
    }
    if (!is_data_element(b.element_class)) continue;
    if (!b.color_id) {
      ++failures;
      continue;
    }
    const Rgb rgb = colors()[*b.color_id].rgb;
    Extent e;
    for (int y = b.y; y < b.y + b.h; ++y)
      for (int x = b.x; x < b.x + b.w; ++x)
        if (img.at(x, y) == rgb) e.add(x, y);
    if (e.x0 != b.x || e.y0 != b.y || e.x1 != b.x + b.w - 1 || e.y1 != b.y + b.h - 1) ++failures;
  }
  return failures;
}

std::vector<int> pick(ColorSubset subset, int n) {
  const auto ids = scheme().ids(subset);
  return {ids.begin(), ids.begin() + n};
}

}  // namespace

TEST_CASE("rendering twice gives identical bytes") {
  for (auto type : kFigureTypes) {
    const auto spec = sample_figure(type, 4, scheme(), 10);
    const auto a = render(spec, colors());
    const auto b = render(spec, colors());
    CHECK(a.png == b.png);
    CHECK(a.boxes == b.boxes);
  }
}

TEST_CASE("bars appear left to right in series order") {
  auto spec = testing::scalar_figure(FigureType::VerticalBar, {9.5, 2.0, 3.0, 1.2}, pick(ColorSubset::A, 4));
  spec.style.width_to_height = 1.5;
  const auto r = render_raster(spec, colors(), FontSet::embedded());
  // Leftmost column of each bar color, found from pixels alone.
  std::vector<int> left;
  for (const auto& s : spec.series) {
    Extent e;
    for (int y = 0; y < r.canvas.height(); ++y)
      for (int x = 0; x < r.canvas.width(); ++x)
        if (r.canvas.at(x, y) == colors()[s.color_id].rgb) e.add(x, y);
    left.push_back(e.x0);
  }
  std::vector<BoundingBox> bars;
  for (const auto& b : r.boxes)
    if (b.element_class == ElementClass::Bar) bars.push_back(b);
  REQUIRE(bars.size() == 4);
  for (std::size_t i = 0; i + 1 < bars.size(); ++i) {
    CHECK(bars[i].x < bars[i + 1].x);
    CHECK(bars[i].color_id == spec.series[i].color_id);
  }
  // The legend token of the leftmost bar may sit further left, so compare bars only.
  CHECK(bars[0].h > bars[1].h);
  CHECK(scan_failures(r.canvas, r.boxes, spec) == 0);
}

TEST_CASE("pixel containment and tightness over sampled figures") {
  for (auto type : kFigureTypes) {
    for (int id = 0; id < 12; ++id) {
      for (bool per_segment : {false, true}) {
        const auto spec = sample_figure(type, id, scheme(), 123);
        RenderOptions opts;
        opts.per_segment_boxes = per_segment;
        RenderResult r;
        try {
          r = render(spec, colors(), FontSet::embedded(), opts);
        } catch (const RenderError&) {
          continue;  // the corpus generator resamples these
        }
        const Canvas img = decode_png(r.png);
        INFO(to_string(type) << " id " << id);
        CHECK(img.width() == r.width);
        CHECK(img.height() == r.height);
        CHECK(scan_failures(img, r.boxes, spec) == 0);

        std::vector<int> ids;
        for (const auto& s : spec.series) ids.push_back(s.color_id);
        CHECK(box_fidelity_failures(img, r.boxes, colors(), ids) == 0);
      }
    }
  }
}

TEST_CASE("canvas geometry and legend completeness") {
  for (auto type : kFigureTypes) {
    for (int id = 0; id < 20; ++id) {
      const auto spec = sample_figure(type, id, scheme(), 55);
      RenderResult r;
      try {
        r = render(spec, colors());
      } catch (const RenderError&) {
        continue;
      }
      CHECK(r.height == 256);
      const double ratio = static_cast<double>(r.width) / r.height;
      CHECK(ratio >= 1.0);
      CHECK(ratio <= 2.0);

      std::map<int, int> tokens, labels;
      for (const auto& b : r.boxes) {
        if (b.element_class == ElementClass::LegendToken) ++tokens[*b.color_id];
        if (b.element_class == ElementClass::LegendLabel) {
          ++labels[*b.color_id];
          CHECK(b.text == colors()[*b.color_id].name);
        }
      }
      CHECK(tokens.size() == spec.series.size());
      CHECK(labels.size() == spec.series.size());
      for (const auto& s : spec.series) {
        CHECK(tokens[s.color_id] == 1);
        CHECK(labels[s.color_id] == 1);
      }
      // Distinct rgb per series.
      std::set<std::tuple<int, int, int>> rgbs;
      for (const auto& s : spec.series) {
        const Rgb c = colors()[s.color_id].rgb;
        rgbs.insert({c.r, c.g, c.b});
      }
      CHECK(rgbs.size() == spec.series.size());
    }
  }
}

TEST_CASE("box classes per figure type") {
  const auto has = [](const RenderResult& r, ElementClass c) {
    return std::any_of(r.boxes.begin(), r.boxes.end(), [&](const auto& b) { return b.element_class == c; });
  };
  const auto line = render(sample_figure(FigureType::Line, 2, scheme(), 5), colors());
  CHECK(has(line, ElementClass::LineSegmentGroup));
  CHECK(has(line, ElementClass::XAxis));
  CHECK(has(line, ElementClass::TickLabel));
  CHECK(has(line, ElementClass::Title));
  CHECK_FALSE(has(line, ElementClass::LineSegment));
  const auto dots = render(sample_figure(FigureType::DotLine, 3, scheme(), 5), colors());
  CHECK(has(dots, ElementClass::DotMarkerGroup));
  const auto pie = render(sample_figure(FigureType::Pie, 4, scheme(), 5), colors());
  CHECK(has(pie, ElementClass::PieSlice));
  CHECK_FALSE(has(pie, ElementClass::XAxis));
}

TEST_CASE("legend: empty grid picks cell 0") {
  StyleParams style;
  style.legend_inside = true;
  const Rect plot{40, 20, 300, 200};
  const auto p = place_legend(style, Occupancy{}, plot, {60, 40}, {150, 14});
  CHECK(p.side == LegendSide::Inside);
  CHECK(p.cell == 0);
  CHECK(p.orientation == LegendOrientation::Vertical);
  CHECK(plot.contains(p.rect.x, p.rect.y));
}

TEST_CASE("legend: data in the left two columns pushes it right") {
  StyleParams style;
  style.legend_inside = true;
  const Rect plot{40, 20, 300, 210};
  Occupancy occ{};
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 2; ++col) occ[row * 3 + col] = 3000;
  occ[2] = 50, occ[5] = 10, occ[8] = 400;
  const auto p = place_legend(style, occ, plot, {60, 40}, {150, 14});
  REQUIRE(p.side == LegendSide::Inside);
  CHECK(p.cell % 3 == 2);
  CHECK(p.cell == 5);
  CHECK(p.rect.right() <= plot.right());
}

TEST_CASE("legend: tall legends lie down, crowded grids go outside") {
  StyleParams style;
  style.legend_inside = true;
  const Rect plot{0, 0, 300, 210};
  const auto flat = place_legend(style, Occupancy{}, plot, {60, 120}, {200, 14});
  CHECK(flat.side == LegendSide::Inside);
  CHECK(flat.orientation == LegendOrientation::Horizontal);

  Occupancy full;
  full.fill(100 * 70);
  style.legend_right = true;
  CHECK(place_legend(style, full, plot, {60, 40}, {150, 14}).side == LegendSide::Right);
}

TEST_CASE("legend outside does not overlap the axes frame") {
  StyleParams style;
  style.legend_inside = false;
  style.legend_right = false;
  CHECK(place_legend(style, Occupancy{}, Rect{0, 0, 100, 100}, {10, 10}, {10, 10}).side == LegendSide::Below);

  for (int id = 0; id < 40; ++id) {
    auto spec = sample_figure(FigureType::VerticalBar, id, scheme(), 77);
    if (spec.style.legend_inside) continue;
    Rendering r;
    try {
      r = render_raster(spec, colors(), FontSet::embedded());
    } catch (const RenderError&) {
      continue;
    }
    CHECK(r.legend.side != LegendSide::Inside);
    const auto x_axis = std::find_if(r.boxes.begin(), r.boxes.end(),
                                     [](const auto& b) { return b.element_class == ElementClass::XAxis; });
    const auto y_axis = std::find_if(r.boxes.begin(), r.boxes.end(),
                                     [](const auto& b) { return b.element_class == ElementClass::YAxis; });
    REQUIRE(x_axis != r.boxes.end());
    REQUIRE(y_axis != r.boxes.end());
    const Rect frame{y_axis->x, y_axis->y, x_axis->x + x_axis->w - y_axis->x, x_axis->y + x_axis->h - y_axis->y};
    for (const auto& b : r.boxes) {
      if (b.element_class != ElementClass::LegendToken && b.element_class != ElementClass::LegendLabel) continue;
      const bool overlap = b.x < frame.right() && frame.x < b.x + b.w && b.y < frame.bottom() && frame.y < b.y + b.h;
      CHECK_FALSE(overlap);
    }
  }
}
