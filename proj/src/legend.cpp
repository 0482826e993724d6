#include "figureqa/legend.hpp"

#include <algorithm>

namespace figureqa {

namespace {

constexpr int kInset = 3;

int anchored(int lo, int size, int cell_lo, int cell_size, int slot, int extent) {
  int pos = 0;
  if (slot == 0)
    pos = lo + kInset;
  else if (slot == 2)
    pos = lo + size - kInset - extent;
  else
    pos = cell_lo + (cell_size - extent) / 2;
  return std::clamp(pos, lo + kInset, lo + size - kInset - extent);
}

}  // namespace

Rect grid_cell(const Rect& plot, int cell) {
  const int row = cell / 3, col = cell % 3;
  const int x0 = plot.x + plot.w * col / 3, x1 = plot.x + plot.w * (col + 1) / 3;
  const int y0 = plot.y + plot.h * row / 3, y1 = plot.y + plot.h * (row + 1) / 3;
  return {x0, y0, x1 - x0, y1 - y0};
}

LegendPlacement place_legend(const StyleParams& style, const Occupancy& occupancy, const Rect& plot,
                             LegendSize vertical, LegendSize horizontal) {
  LegendPlacement outside;
  outside.side = style.legend_right ? LegendSide::Right : LegendSide::Below;
  outside.orientation = style.legend_right ? LegendOrientation::Vertical : LegendOrientation::Horizontal;
  if (!style.legend_inside) return outside;

  const int best = static_cast<int>(std::min_element(occupancy.begin(), occupancy.end()) - occupancy.begin());
  const Rect cell = grid_cell(plot, best);
  const double area = static_cast<double>(cell.w) * cell.h;
  if (area <= 0 || occupancy[best] > kMaxLegendCellOccupancy * area) return outside;

  LegendPlacement p;
  p.side = LegendSide::Inside;
  p.cell = best;
  p.orientation = vertical.height <= cell.h ? LegendOrientation::Vertical : LegendOrientation::Horizontal;
  const LegendSize size = p.orientation == LegendOrientation::Vertical ? vertical : horizontal;
  if (size.width > plot.w - 2 * kInset || size.height > plot.h - 2 * kInset) return outside;

  p.rect.w = size.width;
  p.rect.h = size.height;
  p.rect.x = anchored(plot.x, plot.w, cell.x, cell.w, best % 3, size.width);
  p.rect.y = anchored(plot.y, plot.h, cell.y, cell.h, best / 3, size.height);
  return p;
}

}  // namespace figureqa
