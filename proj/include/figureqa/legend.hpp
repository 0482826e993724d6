#pragma once

#include <array>

#include "figureqa/figure.hpp"
#include "figureqa/painter.hpp"

namespace figureqa {

/// Data pixels per cell of a 3x3 grid over the plot area; index = row * 3 + column.
using Occupancy = std::array<int, 9>;

enum class LegendSide { Inside, Right, Below };
enum class LegendOrientation { Vertical, Horizontal };

struct LegendSize {
  int width = 0;
  int height = 0;
};

struct LegendPlacement {
  LegendSide side = LegendSide::Right;
  int cell = -1;  // 0..8 when inside
  LegendOrientation orientation = LegendOrientation::Vertical;
  Rect rect;  // set for inside placements only
};

/// Cells holding more than this fraction of data pixels never receive the legend.
inline constexpr double kMaxLegendCellOccupancy = 0.35;

Rect grid_cell(const Rect& plot, int cell);

/// Picks the legend position. Inside placements take the least-occupied cell
/// (lowest index on ties), stack vertically when that fits the cell height and
/// horizontally otherwise, and are anchored toward the cell's side of the plot.
/// Falls back to outside (right or below, from the style) when the best cell is
/// too crowded or the legend does not fit within the plot area.
LegendPlacement place_legend(const StyleParams& style, const Occupancy& occupancy, const Rect& plot,
                             LegendSize vertical, LegendSize horizontal);

}  // namespace figureqa
