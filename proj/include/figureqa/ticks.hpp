#pragma once

#include <string>
#include <vector>

namespace figureqa {

struct TickSet {
  std::vector<double> values;
  double step = 0.0;
  int decimals = 0;  // digits needed to print every value exactly
};

/// Nice-number ticks (1, 2 or 5 times a power of ten) covering
/// [data_min, data_max]: the finest such step giving at most `max_ticks`
/// values. A degenerate range v..v is widened to v-1..v+1 first.
/// Throws std::invalid_argument if data_min > data_max or max_ticks < 2.
TickSet compute_ticks(double data_min, double data_max, int max_ticks);

std::string format_tick(double value, int decimals);

}  // namespace figureqa
