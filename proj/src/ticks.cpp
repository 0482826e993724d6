#include "figureqa/ticks.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace figureqa {

namespace {

double pow10i(int k) {
  double p = 1.0;
  for (int i = 0; i < std::abs(k); ++i) p *= 10.0;
  return p;
}

// value = units * 10^k, rounded once.
double scaled(long long units, int k) {
  return k >= 0 ? static_cast<double>(units) * pow10i(k) : static_cast<double>(units) / pow10i(-k);
}

long long snapped_floor(double q) {
  const double r = std::round(q);
  return static_cast<long long>(std::abs(q - r) < 1e-9 ? r : std::floor(q));
}

long long snapped_ceil(double q) {
  const double r = std::round(q);
  return static_cast<long long>(std::abs(q - r) < 1e-9 ? r : std::ceil(q));
}

}  // namespace

TickSet compute_ticks(double data_min, double data_max, int max_ticks) {
  if (!(data_min <= data_max)) throw std::invalid_argument("compute_ticks: data_min > data_max");
  if (max_ticks < 2) throw std::invalid_argument("compute_ticks: need room for at least 2 ticks");
  if (data_min == data_max) {
    data_min -= 1.0;
    data_max += 1.0;
  }
  const double range = data_max - data_min;
  const int k_start = static_cast<int>(std::floor(std::log10(range / max_ticks))) - 1;
  for (int k = k_start;; ++k) {
    for (int m : {1, 2, 5}) {
      const double step = scaled(m, k);
      const long long first = snapped_floor(data_min / step);
      const long long last = snapped_ceil(data_max / step);
      if (last - first + 1 > max_ticks) continue;
      TickSet ticks;
      ticks.step = step;
      ticks.decimals = k < 0 ? -k : 0;
      for (long long i = first; i <= last; ++i) ticks.values.push_back(scaled(i * m, k));
      return ticks;
    }
  }
}

std::string format_tick(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace figureqa
