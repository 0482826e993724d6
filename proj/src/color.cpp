#include "figureqa/color.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "assets.hpp"
#include "figureqa/figure.hpp"
#include "figureqa/rng.hpp"

namespace figureqa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view field, int lo, int hi, std::size_t line_no) {
  field = trim(field);
  int v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || v < lo || v > hi)
    throw ConfigError("color table line " + std::to_string(line_no) + ": bad integer '" +
                      std::string(field) + "'");
  return v;
}

}  // namespace

double distance_from_white(Rgb c) {
  const double dr = 255.0 - c.r, dg = 255.0 - c.g, db = 255.0 - c.b;
  return std::sqrt(dr * dr + dg * dg + db * db);
}

std::vector<ColorEntry> parse_color_table(std::string_view text) {
  std::vector<ColorEntry> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 5)
      throw ConfigError("color table line " + std::to_string(line_no) + ": expected 5 fields");
    ColorEntry e;
    e.id = parse_int(fields[0], 0, kColorCount - 1, line_no);
    e.name = std::string(trim(fields[1]));
    e.rgb = Rgb{static_cast<std::uint8_t>(parse_int(fields[2], 0, 255, line_no)),
                static_cast<std::uint8_t>(parse_int(fields[3], 0, 255, line_no)),
                static_cast<std::uint8_t>(parse_int(fields[4], 0, 255, line_no))};
    out.push_back(std::move(e));
  }
  return out;
}

std::string_view embedded_color_table_text() {
  const auto bytes = assets::color_table();
  return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

std::vector<ColorEntry> validate_color_table(std::vector<ColorEntry> table, double threshold) {
  if (!(threshold > 0)) throw std::invalid_argument("color threshold must be positive");
  std::set<int> ids;
  std::set<std::string> names;
  std::set<std::tuple<int, int, int>> rgbs;
  std::vector<ColorEntry> kept;
  for (auto& e : table) {
    if (!ids.insert(e.id).second) throw ConfigError("duplicate color id " + std::to_string(e.id));
    if (e.name.empty() || e.name == "White" || !names.insert(e.name).second)
      throw ConfigError("invalid or duplicate color name '" + e.name + "'");
    if (!rgbs.insert({e.rgb.r, e.rgb.g, e.rgb.b}).second)
      throw ConfigError("duplicate rgb for color '" + e.name + "'");
    if (distance_from_white(e.rgb) >= threshold) kept.push_back(std::move(e));
  }
  if (kept.size() < static_cast<std::size_t>(kColorCount))
    throw ConfigError("only " + std::to_string(kept.size()) + " colors have distance >= " +
                      std::to_string(threshold) + " from white; need " + std::to_string(kColorCount));
  if (kept.size() != static_cast<std::size_t>(kColorCount))
    throw ConfigError("color table must hold exactly 100 entries");
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return kept;
}

std::vector<ColorEntry> build_color_table(double threshold) {
  return validate_color_table(parse_color_table(embedded_color_table_text()), threshold);
}

ColorSubset subset_for(FigureType type, ColorMode mode) {
  ColorSubset training = ColorSubset::A;
  switch (type) {
    case FigureType::VerticalBar: training = ColorSubset::A; break;
    case FigureType::HorizontalBar: training = ColorSubset::B; break;
    case FigureType::Line: training = ColorSubset::A; break;
    case FigureType::DotLine: training = ColorSubset::B; break;
    case FigureType::Pie: training = ColorSubset::A; break;
  }
  if (mode == ColorMode::Training) return training;
  return training == ColorSubset::A ? ColorSubset::B : ColorSubset::A;
}

std::span<const int> ColorScheme::ids_for(FigureType type) const { return ids(subset_for(type, mode)); }

bool ColorScheme::contains(ColorSubset subset, int color_id) const {
  const auto s = ids(subset);
  return std::find(s.begin(), s.end(), color_id) != s.end();
}

ColorScheme split_colors(std::span<const ColorEntry> table, std::uint64_t seed) {
  if (table.size() != static_cast<std::size_t>(kColorCount))
    throw std::invalid_argument("split_colors requires a 100-entry table");
  std::vector<int> ids;
  ids.reserve(table.size());
  for (const auto& e : table) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  Rng rng(hash64(seed, 0xC0105));
  rng.shuffle(std::span<int>(ids));

  ColorScheme scheme;
  std::copy_n(ids.begin(), kSubsetSize, scheme.subset_a.begin());
  std::copy_n(ids.begin() + kSubsetSize, kSubsetSize, scheme.subset_b.begin());
  std::sort(scheme.subset_a.begin(), scheme.subset_a.end());
  std::sort(scheme.subset_b.begin(), scheme.subset_b.end());
  return scheme;
}

std::string_view to_string(ColorMode mode) {
  return mode == ColorMode::Training ? "training" : "alternated";
}

std::optional<ColorMode> color_mode_from_string(std::string_view s) {
  if (s == "training") return ColorMode::Training;
  if (s == "alternated") return ColorMode::Alternated;
  return std::nullopt;
}

}  // namespace figureqa
