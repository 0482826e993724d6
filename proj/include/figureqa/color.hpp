#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace figureqa {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};

double distance_from_white(Rgb c);

struct ColorEntry {
  int id = 0;
  std::string name;
  Rgb rgb;
  friend bool operator==(const ColorEntry&, const ColorEntry&) = default;
};

inline constexpr int kColorCount = 100;
inline constexpr int kSubsetSize = kColorCount / 2;
inline constexpr double kDefaultColorThreshold = 100.0;
inline constexpr std::string_view kColorTableVersion = "v1";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `id,name,r,g,b` lines; blank lines and `#` comments are skipped.
std::vector<ColorEntry> parse_color_table(std::string_view text);

/// The frozen table compiled into the library (data/colors_v1.csv).
std::string_view embedded_color_table_text();

/// Loads the embedded table and checks every entry against `threshold` and the
/// table invariants. Throws ConfigError when fewer than 100 entries qualify.
std::vector<ColorEntry> build_color_table(double threshold = kDefaultColorThreshold);

/// Same checks applied to an arbitrary table (e.g. one loaded from disk).
std::vector<ColorEntry> validate_color_table(std::vector<ColorEntry> table, double threshold);

enum class ColorMode { Training, Alternated };
enum class ColorSubset { A, B };

enum class FigureType;

/// Disjoint 50/50 partition of the color ids, plus the mode that decides
/// which half each figure type draws from.
struct ColorScheme {
  std::array<int, kSubsetSize> subset_a{};
  std::array<int, kSubsetSize> subset_b{};
  ColorMode mode = ColorMode::Training;

  ColorScheme with_mode(ColorMode m) const {
    ColorScheme s = *this;
    s.mode = m;
    return s;
  }
  std::span<const int> ids(ColorSubset subset) const {
    return subset == ColorSubset::A ? std::span<const int>(subset_a) : std::span<const int>(subset_b);
  }
  std::span<const int> ids_for(FigureType type) const;
  bool contains(ColorSubset subset, int color_id) const;
};

/// Subset a figure type draws from: training assignment VBar:A HBar:B Line:A
/// DotLine:B Pie:A, swapped for the alternated mode.
ColorSubset subset_for(FigureType type, ColorMode mode);

ColorScheme split_colors(std::span<const ColorEntry> table, std::uint64_t seed);

std::string_view to_string(ColorMode mode);
std::optional<ColorMode> color_mode_from_string(std::string_view s);

}  // namespace figureqa
