#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace figureqa {

struct Glyph {
  int advance = 0;
  int width = 0;
  int height = 0;
  int x_offset = 0;
  int y_offset = 0;  // from the top of the line box
  std::vector<std::uint8_t> bits;  // row-major, one byte per pixel (0/1)

  bool on(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
};

/// One size of the printable-ASCII bitmap font.
class BitmapFont {
 public:
  int pixel_size() const { return pixel_size_; }
  int line_height() const { return line_height_; }
  int ascent() const { return ascent_; }

  /// Glyph for `c`; characters outside 0x20..0x7E map to '?'.
  const Glyph& glyph(char c) const;

  /// Horizontal extent of a string laid out on one line.
  int text_width(std::string_view text) const;

 private:
  friend class FontSet;
  int pixel_size_ = 0;
  int line_height_ = 0;
  int ascent_ = 0;
  std::vector<Glyph> glyphs_;  // 95 entries, 0x20..0x7E
};

class FontError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The four font sizes. Immutable after construction, safe to share.
class FontSet {
 public:
  /// Parses the binary font asset format written by tools/make_font.py.
  static FontSet parse(std::span<const std::uint8_t> blob);

  /// The asset compiled into the library (data/font_v1.bin).
  static const FontSet& embedded();

  std::size_t size_count() const { return sizes_.size(); }
  const BitmapFont& size(int index) const { return sizes_.at(static_cast<std::size_t>(index)); }

 private:
  std::vector<BitmapFont> sizes_;
};

}  // namespace figureqa
