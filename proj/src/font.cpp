#include "figureqa/font.hpp"

#include <string>

#include "assets.hpp"

namespace figureqa {

namespace {

constexpr char kFirstGlyph = 0x20;
constexpr char kLastGlyph = 0x7E;
constexpr int kGlyphCount = kLastGlyph - kFirstGlyph + 1;

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() {
    if (pos_ >= data_.size()) throw FontError("font asset truncated");
    return data_[pos_++];
  }
  int i8() { return static_cast<std::int8_t>(u8()); }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace

const Glyph& BitmapFont::glyph(char c) const {
  if (c < kFirstGlyph || c > kLastGlyph) c = '?';
  return glyphs_[static_cast<std::size_t>(c - kFirstGlyph)];
}

int BitmapFont::text_width(std::string_view text) const {
  int w = 0;
  for (char c : text) w += glyph(c).advance;
  return w;
}

FontSet FontSet::parse(std::span<const std::uint8_t> blob) {
  Reader in(blob);
  if (in.u8() != 'F' || in.u8() != 'Q' || in.u8() != 'A' || in.u8() != 'F') throw FontError("bad font magic");
  if (const int version = in.u8(); version != 1) throw FontError("unsupported font version " + std::to_string(version));
  FontSet set;
  const int count = in.u8();
  for (int s = 0; s < count; ++s) {
    BitmapFont font;
    font.pixel_size_ = in.u8();
    font.line_height_ = in.u8();
    font.ascent_ = in.u8();
    font.glyphs_.resize(kGlyphCount);
    for (auto& g : font.glyphs_) {
      g.advance = in.u8();
      g.width = in.u8();
      g.height = in.u8();
      g.x_offset = in.i8();
      g.y_offset = in.i8();
      const int n = g.width * g.height;
      std::vector<std::uint8_t> packed((n + 7) / 8);
      for (auto& b : packed) b = in.u8();
      g.bits.resize(n);
      for (int k = 0; k < n; ++k) g.bits[k] = (packed[k >> 3] >> (7 - (k & 7))) & 1;
    }
    set.sizes_.push_back(std::move(font));
  }
  if (!in.done()) throw FontError("trailing bytes in font asset");
  return set;
}

const FontSet& FontSet::embedded() {
  static const FontSet set = parse(assets::font());
  return set;
}

}  // namespace figureqa
