#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "figureqa/color.hpp"

namespace figureqa {

/// Row-major 8-bit RGB raster, initialized to white.
class Canvas {
 public:
  Canvas() = default;
  Canvas(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("canvas dimensions must be positive");
    pixels_.assign(static_cast<std::size_t>(width) * height * 3, 255);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  Rgb at(int x, int y) const {
    const auto* p = &pixels_[index(x, y)];
    return {p[0], p[1], p[2]};
  }
  void set(int x, int y, Rgb c) {
    auto* p = &pixels_[index(x, y)];
    p[0] = c.r, p[1] = c.g, p[2] = c.b;
  }

  const std::vector<std::uint8_t>& bytes() const { return pixels_; }
  std::vector<std::uint8_t>& bytes() { return pixels_; }

  friend bool operator==(const Canvas&, const Canvas&) = default;

 private:
  std::size_t index(int x, int y) const { return (static_cast<std::size_t>(y) * width_ + x) * 3; }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace figureqa
