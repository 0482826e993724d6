#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "figureqa/canvas.hpp"

namespace figureqa {

class PngError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 8-bit RGB, non-interlaced, filter type None on every row, zlib level 6.
/// Output bytes depend only on the canvas contents.
std::vector<std::uint8_t> encode_png(const Canvas& canvas);

/// Decodes any PNG libpng understands into 8-bit RGB (alpha is composited
/// onto white). Throws PngError on malformed input.
Canvas decode_png(std::span<const std::uint8_t> bytes);

}  // namespace figureqa
