#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace figureqa::assets {

extern const std::uint8_t color_table_v1[];
extern const std::size_t color_table_v1_size;
extern const std::uint8_t font_v1[];
extern const std::size_t font_v1_size;

inline std::span<const std::uint8_t> color_table() { return {color_table_v1, color_table_v1_size}; }
inline std::span<const std::uint8_t> font() { return {font_v1, font_v1_size}; }

}  // namespace figureqa::assets
