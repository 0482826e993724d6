#include <doctest.h>

#include <png.h>

#include <cmath>
#include <vector>

#include "figureqa/png.hpp"
#include "figureqa/ticks.hpp"

using namespace figureqa;

namespace {

// Brute force: try every m * 10^k step from fine to coarse and keep the
// first whose snapped tick run covering [lo, hi] has at most max_ticks values.
std::vector<double> enumerate_ticks(double lo, double hi, int max_ticks) {
  if (lo == hi) lo -= 1, hi += 1;
  for (int k = -12; k <= 12; ++k) {
    for (double m : {1.0, 2.0, 5.0}) {
      const double step = m * std::pow(10.0, k);
      const long first = static_cast<long>(std::floor(lo / step + 1e-9));
      const long last = static_cast<long>(std::ceil(hi / step - 1e-9));
      if (last - first + 1 > max_ticks || last - first + 1 > 10000) continue;
      std::vector<double> out;
      for (long i = first; i <= last; ++i) out.push_back(static_cast<double>(i) * step);
      return out;
    }
  }
  return {};
}

void check_against_oracle(double lo, double hi, int max_ticks) {
  const auto got = compute_ticks(lo, hi, max_ticks);
  const auto want = enumerate_ticks(lo, hi, max_ticks);
  INFO(lo << ".." << hi << " max " << max_ticks);
  REQUIRE(got.values.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
  CHECK(got.values.size() >= 2);
  CHECK(static_cast<int>(got.values.size()) <= max_ticks);
  CHECK(got.values.front() <= lo + 1e-9 * std::max(1.0, std::abs(lo)));
  CHECK(got.values.back() >= hi - 1e-9 * std::max(1.0, std::abs(hi)));
}

struct Decoded {
  png_uint_32 width = 0, height = 0;
  std::vector<png_byte> rgb;
};

// Reads straight through libpng, not through the library's decoder.
Decoded libpng_read(const std::vector<std::uint8_t>& bytes) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  REQUIRE(png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()));
  image.format = PNG_FORMAT_RGB;
  Decoded d;
  d.width = image.width;
  d.height = image.height;
  d.rgb.resize(PNG_IMAGE_SIZE(image));
  REQUIRE(png_image_finish_read(&image, nullptr, d.rgb.data(), 0, nullptr));
  return d;
}

}  // namespace

TEST_CASE("ticks for 0..10 with at most 6") {
  const auto t = compute_ticks(0, 10, 6);
  CHECK(t.values == std::vector<double>{0, 2, 4, 6, 8, 10});
  check_against_oracle(0, 10, 6);
}

TEST_CASE("degenerate range widens by one each way") {
  const auto t = compute_ticks(5, 5, 6);
  CHECK(t.values.front() <= 4.0);
  CHECK(t.values.back() >= 6.0);
  CHECK(t.values.front() >= 4.0 - t.step);
  check_against_oracle(5, 5, 6);
}

TEST_CASE("ticks for 0..1 with at most 11") {
  const auto t = compute_ticks(0, 1, 11);
  REQUIRE(t.values.size() == 11);
  for (int i = 0; i <= 10; ++i) CHECK(t.values[i] == doctest::Approx(i / 10.0));
  CHECK(t.decimals == 1);
  CHECK(format_tick(t.values[3], t.decimals) == "0.3");
}

TEST_CASE("ticks agree with enumeration over assorted ranges") {
  const double cases[][2] = {{1, 10}, {3.2, 97.5}, {0.013, 0.98}, {120, 950}, {-3, 7}, {1.5, 1.6}, {1, 1000}};
  for (const auto& c : cases)
    for (int m : {4, 5, 6, 8, 11}) check_against_oracle(c[0], c[1], m);
  CHECK_THROWS_AS(compute_ticks(2, 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(compute_ticks(0, 1, 1), std::invalid_argument);
}

TEST_CASE("format_tick drops negative zero") {
  CHECK(format_tick(-0.0, 0) == "0");
  CHECK(format_tick(-1e-12, 2) == "0.00");
  CHECK(format_tick(250, 0) == "250");
}

TEST_CASE("1x1 white canvas round trip") {
  const Canvas c(1, 1);
  const auto bytes = encode_png(c);
  const auto d = libpng_read(bytes);
  CHECK(d.width == 1);
  CHECK(d.height == 1);
  CHECK(d.rgb == std::vector<png_byte>{255, 255, 255});
  CHECK(decode_png(bytes) == c);
}

TEST_CASE("encode is idempotent through decode") {
  Canvas c(37, 23);
  for (int y = 0; y < c.height(); ++y)
    for (int x = 0; x < c.width(); ++x)
      c.set(x, y, Rgb{static_cast<std::uint8_t>(x * 7), static_cast<std::uint8_t>(y * 11),
                      static_cast<std::uint8_t>((x ^ y) * 3)});
  const auto once = encode_png(c);
  CHECK(encode_png(decode_png(once)) == once);
  CHECK(encode_png(c) == once);
}

TEST_CASE("width is the first header dimension") {
  Canvas c(300, 256);
  c.set(299, 0, Rgb{1, 2, 3});
  const auto d = libpng_read(encode_png(c));
  CHECK(d.width == 300);
  CHECK(d.height == 256);
  CHECK(d.rgb[299 * 3] == 1);
  CHECK(d.rgb[299 * 3 + 2] == 3);
}

TEST_CASE("garbage is a PngError") {
  const std::vector<std::uint8_t> junk{1, 2, 3, 4, 5};
  CHECK_THROWS_AS(decode_png(junk), PngError);
}
