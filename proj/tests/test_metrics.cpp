#include <doctest.h>

#include <cmath>
#include <vector>

#include "figureqa/metrics.hpp"
#include "figureqa/oracle.hpp"
#include "figureqa/rng.hpp"
#include "support.hpp"

using namespace figureqa;
using testing::curve;

namespace {

// Difference of the two interpolants evaluated on a dense uniform grid.
bool dense_contact(const Series& a, const Series& b, int samples, double tol) {
  const auto& x = a.x;
  auto diff = [&](double t) {
    std::size_t i = 0;
    while (i + 2 < x.size() && t > x[i + 1]) ++i;
    const double u = (t - x[i]) / (x[i + 1] - x[i]);
    return (a.y[i] + u * (a.y[i + 1] - a.y[i])) - (b.y[i] + u * (b.y[i + 1] - b.y[i]));
  };
  double prev = diff(x.front());
  if (std::abs(prev) <= tol) return true;
  for (int s = 1; s < samples; ++s) {
    const double t = x.front() + (x.back() - x.front()) * s / (samples - 1);
    const double d = diff(t);
    if (std::abs(d) <= tol || (d > 0) != (prev > 0)) return true;
    prev = d;
  }
  return false;
}

}  // namespace

TEST_CASE("roughness by hand") {
  CHECK(roughness(std::vector<double>{0, 1, 2, 3}, std::vector<double>{0, 2, 4, 6}) == doctest::Approx(0.0));
  CHECK(roughness(std::vector<double>{0, 1, 2}, std::vector<double>{0, 1, 0}) == doctest::Approx(2.0));
  CHECK(roughness(std::vector<double>{0, 1, 2, 3}, std::vector<double>{0, 2, 2, 6}) == doctest::Approx(6.0));
  CHECK_THROWS_AS(roughness(std::vector<double>{0, 1}, std::vector<double>{0, 1}), InapplicableError);
}

TEST_CASE("area by hand") {
  CHECK(std::abs(area_under_curve(std::vector<double>{0, 1, 2}, std::vector<double>{1, 1, 1}) - 2.0) <= 1e-12);
  CHECK(area_under_curve(std::vector<double>{0, 2}, std::vector<double>{0, 2}) == doctest::Approx(2.0));
  CHECK(area_under_curve(std::vector<double>{0, 1, 3}, std::vector<double>{2, 0, 4}) == doctest::Approx(5.0));
  CHECK_THROWS_AS(area_under_curve(std::vector<double>{0}, std::vector<double>{1}), InapplicableError);
}

TEST_CASE("medians") {
  const auto odd = low_high_median(std::vector<double>{3, 1, 2});
  CHECK(odd.low == 2);
  CHECK(odd.high == 2);
  const auto even = low_high_median(std::vector<double>{4, 1, 3, 2});
  CHECK(even.low == 3);   // value 2
  CHECK(even.high == 2);  // value 3
  CHECK_THROWS_AS(low_high_median(std::vector<double>{1, 2}), InapplicableError);
}

TEST_CASE("curve comparison") {
  const auto a = curve(0, {0, 1}, {1, 1});
  const auto b = curve(1, {0, 1}, {2, 3});
  CHECK(curve_compare(a, b) == CurveOrder::Less);
  CHECK(curve_compare(b, a) == CurveOrder::Greater);
  CHECK(curve_compare(curve(0, {0, 1}, {1, 3}), curve(1, {0, 1}, {2, 2})) == CurveOrder::Neither);
  CHECK(curve_compare(a, a) == CurveOrder::Neither);
}

TEST_CASE("intersection examples") {
  CHECK(curves_intersect(curve(0, {0, 1}, {0, 1}), curve(1, {0, 1}, {1, 0})));
  CHECK_FALSE(curves_intersect(curve(0, {0, 1, 2}, {0, 1, 2}), curve(1, {0, 1, 2}, {1, 2, 3})));
  CHECK(curves_intersect(curve(0, {0, 1, 2}, {1, 2, 5}), curve(1, {0, 1, 2}, {0, 2, 6})));
  CHECK(curves_intersect(curve(0, {0, 1}, {1, 0}), curve(1, {0, 1}, {1, 3})));
}

TEST_CASE("roughness is shift invariant and scales linearly") {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform_int(3, 20);
    std::vector<double> x(n), y(n);
    double t = rng.uniform(-10, 10);
    for (int i = 0; i < n; ++i) x[i] = (t += rng.uniform(0.1, 3)), y[i] = rng.uniform(-50, 50);
    const double r = roughness(x, y);
    const double shift = rng.uniform(-100, 100), scale = rng.uniform(0.01, 20);
    std::vector<double> shifted(y), scaled(y);
    for (auto& v : shifted) v += shift;
    for (auto& v : scaled) v *= scale;
    CHECK(roughness(x, shifted) == doctest::Approx(r).epsilon(1e-9));
    CHECK(roughness(x, scaled) == doctest::Approx(scale * r).epsilon(1e-9));
    CHECK(r >= 0);
  }
}

TEST_CASE("collinear series have no roughness") {
  Rng rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform_int(3, 20);
    const double slope = rng.uniform(-5, 5), icpt = rng.uniform(-10, 10), x0 = rng.uniform(0, 50);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = x0 + i * 1.5, y[i] = icpt + slope * (i * 1.5);
    CHECK(roughness(x, y) <= 1e-9);
  }
}

TEST_CASE("intersection agrees with dense sampling on random pairs") {
  Rng rng(2718);
  int crossings = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform_int(2, 8);
    std::vector<double> x(n), ya(n), yb(n);
    for (int i = 0; i < n; ++i) x[i] = i * rng.uniform(0.5, 2.0) + (i ? x[i - 1] : 0);
    const double offset = rng.uniform(-4, 4);
    for (int i = 0; i < n; ++i) ya[i] = rng.uniform(0, 5), yb[i] = rng.uniform(0, 5) + offset;
    const auto a = curve(0, x, ya), b = curve(1, x, yb);
    const bool got = curves_intersect(a, b);
    crossings += got;
    CHECK(got == dense_contact(a, b, 10000, 1e-9));
  }
  CHECK(crossings > 100);
  CHECK(crossings < 900);
}

TEST_CASE("oracle helpers match the engine") {
  const auto s = curve(0, {0, 1, 3}, {2, 0, 4});
  CHECK(oracle::area_by_decomposition(s) == doctest::Approx(5.0));
  CHECK(oracle::roughness_by_slopes(curve(0, {0, 1, 2, 3}, {0, 2, 2, 6})) == doctest::Approx(6.0));
}

TEST_CASE("pairwise_distinct") {
  CHECK(pairwise_distinct(std::vector<double>{1, 2, 3}));
  CHECK_FALSE(pairwise_distinct(std::vector<double>{1, 2, 1 + 1e-9}));
}
