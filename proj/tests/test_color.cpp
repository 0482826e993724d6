#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "figureqa/color.hpp"
#include "figureqa/figure.hpp"

using namespace figureqa;

TEST_CASE("color table has 100 usable entries and no white") {
  const auto table = build_color_table(100.0);
  REQUIRE(table.size() == 100);
  std::set<std::string> names;
  std::set<int> ids;
  for (const auto& c : table) {
    CHECK(c.name != "White");
    CHECK(distance_from_white(c.rgb) >= 100.0);
    names.insert(c.name);
    ids.insert(c.id);
  }
  CHECK(names.size() == 100);
  CHECK(ids.size() == 100);
  CHECK(*ids.begin() == 0);
  CHECK(*ids.rbegin() == 99);
}

TEST_CASE("Midnight Blue is present and dark") {
  const auto table = build_color_table();
  const auto it = std::find_if(table.begin(), table.end(), [](const auto& c) { return c.name == "Midnight Blue"; });
  REQUIRE(it != table.end());
  CHECK(distance_from_white(it->rgb) > 300.0);
}

TEST_CASE("a threshold almost nothing passes is a configuration error") {
  // Count independently how many entries reach 450 from white.
  const auto table = parse_color_table(embedded_color_table_text());
  int passing = 0;
  for (const auto& c : table) {
    const double d = std::sqrt(std::pow(255.0 - c.rgb.r, 2) + std::pow(255.0 - c.rgb.g, 2) +
                               std::pow(255.0 - c.rgb.b, 2));
    if (d >= 450.0) ++passing;
  }
  CHECK(passing < 100);
  CHECK_THROWS_AS(build_color_table(450.0), ConfigError);
}

TEST_CASE("table validation rejects broken tables") {
  auto table = build_color_table();
  SUBCASE("duplicate rgb") {
    table[1].rgb = table[0].rgb;
    CHECK_THROWS_AS(validate_color_table(table, 100.0), ConfigError);
  }
  SUBCASE("duplicate name") {
    table[1].name = table[0].name;
    CHECK_THROWS_AS(validate_color_table(table, 100.0), ConfigError);
  }
  SUBCASE("too few entries") {
    table.pop_back();
    CHECK_THROWS_AS(validate_color_table(table, 100.0), ConfigError);
  }
}

TEST_CASE("parse_color_table skips comments and rejects junk") {
  const auto t = parse_color_table("# header\n\n0,Black,0,0,0\n1,Navy,0,0,128\n");
  REQUIRE(t.size() == 2);
  CHECK(t[1].name == "Navy");
  CHECK(t[1].rgb == Rgb{0, 0, 128});
  CHECK_THROWS_AS(parse_color_table("0,Black,0,0\n"), ConfigError);
  CHECK_THROWS_AS(parse_color_table("0,Black,0,0,300\n"), ConfigError);
}

TEST_CASE("split_colors is a deterministic disjoint halving") {
  const auto table = build_color_table();
  const auto a = split_colors(table, 42);
  const auto b = split_colors(table, 42);
  CHECK(a.subset_a == b.subset_a);
  CHECK(a.subset_b == b.subset_b);

  std::set<int> all(a.subset_a.begin(), a.subset_a.end());
  all.insert(a.subset_b.begin(), a.subset_b.end());
  CHECK(all.size() == 100);
  for (int id : a.subset_a) CHECK_FALSE(a.contains(ColorSubset::B, id));

  const auto s1 = split_colors(table, 1);
  const auto s2 = split_colors(table, 2);
  CHECK(s1.subset_a != s2.subset_a);
}

TEST_CASE("subset assignment per figure type and its swap") {
  using enum FigureType;
  CHECK(subset_for(VerticalBar, ColorMode::Training) == ColorSubset::A);
  CHECK(subset_for(HorizontalBar, ColorMode::Training) == ColorSubset::B);
  CHECK(subset_for(Line, ColorMode::Training) == ColorSubset::A);
  CHECK(subset_for(DotLine, ColorMode::Training) == ColorSubset::B);
  CHECK(subset_for(Pie, ColorMode::Training) == ColorSubset::A);
  for (auto t : kFigureTypes)
    CHECK(subset_for(t, ColorMode::Alternated) != subset_for(t, ColorMode::Training));
}
