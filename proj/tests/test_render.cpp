#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "rootfp/render.hpp"

using namespace rootfp;

TEST_CASE("format names parse") {
  CHECK(format_from_string("svg") == Format::svg);
  CHECK(format_from_string("ascii") == Format::ascii);
  CHECK(format_from_string("dot") == Format::dot);
  CHECK(format_from_string("json") == Format::json);
  CHECK(!format_from_string("png").has_value());
  CHECK(!format_from_string("").has_value());
}

TEST_CASE("renders are deterministic byte for byte") {
  auto e7 = RootSystem::build(Family::E, 7);
  auto e6 = RootSystem::build(Family::E, 6);
  auto same = [](const std::string& a, const std::string& b) {
    CHECK(a == b);
    CHECK(!a.empty());
  };
  for (auto fmt : {Format::svg, Format::ascii, Format::json}) {
    same(render_cube_corner(fmt, std::nullopt), render_cube_corner(fmt, std::nullopt));
    same(render_cube_corner(fmt, F3Code{0, 2, 1}),
         render_cube_corner(fmt, F3Code{0, 2, 1}));
    same(render_openmap7(fmt), render_openmap7(fmt));
    same(render_square(fmt, std::nullopt), render_square(fmt, std::nullopt));
    same(render_square(fmt, FpVec{1, 1, 1, 2, 2}),
         render_square(fmt, FpVec{1, 1, 1, 2, 2}));
  }
  for (auto fmt : {Format::svg, Format::ascii, Format::dot, Format::json}) {
    same(render_hasse(fmt, e7, 5), render_hasse(fmt, e7, 5));
    same(render_dynkin(fmt, e7), render_dynkin(fmt, e7));
    same(render_dynkin(fmt, e6), render_dynkin(fmt, e6));
  }
  for (auto fmt : {Format::dot, Format::json}) {
    same(render_tgraph(fmt, 2), render_tgraph(fmt, 2));
  }
}

TEST_CASE("svg outputs are svg documents") {
  CHECK(render_cube_corner(Format::svg, std::nullopt).find("<svg") == 0);
  auto e7 = RootSystem::build(Family::E, 7);
  CHECK(render_hasse(Format::svg, e7, 4).find("<svg") == 0);
  CHECK(render_dynkin(Format::svg, e7).find("<svg") == 0);
}

TEST_CASE("dot outputs are graphviz documents") {
  auto e7 = RootSystem::build(Family::E, 7);
  CHECK(render_hasse(Format::dot, e7, 4).find("digraph") == 0);
  CHECK(render_dynkin(Format::dot, e7).find("graph") == 0);
  CHECK(render_tgraph(Format::dot, 2).find("graph") == 0);
}

TEST_CASE("json outputs parse and carry the right counts") {
  using nlohmann::json;
  auto e7 = RootSystem::build(Family::E, 7);

  auto cube = json::parse(render_cube_corner(Format::json, std::nullopt));
  CHECK(cube["cells"].size() == 27);

  auto square = json::parse(render_square(Format::json, std::nullopt));
  CHECK(square["cells"].size() == 16);

  auto hasse = json::parse(render_hasse(Format::json, e7, 4));
  CHECK(hasse["vertices"].size() == 6);

  auto open7 = json::parse(render_openmap7(Format::json));
  CHECK(open7["cells"].size() == 27);

  auto dynkin = json::parse(render_dynkin(Format::json, e7));
  CHECK(dynkin["edges"].size() == 6);

  auto tg2 = json::parse(render_tgraph(Format::json, 2));
  CHECK(tg2["vertices"] == 64);
  CHECK(tg2["edges"].size() == 64 * 27 / 2);

  auto tg3 = json::parse(render_tgraph(Format::json, 3));
  CHECK(tg3["vertices"] == 243);
}

TEST_CASE("unsupported target/format combinations are rejected") {
  auto e7 = RootSystem::build(Family::E, 7);
  CHECK_THROWS_AS(render_cube_corner(Format::dot, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_square(Format::dot, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_tgraph(Format::svg, 2), std::invalid_argument);
  CHECK_THROWS_AS(render_tgraph(Format::ascii, 3), std::invalid_argument);
}
