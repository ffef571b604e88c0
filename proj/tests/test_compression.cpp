#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rootfp/compression.hpp"
#include "rootfp/e6.hpp"
#include "rootfp/e7.hpp"

using namespace rootfp;

TEST_CASE("the standard E7 map") {
  auto rs = RootSystem::build(Family::E, 7);
  auto map = standard_e7_map();
  CHECK(check_s(rs, map).ok);
  CHECK(verify_injective(rs, map));
  std::set<FpVec> image;
  for (const auto& b : rs.positive_roots()) image.insert(map.apply(b));
  CHECK(image.size() == 63);
  CHECK(image.count(FpVec(6, 0)) == 0);
}

TEST_CASE("the standard E6 map") {
  auto rs = RootSystem::build(Family::E, 6);
  auto map = standard_e6_map();
  CHECK(check_s(rs, map).ok);
  CHECK(verify_injective(rs, map));
  std::set<FpVec> image;
  for (const auto& b : rs.all_roots()) image.insert(map.apply(b));
  auto gamma = map.space.gamma();
  CHECK(image == std::set<FpVec>(gamma.begin(), gamma.end()));
}

TEST_CASE("canonical quotients for (E7,2) and (E6,3)") {
  {
    auto rs = RootSystem::build(Family::E, 7);
    auto map = canonical_compression(rs, 2);
    REQUIRE(map.has_value());
    CHECK(map->space.dim == 6);
    CHECK(map->s[6] == FpVec{0, 1, 0, 0, 1, 0});
    CHECK(check_s(rs, *map).ok);
    CHECK(verify_injective(rs, *map));
  }
  {
    auto rs = RootSystem::build(Family::E, 6);
    auto map = canonical_compression(rs, 3);
    REQUIRE(map.has_value());
    CHECK(map->space.dim == 5);
    CHECK(map->s[5] == FpVec{1, 0, 2, 0, 1});
    CHECK(check_s(rs, *map).ok);
    CHECK(verify_injective(rs, *map));
  }
}

TEST_CASE("no quotient exists when p does not divide the determinant") {
  auto e8 = RootSystem::build(Family::E, 8);
  CHECK(!canonical_compression(e8, 2).has_value());
  CHECK(!canonical_compression(e8, 3).has_value());
  auto e7 = RootSystem::build(Family::E, 7);
  CHECK(!canonical_compression(e7, 3).has_value());  // det = 2
}

TEST_CASE("degenerate quotients collapse simple roots") {
  {
    auto rs = RootSystem::build(Family::D, 4);
    auto map = canonical_compression(rs, 2);
    REQUIRE(map.has_value());
    CHECK(map->s[0] == map->s[2]);
    CHECK(map->s[0] == map->s[3]);
    CHECK(!check_s(rs, *map).ok);
    CHECK(!verify_injective(rs, *map));
  }
  {
    auto rs = RootSystem::build(Family::A, 2);
    auto map = canonical_compression(rs, 3);
    REQUIRE(map.has_value());
    CHECK(map->s[0] == map->s[1]);
    CHECK(!check_s(rs, *map).ok);
    CHECK(!verify_injective(rs, *map));
  }
}

TEST_CASE("a composite-modulus compression reduces to a prime one") {
  auto rs = RootSystem::build(Family::E, 6);
  std::vector<std::vector<int>> gram = rs.cartan();
  for (auto& row : gram)
    for (auto& x : row) x = mod_reduce(x, 9);
  CompressionMap map;
  map.space = FpQuadSpace::with_gram(9, gram);
  for (int i = 0; i < 6; ++i) {
    FpVec e(6, 0);
    e[i] = 1;
    map.s.push_back(e);
  }
  CHECK(check_s(rs, map).ok);
  CHECK(verify_injective(rs, map));
  auto red = reduce_composite(map, 3);
  CHECK(red.space.p == 3);
  CHECK(check_s(rs, red).ok);
  CHECK(verify_injective(rs, red));
}
