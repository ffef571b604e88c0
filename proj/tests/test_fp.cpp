#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootfp/fp.hpp"
#include "rootfp/root_system.hpp"

using namespace rootfp;

TEST_CASE("modular reduction and determinants") {
  CHECK(mod_reduce(-1, 3) == 2);
  CHECK(mod_reduce(7, 2) == 1);
  auto det_of = [](Family f, int rank, int p) {
    return det_mod(RootSystem::build(f, rank).cartan(), p);
  };
  CHECK(det_of(Family::E, 7, 2) == 0);  // det = 2
  CHECK(det_of(Family::E, 6, 3) == 0);  // det = 3
  CHECK(det_of(Family::E, 8, 2) == 1);  // det = 1
  CHECK(det_of(Family::E, 8, 3) == 1);
  CHECK(det_of(Family::D, 4, 2) == 0);  // det = 4
  CHECK(det_of(Family::A, 2, 3) == 0);  // det = 3
}

TEST_CASE("kernels mod p") {
  CHECK(kernel_mod(RootSystem::build(Family::E, 7).cartan(), 2).basis.size() ==
        1);
  CHECK(kernel_mod(RootSystem::build(Family::D, 4).cartan(), 2).basis.size() ==
        2);
  CHECK(kernel_mod(RootSystem::build(Family::A, 2).cartan(), 3).basis.size() ==
        1);
  CHECK(kernel_mod(RootSystem::build(Family::E, 8).cartan(), 2).basis.empty());
}

TEST_CASE("letter codes round-trip") {
  for (int i = 0; i < 64; ++i) {
    F3Code c = f3_unpack(i);
    CHECK(f3_pack(c) == i);
    CHECK(f3_from_vec(f3_to_vec(c)) == c);
  }
  CHECK(f3_string(F3Code{0, 3, 3}) == "033");
  CHECK(f3_xor(F3Code{0, 3, 3}, F3Code{3, 3, 0}) == F3Code{3, 0, 3});
}

TEST_CASE("the pair form on F^3") {
  auto v = FpQuadSpace::e7_target();
  auto form = [&](const F3Code& x, const F3Code& y) {
    return v.form(f3_to_vec(x), f3_to_vec(y));
  };
  // (a|a') = 1 exactly when a, a' are distinct and both nonzero.
  CHECK(form({1, 0, 0}, {2, 0, 0}) == 1);
  CHECK(form({1, 0, 0}, {1, 0, 0}) == 0);
  CHECK(form({1, 0, 0}, {0, 0, 0}) == 0);
  CHECK(form({3, 0, 0}, {3, 0, 0}) == 0);
  // The worked example: 033 and 303 are orthogonal.
  CHECK(form({0, 3, 3}, {3, 0, 3}) == 0);
  // Every vector is isotropic mod 2, so Gamma is all of V minus the origin.
  CHECK(v.gamma().size() == 63);
}

TEST_CASE("the dot form on (Z/3)^5") {
  auto v = FpQuadSpace::e6_target();
  CHECK(v.size() == 243);
  CHECK(v.form({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}) == 2);
  CHECK(v.gamma().size() == 72);
  CHECK(v.add({1, 2, 0, 0, 1}, {2, 2, 0, 0, 1}) == FpVec{0, 1, 0, 0, 2});
  CHECK(v.neg({1, 2, 0, 0, 1}) == FpVec{2, 1, 0, 0, 2});
}

TEST_CASE("T-adjacency") {
  CHECK(t_adjacent_f3({0, 2, 1}, {0, 1, 2}));       // agree only in a
  CHECK(!t_adjacent_f3({0, 2, 1}, {0, 2, 3}));      // agree in a and b
  CHECK(!t_adjacent_f3({0, 2, 1}, {1, 3, 2}));      // agree nowhere
  CHECK(!t_adjacent_f3({0, 2, 1}, {0, 2, 1}));      // not self-adjacent
  CHECK(t_adjacent_zp({1, 1, 1, 2, 2}, {1, 2, 2, 1, 1}));
  CHECK(!t_adjacent_zp({1, 1, 1, 2, 2}, {1, 1, 2, 1, 1}));
}

TEST_CASE("strong regularity detector on a 5-cycle") {
  auto adj = [](int i, int j) {
    int d = (i - j + 5) % 5;
    return d == 1 || d == 4;
  };
  auto p = srg_params(5, adj);
  CHECK(p.is_srg);
  CHECK(p.k == 2);
  CHECK(p.lambda == 0);
  CHECK(p.mu == 1);
}
