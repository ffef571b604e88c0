#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "rootfp/ideals.hpp"

using namespace rootfp;

TEST_CASE("ideal counts of the stratum posets") {
  const auto& sys = IdealSystem::instance();
  std::map<int, size_t> expect = {{3, 6}, {4, 10}, {5, 16}, {6, 27}, {7, 56}};
  for (auto [s, n] : expect) {
    CHECK(sys.ideals(s).size() == n);
    for (auto j : sys.ideals(s)) CHECK(sys.is_ideal(s, j));
  }
}

TEST_CASE("open maps exist uniquely for s = 3..7 and not for s = 8") {
  const auto& sys = IdealSystem::instance();
  for (int s = 3; s <= 7; ++s) {
    const auto& om = sys.open_map(s);
    CHECK(om.count == 1);
    CHECK(om.labels.size() == sys.elements(s).size());
  }
  CHECK(sys.open_map(8).count == 0);
}

TEST_CASE("spot values of the stratum-7 open map") {
  const auto& sys = IdealSystem::instance();
  const auto& e7m = E7Model::instance();
  const auto& om = sys.open_map(7);
  auto label_of = [&](int a, int b, int c) {
    Root r7 = *e7m.root_of(F3Code{a, b, c});
    Root r8(r7);
    r8.push_back(0);
    return om.labels[sys.element_index(7, r8)];
  };
  CHECK(label_of(0, 3, 3) == 7);
  CHECK(label_of(0, 2, 3) == 1);
  CHECK(label_of(3, 2, 0) == 1);
  CHECK(label_of(3, 0, 3) == 7);
}

TEST_CASE("mu reverses letter codes and fixes 303") {
  const auto& sys = IdealSystem::instance();
  const auto& e7m = E7Model::instance();
  auto code_of = [&](const Root& b8) {
    Root b7(b8.begin(), b8.end() - 1);
    return e7m.f(b7);
  };
  for (const auto& beta : sys.elements(7)) {
    auto x = code_of(beta);
    Root m = sys.mu(beta);
    auto y = code_of(m);
    CHECK(y.a == x.c);
    CHECK(y.b == x.b);
    CHECK(y.c == x.a);
    CHECK(sys.mu(m) == beta);
    Root r = sys.rho(beta);
    auto z = code_of(r);
    CHECK(z.a == x.b);
    CHECK(z.b == x.c);
    CHECK(z.c == x.a);
  }
  Root ac = sys.alpha_check7();  // already in 8-coordinate form
  CHECK(code_of(ac) == F3Code{3, 0, 3});
  CHECK(sys.mu(ac) == ac);
}

TEST_CASE("nu is an involution of stratum 8 minus its top") {
  const auto& sys = IdealSystem::instance();
  Root theta = sys.e8().highest_root();
  for (const auto& beta : sys.elements(8)) {
    if (beta == theta) continue;
    Root n = sys.nu(beta);
    CHECK(sys.e8().is_positive_root(n));
    CHECK(stratum(n) == 8);
    CHECK(sys.nu(n) == beta);
  }
}

TEST_CASE("psi_7 intertwines the ideal maps with nu and sigma") {
  const auto& sys = IdealSystem::instance();
  for (auto j : sys.ideals(7)) {
    CHECK(sys.psi(7, sys.mu_tilde(j)) == sys.nu(sys.psi(7, j)));
    if (sys.ideal_class(j) == 1)
      CHECK(sys.psi(7, sys.rho_tilde(j)) == sys.sigma(sys.psi(7, j)));
  }
}

TEST_CASE("ideal classes partition the 56 ideals as 1 + 27 + 27 + 1") {
  const auto& sys = IdealSystem::instance();
  std::map<int, int> sizes;
  for (auto j : sys.ideals(7)) sizes[sys.ideal_class(j)]++;
  CHECK(sizes[0] == 1);
  CHECK(sizes[1] == 27);
  CHECK(sizes[2] == 27);
  CHECK(sizes[3] == 1);
}

TEST_CASE("mu_tilde and rho_tilde act on ideals as expected") {
  const auto& sys = IdealSystem::instance();
  for (auto j : sys.ideals(7)) {
    auto mj = sys.mu_tilde(j);
    CHECK(sys.is_ideal(7, mj));
    CHECK(sys.mu_tilde(mj) == j);
    int c = sys.ideal_class(j);
    CHECK(sys.ideal_class(mj) == 3 - c);
    if (c == 1) {
      auto rj = sys.rho_tilde(j);
      CHECK(sys.is_ideal(7, rj));
      CHECK(sys.ideal_class(rj) == 2);
    }
  }
}

TEST_CASE("psi maps ideals of stratum s order-isomorphically upward") {
  const auto& sys = IdealSystem::instance();
  for (int s : {3, 4, 5, 6}) {
    int sp = stratum_next(s);
    for (auto j : sys.ideals(s)) {
      Root img = sys.psi(s, j);
      CHECK(sys.e8().is_positive_root(img));
      CHECK(stratum(img) == sp);
    }
  }
  // the empty ideal goes to alpha_{s'}
  CHECK(sys.psi(6, 0) == sys.e8().simple_root(7));
  for (auto j : sys.ideals(7)) {
    Root img = sys.psi(7, j);
    CHECK(sys.e8().is_positive_root(img));
    CHECK(stratum(img) == 8);
    CHECK(img != sys.e8().highest_root());
  }
}
