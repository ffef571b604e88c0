#include "rootfp/compression.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rootfp {

FpVec CompressionMap::apply(const Root& beta) const {
  FpVec out(space.dim, 0);
  for (size_t k = 0; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    for (int i = 0; i < space.dim; ++i)
      out[i] = mod_reduce(out[i] + 1LL * beta[k] * s[k][i], space.p);
  }
  return out;
}

CheckReport check_s(const RootSystem& rs, const CompressionMap& map) {
  CheckReport rep;
  const int n = rs.rank();
  const int p = map.space.p;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  for (int i = 0; i < n; ++i) {
    bool zero = std::all_of(map.s[i].begin(), map.s[i].end(),
                            [](int x) { return x == 0; });
    if (zero) fail("s_" + std::to_string(i + 1) + " is zero");
    for (int j = i; j < n; ++j) {
      int got = map.space.form(map.s[i], map.s[j]);
      int want = mod_reduce(rs.cartan()[i][j], p);
      if (got != want)
        fail("(s_" + std::to_string(i + 1) + "|s_" + std::to_string(j + 1) +
             ") = " + std::to_string(got) + ", expected " + std::to_string(want));
      if (j > i) {
        if (map.s[i] == map.s[j])
          fail("s_" + std::to_string(i + 1) + " = s_" + std::to_string(j + 1));
        else if (p > 2 && map.s[i] == map.space.neg(map.s[j]))
          fail("s_" + std::to_string(i + 1) + " = -s_" + std::to_string(j + 1));
      }
    }
  }
  return rep;
}

bool verify_injective(const RootSystem& rs, const CompressionMap& map) {
  std::set<long long> seen;
  const auto roots =
      map.space.p == 2 ? rs.positive_roots() : rs.all_roots();
  for (const auto& b : roots)
    if (!seen.insert(map.space.index(map.apply(b))).second) return false;
  return true;
}

std::optional<CompressionMap> canonical_compression(const RootSystem& rs, int p) {
  const int n = rs.rank();
  if (det_mod(rs.cartan(), p) != 0) return std::nullopt;
  KernelMod ker = kernel_mod(rs.cartan(), p);
  const int m = static_cast<int>(ker.pivots.size());

  // Reduce x modulo the kernel so the free coordinates vanish, then read off
  // the pivot coordinates.  The RREF basis has a 1 in exactly one free
  // coordinate each, so one sweep suffices.
  auto project = [&](FpVec x) {
    for (size_t k = 0; k < ker.basis.size(); ++k) {
      int t = x[ker.free[k]];
      if (t == 0) continue;
      for (int i = 0; i < n; ++i)
        x[i] = mod_reduce(x[i] - 1LL * t * ker.basis[k][i], p);
    }
    FpVec out(m);
    for (int i = 0; i < m; ++i) out[i] = x[ker.pivots[i]];
    return out;
  };

  std::vector<std::vector<int>> g(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g[i][j] = mod_reduce(rs.cartan()[ker.pivots[i]][ker.pivots[j]], p);

  CompressionMap map;
  map.space = FpQuadSpace::with_gram(p, std::move(g));
  for (int i = 0; i < n; ++i) {
    FpVec e(n, 0);
    e[i] = 1;
    map.s.push_back(project(std::move(e)));
  }
  return map;
}

CompressionMap reduce_composite(const CompressionMap& map, int p_prime) {
  if (map.space.p % p_prime != 0)
    throw std::invalid_argument("reduce_composite: p' must divide p");
  CompressionMap out;
  auto g = map.space.gram;
  for (auto& row : g)
    for (auto& x : row) x = mod_reduce(x, p_prime);
  out.space = FpQuadSpace::with_gram(p_prime, std::move(g));
  for (const auto& v : map.s) {
    FpVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = mod_reduce(v[i], p_prime);
    out.s.push_back(std::move(w));
  }
  return out;
}

}  // namespace rootfp
