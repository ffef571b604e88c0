#include "rootfp/e7.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootfp {

CompressionMap standard_e7_map() {
  CompressionMap map;
  map.space = FpQuadSpace::e7_target();
  const F3Code s[7] = {{1, 0, 0}, {0, 3, 0}, {3, 0, 0}, {1, 1, 1},
                       {0, 0, 3}, {0, 0, 1}, {0, 3, 3}};
  for (const auto& c : s) map.s.push_back(f3_to_vec(c));
  return map;
}

const E7Model& E7Model::instance() {
  static const E7Model model;
  return model;
}

E7Model::E7Model()
    : e7_(RootSystem::build(Family::E, 7)),
      e8_(RootSystem::build(Family::E, 8)),
      map_(standard_e7_map()),
      labels_({1, 3, 4, 5, 6, 7}) {
  gamma7_index_.fill(-1);
  preimage_.fill(nullptr);
  for (const auto& b : e7_.positive_roots()) {
    F3Code c = f(b);
    code_to_root_[c] = b;
    int s = stratum(b);
    gamma_s_[s].push_back(c);
    gamma_s_packed_[s].insert(f3_pack(c));
    if (b[6] == 0) e6_pos_.push_back(b);
  }
  for (auto& [s, codes] : gamma_s_) std::sort(codes.begin(), codes.end());
  gamma7_ = gamma_s_.at(7);
  for (int i = 0; i < 27; ++i) gamma7_index_[f3_pack(gamma7_[i])] = i;
  for (const auto& [c, b] : code_to_root_) preimage_[f3_pack(c)] = &b;
}

F3Code E7Model::f(const Root& beta) const { return f3_from_vec(map_.apply(beta)); }

const Root* E7Model::root_of(const F3Code& code) const {
  return preimage_[f3_pack(code)];
}

std::vector<F3Code> E7Model::link(const F3Code& v) const {
  std::vector<F3Code> out;
  for (int i = 0; i < 64; ++i) {
    F3Code x = f3_unpack(i);
    if (t_adjacent_f3(v, x)) out.push_back(x);
  }
  return out;
}

std::vector<F3Code> E7Model::antilink(const F3Code& v) const {
  std::vector<F3Code> out;
  for (int i = 0; i < 64; ++i) {
    F3Code x = f3_unpack(i);
    if (x != v && !t_adjacent_f3(v, x)) out.push_back(x);
  }
  return out;
}

const std::vector<F3Code>& E7Model::gamma_plus(int s) const {
  return gamma_s_.at(s);
}

F3Code E7Model::z(int s) const { return f(e7_.zeta(s)); }

bool E7Model::in_gamma_plus(int s, const F3Code& x) const {
  auto it = gamma_s_packed_.find(s);
  return it != gamma_s_packed_.end() && it->second.count(f3_pack(x)) != 0;
}

int E7Model::form(const F3Code& x, const F3Code& y) const {
  return map_.space.form(f3_to_vec(x), f3_to_vec(y));
}

F3Code E7Model::orth_triple(const F3Code& x1, const F3Code& x2) const {
  if (!in_gamma_plus(7, x1) || !in_gamma_plus(7, x2) || form(x1, x2) != 0)
    throw std::invalid_argument("orth_triple: need an orthogonal pair in the top stratum");
  return f3_xor(x1, x2);
}

bool E7Model::order_step(int s, const F3Code& x, const F3Code& a) const {
  if (!in_gamma_plus(s, x))
    throw std::invalid_argument("order_step: x not in the stratum image");
  return in_gamma_plus(s, f3_xor(x, a));
}

E7Model::CrossStratum E7Model::cross_stratum(const Root& alpha, const Root& beta) const {
  CrossStratum out;
  Root ta = e7_.tilde(alpha), tb = e7_.tilde(beta);
  out.comparable = leq(ta, tb);
  int s = stratum(alpha), t = stratum(beta);
  if (s == t) {
    out.orthogonal = (e7_.inner(ta, tb) == 0);
  } else {
    // The case split reads the form against the lower stratum's shift.
    const Root& hi = s < t ? tb : ta;
    int fab = form(f(ta), f(tb));
    int fzb = form(z(std::min(s, t)), f(hi));
    out.orthogonal = (fab == 0 && fzb == 0) || (fab == 1 && fzb == 1);
  }
  return out;
}

F3Code E7Model::reflect(const Root& alpha, const F3Code& x) const {
  if (alpha.size() != 7 || alpha[6] != 0 || !e7_.is_root(alpha))
    throw std::invalid_argument("reflect: alpha must be a root of the E6 subsystem");
  F3Code y = f3_xor(x, f(alpha));
  return in_gamma_plus(7, y) ? y : x;
}

std::array<uint8_t, 27> E7Model::reflection_perm(const Root& alpha) const {
  std::array<uint8_t, 27> p{};
  for (int i = 0; i < 27; ++i)
    p[i] = static_cast<uint8_t>(gamma7_index_[f3_pack(reflect(alpha, gamma7_[i]))]);
  return p;
}

int E7Model::gamma7_index(const F3Code& x) const {
  int i = gamma7_index_[f3_pack(x)];
  if (i < 0) throw std::invalid_argument("not in the top stratum image");
  return i;
}

std::vector<E7Model::DoubleSix> E7Model::double_sixes() const {
  std::vector<DoubleSix> out;
  for (const auto& alpha : e6_pos_) {
    auto p = reflection_perm(alpha);
    std::vector<int> moved;
    for (int i = 0; i < 27; ++i)
      if (p[i] != i) moved.push_back(i);
    if (moved.size() != 12) throw std::logic_error("double six: expected 12 moved");
    // The restriction of the O-graph to the 12 is connected and bipartite
    // (complete bipartite minus the r_alpha matching); its two sides are the
    // sixes.  Seed the colouring at the least moved vertex.
    std::map<int, int> colour{{moved.front(), 0}};
    std::vector<int> stack{moved.front()};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : moved) {
        if (colour.count(w) || form(gamma7_[u], gamma7_[w]) != 0 || u == w)
          continue;
        colour[w] = 1 - colour[u];
        stack.push_back(w);
      }
    }
    DoubleSix ds;
    ds.alpha = alpha;
    int i0 = 0, i1 = 0;
    for (int v : moved) {
      if (colour.at(v) == 0) ds.first[i0++] = gamma7_[v];
      else ds.second[i1++] = gamma7_[v];
    }
    if (i0 != 6 || i1 != 6) throw std::logic_error("double six: uneven split");
    out.push_back(ds);
  }
  return out;
}

bool E7Model::WeylClosure::contains(const std::array<uint8_t, 27>& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

E7Model::WeylClosure E7Model::weyl_e6_closure() const {
  std::vector<std::array<uint8_t, 27>> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(reflection_perm(e7_.simple_root(i)));
  std::set<std::array<uint8_t, 27>> group;
  std::array<uint8_t, 27> id{};
  for (int i = 0; i < 27; ++i) id[i] = static_cast<uint8_t>(i);
  group.insert(id);
  std::vector<std::array<uint8_t, 27>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::array<uint8_t, 27>> next;
    for (const auto& g : frontier) {
      for (const auto& h : gens) {
        std::array<uint8_t, 27> x{};
        for (int i = 0; i < 27; ++i) x[i] = h[g[i]];
        if (group.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  WeylClosure out;
  out.elements.assign(group.begin(), group.end());
  return out;
}

E7Model::Cell E7Model::cube_layout(const F3Code& x) const {
  if (!in_gamma_plus(7, x))
    throw std::invalid_argument("cube_layout: not in the top stratum image");
  Cell c;
  int letters[3] = {x.a, x.b, x.c};
  int nz[2], k = 0;
  for (int i = 0; i < 3; ++i) {
    if (letters[i] == 0) c.face = i;
    else nz[k++] = letters[i];
  }
  c.row = nz[0] - 1;
  c.col = nz[1] - 1;
  return c;
}

}  // namespace rootfp
