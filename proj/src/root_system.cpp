#include "rootfp/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rootfp {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
  }
  throw std::invalid_argument("unknown family");
}

char family_to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

bool leq(const Root& a, const Root& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int stratum(const Root& b) {
  int s = 0;
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) s = static_cast<int>(i) + 1;
  return s == 2 ? 3 : s;
}

int stratum_next(int s) { return std::max(3, s + 1); }

bool Graph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) != 0;
}

std::vector<int> Graph::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(vertices.size()); ++j)
    if (j != i && adjacent(i, j)) out.push_back(j);
  return out;
}

namespace {

std::vector<std::vector<int>> make_cartan(Family family, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case Family::D:
      if (n < 3) throw std::invalid_argument("D needs rank >= 3");
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
      edge(n - 2, n);
      break;
    case Family::E:
      // Chain 1-3-4-...-n with the branch vertex 2 attached to 4.
      if (n < 3 || n > 8) throw std::invalid_argument("E needs rank in [3,8]");
      edge(1, 3);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      if (n >= 4) edge(2, 4);
      break;
  }
  return a;
}

bool height_lex_less(const Root& a, const Root& b) {
  int ha = std::accumulate(a.begin(), a.end(), 0);
  int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = make_cartan(family, rank);

  // Height-closure enumeration: a norm-2 vector beta + alpha_i is a root
  // exactly when its norm is 2, so growing from the simple roots by simple
  // steps reaches every positive root.
  std::set<Root> pos;
  std::vector<Root> frontier;
  for (int i = 0; i < rank; ++i) {
    Root s(rank, 0);
    s[i] = 1;
    pos.insert(s);
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < rank; ++i) {
        Root c = b;
        c[i] += 1;
        if (pos.count(c)) continue;
        if (rs.inner(c, c) == 2) {
          pos.insert(c);
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  rs.positives_.assign(pos.begin(), pos.end());
  std::sort(rs.positives_.begin(), rs.positives_.end(), height_lex_less);
  rs.positive_set_ = std::move(pos);
  return rs;
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positives_;
  for (const auto& b : positives_) {
    Root m = b;
    for (auto& x : m) x = -x;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

Root RootSystem::simple_root(int i) const {
  Root s(rank_, 0);
  s.at(i - 1) = 1;
  return s;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) acc += a[i] * cartan_[i][j] * b[j];
  }
  return acc;
}

bool RootSystem::is_root(const Root& b) const {
  if (positive_set_.count(b)) return true;
  Root m = b;
  for (auto& x : m) x = -x;
  return positive_set_.count(m) != 0;
}

bool RootSystem::is_positive_root(const Root& b) const {
  return positive_set_.count(b) != 0;
}

Root RootSystem::highest_root() const { return positives_.back(); }

Root RootSystem::lowest_root() const {
  Root m = highest_root();
  for (auto& x : m) x = -x;
  return m;
}

Graph RootSystem::hasse(const std::vector<Root>& subset) const {
  std::vector<Root> el = subset;
  std::sort(el.begin(), el.end(), height_lex_less);
  const int n = static_cast<int>(el.size());
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lt[i][j] = (el[i] != el[j]) && leq(el[i], el[j]);
  Graph g;
  for (const auto& b : el) g.vertices.push_back(root_to_string(b));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) g.edges.insert({std::min(i, j), std::max(i, j)});
    }
  }
  return g;
}

std::vector<Root> RootSystem::stratum_positive(int s) const {
  std::vector<Root> out;
  for (const auto& b : positives_)
    if (stratum(b) == s) out.push_back(b);
  return out;
}

Root RootSystem::zeta(int s) const {
  Root z(rank_, 0);
  int top = std::min(rank_, 7);
  for (int i = stratum_next(s); i <= top; ++i) z[i - 1] = 1;
  return z;
}

Root RootSystem::tilde(const Root& b) const {
  int s = stratum(b);
  if (s >= 7) return b;
  Root z = zeta(s);
  Root out = b;
  for (int i = 0; i < rank_; ++i) out[i] += z[i];
  return out;
}

namespace {

using Adj = std::vector<std::set<int>>;

// All graph isomorphisms between two simple graphs on the same vertex count,
// found by degree-pruned backtracking.  Sizes here are <= 8.
void isomorphisms(const Adj& g, const Adj& h, std::vector<int>& map,
                  std::vector<bool>& used, size_t v,
                  std::vector<std::vector<int>>& out) {
  const size_t n = g.size();
  if (v == n) {
    out.push_back(map);
    return;
  }
  for (size_t w = 0; w < n; ++w) {
    if (used[w] || g[v].size() != h[w].size()) continue;
    bool ok = true;
    for (size_t u = 0; u < v && ok; ++u) {
      bool e1 = g[u].count(static_cast<int>(v)) != 0;
      bool e2 = h[map[u]].count(static_cast<int>(w)) != 0;
      if (e1 != e2) ok = false;
    }
    if (!ok) continue;
    map[v] = static_cast<int>(w);
    used[w] = true;
    isomorphisms(g, h, map, used, v + 1, out);
    used[w] = false;
  }
}

}  // namespace

Root RootSystem::Twist::apply(const Root& r) const {
  const int n = static_cast<int>(new_simples.size());
  Root out(n, 0);
  for (int k = 0; k < n; ++k) {
    if (r[k] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += r[k] * new_simples[k][i];
  }
  return out;
}

RootSystem::Twist RootSystem::dynkin_twist(int i) const {
  if (family_ != Family::E) throw std::invalid_argument("twist: E family only");
  if (i == 1 || i == 2 || i < 1 || i > rank_)
    throw std::invalid_argument("twist: vertex must be a chain vertex != 1");
  const int n = rank_;

  // Split at the edge (v_i, v_{i+1}); the head component contains v_1.
  std::vector<bool> in_head(n + 1, false);
  {
    std::vector<int> stack = {1};
    in_head[1] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 1; w <= n; ++w) {
        if (in_head[w] || cartan_[u - 1][w - 1] != -1) continue;
        if ((u == i && w == i + 1) || (u == i + 1 && w == i)) continue;
        in_head[w] = true;
        stack.push_back(w);
      }
    }
  }

  // Sub-root system of the head; its lowest root decorates the affine vertex.
  std::vector<int> head;
  for (int v = 1; v <= n; ++v)
    if (in_head[v]) head.push_back(v);
  std::set<Root> sub;  // positive roots supported on the head vertices
  for (const auto& b : positives_) {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      if (b[v - 1] != 0 && !in_head[v]) ok = false;
    if (ok) sub.insert(b);
  }
  Root sub_highest(n, 0);
  for (const auto& b : sub)
    if (height_lex_less(sub_highest, b)) sub_highest = b;

  // Decorated surgery graph.  Vertices: head \ {v_i}, the affine vertex, and
  // the tail.  Decorations: negated over the affinized head (so the affine
  // vertex carries +highest(head)), untouched on the tail.
  struct V {
    int orig;  // original label, or 0 for the affine vertex
    Root dec;
  };
  std::vector<V> verts;
  for (int v = 1; v <= n; ++v) {
    if (v == i) continue;
    Root d = simple_root(v);
    if (in_head[v])
      for (auto& x : d) x = -x;
    verts.push_back({v, d});
  }
  verts.push_back({0, sub_highest});  // negated lowest root of the head
  const int m = static_cast<int>(verts.size());
  auto vindex = [&](int orig) {
    for (int k = 0; k < m; ++k)
      if (verts[k].orig == orig) return k;
    return -1;
  };

  Adj surg(m);
  auto connect = [&](int a, int b) {
    surg[a].insert(b);
    surg[b].insert(a);
  };
  // Edges inherited from the diagram (minus anything at v_i), the affine
  // attachments (inner product -1 with the lowest root), and the reattachment
  // of the tail at the affine vertex.
  for (int u = 1; u <= n; ++u) {
    for (int w = u + 1; w <= n; ++w) {
      if (u == i || w == i || cartan_[u - 1][w - 1] != -1) continue;
      if (in_head[u] != in_head[w]) continue;  // the cut edge, if any
      connect(vindex(u), vindex(w));
    }
  }
  for (int v : head) {
    if (v == i) continue;
    Root low = sub_highest;
    for (auto& x : low) x = -x;
    if (inner(low, simple_root(v)) == -1) connect(vindex(0), vindex(v));
  }
  if (i < n) connect(vindex(0), vindex(i + 1));

  Adj target(m);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (cartan_[u - 1][w - 1] == -1) {
        target[u - 1].insert(w - 1);
        target[w - 1].insert(u - 1);
      }

  std::vector<std::vector<int>> isos;
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  isomorphisms(surg, target, map, used, 0, isos);
  if (isos.empty()) throw std::logic_error("twist: surgery changed the diagram");

  // Canonical re-identification: maximize fixed original vertices, then the
  // lexicographically least assignment.
  auto score = [&](const std::vector<int>& iso) {
    int fixed = 0;
    for (int k = 0; k < m; ++k)
      if (verts[k].orig != 0 && iso[k] == verts[k].orig - 1) ++fixed;
    return fixed;
  };
  const std::vector<int>* best = &isos[0];
  for (const auto& iso : isos) {
    if (score(iso) > score(*best) || (score(iso) == score(*best) && iso < *best))
      best = &iso;
  }

  Twist t;
  t.new_simples.assign(n, Root());
  for (int k = 0; k < m; ++k) t.new_simples[(*best)[k]] = verts[k].dec;
  return t;
}

std::string root_to_string(const Root& b) {
  bool plain = true;
  for (int x : b)
    if (x < 0 || x > 9) plain = false;
  std::string s;
  for (size_t k = 0; k < b.size(); ++k) {
    s += std::to_string(b[k]);
    if (!plain && k + 1 < b.size()) s += ' ';
  }
  return s;
}

}  // namespace rootfp
