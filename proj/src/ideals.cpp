#include "rootfp/ideals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rootfp {

const IdealSystem& IdealSystem::instance() {
  static const IdealSystem sys;
  return sys;
}

IdealSystem::IdealSystem() : e8_(RootSystem::build(Family::E, 8)) {
  for (int s : {1, 3, 4, 5, 6, 7, 8}) elems_[s] = e8_.stratum_positive(s);

  for (int s : {3, 4, 5, 6, 7}) {
    const auto& el = elems_[s];
    const int n = static_cast<int>(el.size());
    // Down-set masks, then BFS over single-element extensions.
    std::vector<Ideal> below(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq(el[j], el[i])) below[i] |= Ideal{1} << j;
    std::set<Ideal> seen{0};
    std::vector<Ideal> frontier{0};
    while (!frontier.empty()) {
      std::vector<Ideal> next;
      for (Ideal j : frontier) {
        for (int i = 0; i < n; ++i) {
          if (j >> i & 1) continue;
          if ((below[i] & ~(Ideal{1} << i) & ~j) != 0) continue;
          Ideal k = j | Ideal{1} << i;
          if (seen.insert(k).second) next.push_back(k);
        }
      }
      frontier = std::move(next);
    }
    ideals_[s].assign(seen.begin(), seen.end());
  }

  for (int s : {3, 4, 5, 6, 7, 8}) search_open_map(s);

  const auto& model = E7Model::instance();
  const Root* ac = model.root_of(F3Code{3, 0, 3});
  alpha_check_ = *ac;
  alpha_check_.push_back(0);  // lift to E8 coordinates
  const auto& el7 = elems_[7];
  for (size_t i = 0; i < el7.size(); ++i)
    if (leq(el7[i], alpha_check_)) below_check_ |= Ideal{1} << i;
}

const std::vector<Root>& IdealSystem::elements(int s) const { return elems_.at(s); }

const std::vector<IdealSystem::Ideal>& IdealSystem::ideals(int s) const {
  return ideals_.at(s);
}

bool IdealSystem::is_ideal(int s, Ideal j) const {
  const auto& v = ideals_.at(s);
  return std::binary_search(v.begin(), v.end(), j);
}

void IdealSystem::search_open_map(int s) {
  const auto& el = elems_.at(s);
  const int n = static_cast<int>(el.size());
  Graph h = e8_.hasse(el);
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i) nbr[i] = h.neighbours(i);
  std::vector<std::vector<int>> dyn(s + 1);
  for (int u = 1; u <= s; ++u)
    for (int w = 1; w <= s; ++w)
      if (e8_.cartan()[u - 1][w - 1] == -1) dyn[u].push_back(w);

  // alpha_s is the stratum minimum, hence index 0 in height order.
  std::vector<int> lab(n, 0);
  lab[0] = s;
  OpenMapSearch result;

  // Backtracking in height order; prune on the homomorphism condition as we
  // go and on local surjectivity once a vertex's neighbourhood is complete.
  auto consistent = [&](int v) {
    for (int u : nbr[v]) {
      if (u > v || lab[u] == 0) continue;
      bool edge = std::find(dyn[lab[v]].begin(), dyn[lab[v]].end(), lab[u]) !=
                  dyn[lab[v]].end();
      if (!edge) return false;
    }
    for (int x : nbr[v]) {
      // Vertices whose neighbourhoods are now fully labelled must cover the
      // Dynkin neighbourhood of their label.
      int probe[2] = {v, x};
      for (int y : probe) {
        if (lab[y] == 0) continue;
        bool complete = true;
        std::set<int> seen_labels;
        for (int u : nbr[y]) {
          if (lab[u] == 0) { complete = false; break; }
          seen_labels.insert(lab[u]);
        }
        if (!complete) continue;
        for (int w : dyn[lab[y]])
          if (!seen_labels.count(w)) return false;
      }
    }
    return true;
  };

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  // (height order is already the element order)

  // Full local surjectivity, checked at complete labelings: incremental
  // pruning never looks at vertices with empty neighbourhoods.
  auto locally_surjective = [&] {
    for (int v = 0; v < n; ++v) {
      std::set<int> seen;
      for (int u : nbr[v]) seen.insert(lab[u]);
      for (int w : dyn[lab[v]])
        if (!seen.count(w)) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int idx) {
    if (idx == n) {
      if (!locally_surjective()) return;
      ++result.count;
      if (result.count == 1) result.labels = lab;
      return;
    }
    int v = order[idx];
    if (lab[v] != 0) { rec(idx + 1); return; }
    for (int t = 1; t <= s; ++t) {
      lab[v] = t;
      if (consistent(v)) rec(idx + 1);
      lab[v] = 0;
    }
  };
  rec(0);
  open_maps_[s] = std::move(result);
}

const IdealSystem::OpenMapSearch& IdealSystem::open_map(int s) const {
  return open_maps_.at(s);
}

Root IdealSystem::psi(int s, Ideal j) const {
  const auto& el = elems_.at(s);
  const auto& h = open_maps_.at(s).labels;
  Root out(8, 0);
  out[stratum_next(s) - 1] = 1;
  for (size_t i = 0; i < el.size(); ++i)
    if (j >> i & 1) out[h[i] - 1] += 1;
  return out;
}

int IdealSystem::eps(int label) const {
  switch (label) {
    case 1: return 6;
    case 6: return 1;
    case 3: return 5;
    case 5: return 3;
    default: return label;
  }
}

Root IdealSystem::mu(const Root& beta7) const {
  // -lowest(E7) - sum_{k<=6} beta^k alpha_{eps(k)}, in E8 coordinates.
  static const Root theta7 = [] {
    Root t = RootSystem::build(Family::E, 7).highest_root();
    t.push_back(0);
    return t;
  }();
  Root out = theta7;
  for (int k = 1; k <= 6; ++k) out[eps(k) - 1] -= beta7[k - 1];
  return out;
}

Root IdealSystem::rho(const Root& beta7) const {
  const auto& model = E7Model::instance();
  Root b7(beta7.begin(), beta7.begin() + 7);
  F3Code c = model.f(b7);
  const Root* r = model.root_of(F3Code{c.b, c.c, c.a});
  Root out = *r;
  out.push_back(0);
  return out;
}

IdealSystem::Ideal IdealSystem::mu_tilde(Ideal j) const {
  const auto& el = elems_.at(7);
  Ideal out = 0;
  for (size_t i = 0; i < el.size(); ++i) {
    if (j >> i & 1) continue;
    out |= Ideal{1} << element_index(7, mu(el[i]));
  }
  return out;
}

IdealSystem::Ideal IdealSystem::rho_tilde(Ideal j) const {
  const auto& el = elems_.at(7);
  Ideal out = below_check_;
  for (size_t i = 0; i < el.size(); ++i) {
    if (!(j >> i & 1)) continue;
    if (el[i] == Root{0, 0, 0, 0, 0, 0, 1, 0}) continue;  // drop alpha_7
    out |= Ideal{1} << element_index(7, rho(el[i]));
  }
  return out;
}

Root IdealSystem::nu(const Root& beta8) const {
  Root out = e8_.highest_root();
  for (int i = 0; i < 8; ++i) out[i] -= beta8[i];
  return out;
}

Root IdealSystem::sigma(const Root& beta8) const {
  Root t = beta8;
  t[7] -= 1;  // beta - alpha_8 lands in stratum 7
  Root m = mu(t);
  Root out = e8_.highest_root();
  out[7] -= 1;
  for (int i = 0; i < 8; ++i) out[i] -= m[i];
  return out;
}

int IdealSystem::ideal_class(Ideal j) const {
  const auto& el = elems_.at(7);
  if (j == 0) return 0;
  Ideal full = el.size() == 64 ? ~Ideal{0} : (Ideal{1} << el.size()) - 1;
  if (j == full) return 3;
  int ci = element_index(7, alpha_check_);
  return (j >> ci & 1) ? 2 : 1;
}

int IdealSystem::element_index(int s, const Root& b) const {
  const auto& el = elems_.at(s);
  for (size_t i = 0; i < el.size(); ++i)
    if (el[i] == b) return static_cast<int>(i);
  throw std::invalid_argument("element_index: not in stratum");
}

}  // namespace rootfp
