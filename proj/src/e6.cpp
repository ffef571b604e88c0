#include "rootfp/e6.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootfp {

CompressionMap standard_e6_map() {
  CompressionMap map;
  map.space = FpQuadSpace::e6_target();
  map.s = {
      {1, 2, 0, 0, 0}, {0, 0, 0, 1, 2}, {0, 1, 2, 0, 0},
      {0, 0, 1, 2, 0}, {0, 0, 0, 1, 1}, {1, 1, 1, 1, 1},
  };
  return map;
}

const E6Model& E6Model::instance() {
  static const E6Model model;
  return model;
}

E6Model::E6Model()
    : e6_(RootSystem::build(Family::E, 6)), map_(standard_e6_map()) {
  for (const auto& b : e6_.all_roots())
    index_to_root_[map_.space.index(map_.apply(b))] = b;
  for (const auto& b : e6_.positive_roots()) {
    int s = stratum(b);
    FpVec x = map_.apply(b);
    gamma_s_[s].push_back(x);
    gamma_s_packed_[s].insert(map_.space.index(x));
  }
  for (auto& [s, v] : gamma_s_) std::sort(v.begin(), v.end());
  gamma6_ = gamma_s_.at(6);
}

FpVec E6Model::f(const Root& beta) const { return map_.apply(beta); }

const Root* E6Model::root_of(const FpVec& x) const {
  auto it = index_to_root_.find(map_.space.index(x));
  return it == index_to_root_.end() ? nullptr : &it->second;
}

const std::vector<FpVec>& E6Model::gamma_plus(int s) const {
  return gamma_s_.at(s);
}

bool E6Model::in_gamma_plus(int s, const FpVec& x) const {
  auto it = gamma_s_packed_.find(s);
  return it != gamma_s_packed_.end() && it->second.count(map_.space.index(x)) != 0;
}

int E6Model::form(const FpVec& x, const FpVec& y) const {
  return map_.space.form(x, y);
}

bool E6Model::order_step(int s, const FpVec& x, const FpVec& a) const {
  if (!in_gamma_plus(s, x))
    throw std::invalid_argument("order_step: x not in the stratum image");
  return in_gamma_plus(s, map_.space.add(x, a));
}

std::vector<FpVec> E6Model::link_in_gamma6(const FpVec& v) const {
  std::vector<FpVec> out;
  for (const auto& x : gamma6_)
    if (t_adjacent_zp(v, x)) out.push_back(x);
  return out;
}

E6Model::Cell E6Model::square_layout(const FpVec& x) const {
  if (!in_gamma_plus(6, x))
    throw std::invalid_argument("square_layout: not in the top stratum image");
  Cell c;
  c.row = (x[0] - 1) * 2 + (x[1] - 1);
  c.col = (x[2] - 1) * 2 + (x[3] - 1);
  return c;
}

}  // namespace rootfp
