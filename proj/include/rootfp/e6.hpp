#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "rootfp/compression.hpp"
#include "rootfp/fp.hpp"
#include "rootfp/root_system.hpp"

namespace rootfp {

// The standard images of the E6 simple roots in (Z/3)^5:
// s_1..s_6 = 12000 00012 01200 00120 00011 11111.
CompressionMap standard_e6_map();

class E6Model {
 public:
  static const E6Model& instance();

  const RootSystem& e6() const { return e6_; }
  const CompressionMap& map() const { return map_; }

  FpVec f(const Root& beta) const;
  const Root* root_of(const FpVec& x) const;  // any root of E6, or null

  // Gamma = the 72 norm-2 vectors; f is a bijection Delta -> Gamma.
  std::vector<FpVec> gamma() const { return map_.space.gamma(); }

  // Image of the top stratum: the 16 all-nonzero vectors with coordinate
  // product 1 mod 3.
  const std::vector<FpVec>& gamma6() const { return gamma6_; }
  const std::vector<FpVec>& gamma_plus(int s) const;
  bool in_gamma_plus(int s, const FpVec& x) const;

  int form(const FpVec& x, const FpVec& y) const;

  // One order step in the image of stratum s: is x + a again in Gamma_s+?
  // (Equivalent to beta + alpha staying in the stratum; no sign ambiguity
  // over Z/3.)
  bool order_step(int s, const FpVec& x, const FpVec& a) const;

  // T-graph link of v within Gamma6+.
  std::vector<FpVec> link_in_gamma6(const FpVec& v) const;

  // 4x4 square cell: row indexed by (x1,x2), column by (x3,x4), both read as
  // 2*(x-1) digits over {1,2}; x5 is determined by the product constraint.
  struct Cell {
    int row = 0, col = 0;
  };
  Cell square_layout(const FpVec& x) const;

 private:
  E6Model();
  RootSystem e6_;
  CompressionMap map_;
  std::map<int, std::vector<FpVec>> gamma_s_;
  std::map<int, std::set<long long>> gamma_s_packed_;
  std::vector<FpVec> gamma6_;
  std::map<long long, Root> index_to_root_;
};

}  // namespace rootfp
