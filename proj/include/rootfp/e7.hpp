#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "rootfp/compression.hpp"
#include "rootfp/fp.hpp"
#include "rootfp/root_system.hpp"

namespace rootfp {

// The standard images of the E7 simple roots in F^3 (letters 0..3 encode
// Z/2 x Z/2): s_1..s_7 = 100 030 300 111 003 001 033.
CompressionMap standard_e7_map();

// The E7 model: the compression of Delta+(E7) into F^3 together with every
// derived structure used by the verification suite and the renderers.
class E7Model {
 public:
  static const E7Model& instance();

  const RootSystem& e7() const { return e7_; }
  const RootSystem& e8() const { return e8_; }
  const CompressionMap& map() const { return map_; }

  F3Code f(const Root& beta) const;                 // any E7 lattice vector
  const Root* root_of(const F3Code& code) const;    // positive root, or null

  // T-graph link / antilink of a vertex within all of V = F^3.
  std::vector<F3Code> link(const F3Code& v) const;
  std::vector<F3Code> antilink(const F3Code& v) const;

  // Images of the strata, the shift vectors z_s, and membership tests.
  const std::vector<int>& stratum_labels() const { return labels_; }  // s values
  const std::vector<F3Code>& gamma_plus(int s) const;
  F3Code z(int s) const;
  bool in_gamma_plus(int s, const F3Code& x) const;
  // Top stratum, sorted: the 27 codes with exactly one zero letter.
  const std::vector<F3Code>& gamma7() const { return gamma7_; }

  // Orthogonality form on codes.
  int form(const F3Code& x, const F3Code& y) const;

  // Completion of an orthogonal pair in Gamma7+ to its unique orthogonal
  // triple: x3 = x1 xor x2.  Throws if the pair is not orthogonal in Gamma7+.
  F3Code orth_triple(const F3Code& x1, const F3Code& x2) const;

  // One order step inside the image of stratum s: is x xor a again in
  // Gamma_s+?  (Equivalent to beta +- alpha staying in the stratum, for
  // alpha of stratum < 7.)
  bool order_step(int s, const F3Code& x, const F3Code& a) const;

  // Comparability and orthogonality across strata via the tilde lifts.
  struct CrossStratum {
    bool comparable = false;  // alpha <= beta
    bool orthogonal = false;
  };
  CrossStratum cross_stratum(const Root& alpha, const Root& beta) const;

  // Reflection r_alpha (alpha a root of the E6 subsystem) acting on Gamma7+.
  F3Code reflect(const Root& alpha, const F3Code& x) const;

  struct DoubleSix {
    Root alpha;                    // the positive E6 root inducing the swap
    std::array<F3Code, 6> first;   // one six; r_alpha maps it onto `second`
    std::array<F3Code, 6> second;
  };
  // The 36 double sixes: for each positive root of the E6 subsystem, the 12
  // swapped vertices split into the two six-cliques of the complement of the
  // O-graph (the Schlafli graph).
  std::vector<DoubleSix> double_sixes() const;

  // Closure of the simple E6 reflections as permutations of the 27 vertices.
  struct WeylClosure {
    std::vector<std::array<uint8_t, 27>> elements;  // sorted
    bool contains(const std::array<uint8_t, 27>& g) const;
  };
  WeylClosure weyl_e6_closure() const;
  std::array<uint8_t, 27> reflection_perm(const Root& alpha) const;
  int gamma7_index(const F3Code& x) const;

  // Cube-corner cell of a Gamma7+ vertex: face = the zero letter (0,1,2 for
  // a,b,c), row/col = the remaining two letters in coordinate order, shifted
  // to 0..2.
  struct Cell {
    int face = 0, row = 0, col = 0;
  };
  Cell cube_layout(const F3Code& x) const;

  // E6 subsystem of E7 (beta^7 = 0), as positive roots.
  const std::vector<Root>& e6_positive() const { return e6_pos_; }

 private:
  E7Model();
  RootSystem e7_;
  RootSystem e8_;
  CompressionMap map_;
  std::vector<int> labels_;
  std::map<int, std::vector<F3Code>> gamma_s_;       // sorted codes per s
  std::map<int, std::set<int>> gamma_s_packed_;
  std::vector<F3Code> gamma7_;
  std::array<int, 64> gamma7_index_{};
  std::array<const Root*, 64> preimage_{};
  std::vector<Root> e6_pos_;
  std::map<F3Code, Root> code_to_root_;
};

}  // namespace rootfp
