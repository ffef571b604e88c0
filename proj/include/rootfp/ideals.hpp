#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rootfp/e7.hpp"
#include "rootfp/root_system.hpp"

namespace rootfp {

// Order ideals of the stratum posets of the E8 positive roots, the open maps
// h_s from their Hasse graphs to the Dynkin diagram, the canonical order
// isomorphisms psi_s, and the involution system on the top two strata.
class IdealSystem {
 public:
  static const IdealSystem& instance();

  const RootSystem& e8() const { return e8_; }

  // Sorted positive roots of stratum s (height, then lex); ideals are
  // bitmasks over this ordering.
  const std::vector<Root>& elements(int s) const;
  using Ideal = uint64_t;
  const std::vector<Ideal>& ideals(int s) const;  // sorted ascending
  bool is_ideal(int s, Ideal j) const;

  // The open map h_s : stratum s -> {1..s}, labels 1-based; h_s(alpha_s) = s
  // and the labelling is a locally surjective graph homomorphism from the
  // Hasse graph onto the Dynkin diagram.  `count` reports how many such maps
  // the exhaustive search found (1 for s = 3..7, 0 for s = 8).
  struct OpenMapSearch {
    int count = 0;
    std::vector<int> labels;  // per element, only when count >= 1
  };
  const OpenMapSearch& open_map(int s) const;

  // psi_s(J) = alpha_s' + sum over J of alpha_{h_s(beta)}; an order
  // isomorphism onto stratum s' (s<7) resp. stratum 8 minus the highest root.
  Root psi(int s, Ideal j) const;

  // Involution system on stratum 7 (identified with Gamma7+ codes) and on
  // stratum 8 minus the highest root.
  //   eps: the order-2 symmetry of the extended E7 diagram on labels 1..7
  //        (1<->6, 3<->5; the label 7 pairs with the affine vertex, so it is
  //        fixed within {1..7});
  //   mu:  beta -> -lowest(E7) - sum_{k<=6} beta^k alpha_{eps(k)}  (codes: abc -> cba);
  //   rho: codes abc -> bca;
  //   nu:  beta -> highest(E8) - beta;
  //   sigma: beta -> highest(E8) - alpha_8 - mu(beta - alpha_8).
  int eps(int label) const;
  Root mu(const Root& beta7) const;        // stratum 7 of E8 (8 coords)
  Root rho(const Root& beta7) const;
  Ideal mu_tilde(Ideal j) const;           // on ideals of stratum 7
  Ideal rho_tilde(Ideal j) const;
  Root nu(const Root& beta8) const;
  Root sigma(const Root& beta8) const;

  // Partition class of an ideal of stratum 7: 0 empty, 3 full, else 2 when
  // the mu-fixed root (code 303) lies in J, 1 otherwise.
  int ideal_class(Ideal j) const;
  Root alpha_check7() const { return alpha_check_; }

  int element_index(int s, const Root& b) const;

 private:
  IdealSystem();
  void search_open_map(int s);

  RootSystem e8_;
  std::map<int, std::vector<Root>> elems_;
  std::map<int, std::vector<Ideal>> ideals_;
  std::map<int, OpenMapSearch> open_maps_;
  Root alpha_check_;
  uint64_t below_check_ = 0;  // ideal generated by alpha_check7
};

}  // namespace rootfp
