#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootfp/fp.hpp"
#include "rootfp/root_system.hpp"

namespace rootfp {

// A compression of a root system: images S = {s_1..s_n} of the simple roots
// in a quadratic space over Z/p, extended linearly to the root lattice.  The
// defining condition is (s_i|s_j) = <alpha_i, alpha_j> mod p with the s_i
// nonzero and pairwise distinct (pairwise non-proportional when p > 2).
struct CompressionMap {
  FpQuadSpace space;
  std::vector<FpVec> s;  // one per simple root

  FpVec apply(const Root& beta) const;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Verifies the gram condition and the nonzero/distinct proviso.
CheckReport check_s(const RootSystem& rs, const CompressionMap& map);

// Injectivity of the induced map on roots: on Delta+ when p = 2 (images of
// +-beta coincide), on all of Delta otherwise.
bool verify_injective(const RootSystem& rs, const CompressionMap& map);

// Quotient construction: V = (Z/p)^n / ker(A mod p), with the form induced by
// A on the pivot coordinates and s_i = image of e_i.  Exists iff p | det(A);
// returns nullopt otherwise.  The result satisfies the gram condition by
// construction but may violate the distinct/nonzero proviso (and then fails
// verify_injective); callers should run check_s.
std::optional<CompressionMap> canonical_compression(const RootSystem& rs, int p);

// Reduction of a compression over Z/p to Z/p' for p' | p: reduce every
// coordinate and the gram matrix mod p'.
CompressionMap reduce_composite(const CompressionMap& map, int p_prime);

}  // namespace rootfp
