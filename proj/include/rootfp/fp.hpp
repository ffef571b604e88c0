#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rootfp {

// Vectors over Z/p, p a small prime (2 or 3 in practice, but nothing here
// assumes that).  Entries are kept reduced to [0, p).
using FpVec = std::vector<int>;

int mod_reduce(long long x, int p);

// Determinant of a square integer matrix mod p (fraction-free would be
// overkill: we eliminate over Z/p directly).
int det_mod(const std::vector<std::vector<int>>& a, int p);

struct KernelMod {
  std::vector<FpVec> basis;  // RREF kernel basis
  std::vector<int> pivots;   // pivot columns of the RREF
  std::vector<int> free;     // non-pivot columns (one per basis vector)
};
KernelMod kernel_mod(const std::vector<std::vector<int>>& a, int p);

// A (Z/p)^dim space with a symmetric bilinear form given by a gram matrix.
// Covers both concrete targets used here:
//   - the E7 target: p=2, dim=6 read as three copies of F = Z/2 x Z/2 with
//     the pair form (a|a') = a1*a2' + a2*a1' (gram: hyperbolic 2x2 blocks);
//   - the E6 target: p=3, dim=5 with the standard dot product.
struct FpQuadSpace {
  int p = 2;
  int dim = 0;
  std::vector<std::vector<int>> gram;

  static FpQuadSpace e7_target();               // (Z/2)^6 as F^3
  static FpQuadSpace e6_target();               // (Z/3)^5, standard form
  static FpQuadSpace dot(int p, int dim);       // identity gram
  static FpQuadSpace with_gram(int p, std::vector<std::vector<int>> g);

  int form(const FpVec& x, const FpVec& y) const;
  long long index(const FpVec& x) const;        // mixed-radix rank, base p
  FpVec vector_at(long long index) const;
  long long size() const;                       // p^dim

  FpVec add(const FpVec& x, const FpVec& y) const;
  FpVec neg(const FpVec& x) const;

  // Norm-2 locus {x != 0 : (x|x) = 2 mod p}.
  std::vector<FpVec> gamma() const;
};

// The digit-pair reading of the E7 target: x in (Z/2)^6 as (a,b,c) with each
// letter in {0,1,2,3} encoding an element of F = Z/2 x Z/2 (high bit first).
struct F3Code {
  int a = 0, b = 0, c = 0;
  friend auto operator<=>(const F3Code&, const F3Code&) = default;
};
F3Code f3_from_vec(const FpVec& x);
FpVec f3_to_vec(const F3Code& x);
F3Code f3_xor(const F3Code& x, const F3Code& y);
int f3_pack(const F3Code& x);    // 0..63
F3Code f3_unpack(int code);
std::string f3_string(const F3Code& x);  // "abc" digits

// T-graph adjacency: agreement in exactly one coordinate block.  For the E7
// target the blocks are the three F-letters; for a (Z/p)^m dot space every
// coordinate is a block.
bool t_adjacent_f3(const F3Code& x, const F3Code& y);
bool t_adjacent_zp(const FpVec& x, const FpVec& y);

// Common-neighbour statistics of a regular graph given as an adjacency
// predicate over an index range; used to certify strong regularity.
struct SrgParams {
  int n = 0, k = -1, lambda = -1, mu = -1;
  bool is_srg = false;
};
template <typename AdjFn>
SrgParams srg_params(int n, AdjFn adj) {
  SrgParams out;
  out.n = n;
  out.is_srg = true;
  for (int i = 0; i < n && out.is_srg; ++i) {
    int deg = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && adj(i, j)) ++deg;
    if (out.k < 0) out.k = deg;
    else if (deg != out.k) out.is_srg = false;
  }
  for (int i = 0; i < n && out.is_srg; ++i) {
    for (int j = i + 1; j < n && out.is_srg; ++j) {
      int common = 0;
      for (int l = 0; l < n; ++l)
        if (l != i && l != j && adj(i, l) && adj(j, l)) ++common;
      int& slot = adj(i, j) ? out.lambda : out.mu;
      if (slot < 0) slot = common;
      else if (slot != common) out.is_srg = false;
    }
  }
  return out;
}

}  // namespace rootfp
