#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rootfp {

// A root is an integer coefficient vector over the simple-root basis of the
// system that owns it.  We keep plain vectors; every system here has rank <= 8
// and at most 240 roots, so clarity wins over packing.
using Root = std::vector<int>;

enum class Family { A, D, E };

Family family_from_char(char c);
char family_to_char(Family f);

// Partial order on the root lattice: a <= b coefficientwise.  Restricted to
// positive roots this is the usual order (b - a is a nonnegative combination
// of simple roots; on Delta+ it coincides with the transitive closure of
// "b - a is a positive root").
bool leq(const Root& a, const Root& b);

// Stratum label of a positive root of an E-chain system: the largest index i
// (1-based) with b^i != 0, with 2 merged into 3.  (alpha_2 enters the chain at
// the same step as alpha_3: E3 = A2 x A1.)
int stratum(const Root& b);

// s' = max{3, s+1}: the next stratum label above s.
int stratum_next(int s);

struct Graph {
  std::vector<std::string> vertices;           // stable ids, index = vertex
  std::set<std::pair<int, int>> edges;         // i < j
  bool adjacent(int i, int j) const;
  std::vector<int> neighbours(int i) const;
};

class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positives_; }
  std::vector<Root> all_roots() const;
  Root simple_root(int i) const;  // 1-based

  int inner(const Root& a, const Root& b) const;
  bool is_root(const Root& b) const;
  bool is_positive_root(const Root& b) const;

  Root highest_root() const;
  Root lowest_root() const;  // negative of the highest root

  // Cover-relation graph of the induced order on `subset`.
  // Vertex ids are the digit strings of the coefficient vectors.
  Graph hasse(const std::vector<Root>& subset) const;

  // Positive roots of stratum s (E-family systems).
  std::vector<Root> stratum_positive(int s) const;

  // zeta_s = sum of alpha_i for i = s'..rank; tilde(b) = b + zeta_{stratum(b)}
  // lifts a positive root into the top stratum.
  Root zeta(int s) const;
  Root tilde(const Root& b) const;

  // Diagram surgery at vertex i (chain vertex, i >= 3; i = rank cuts no
  // edge and affinizes the whole diagram): detach
  // the tail after v_i, affinize the head component, negate its decorations,
  // delete v_i and reattach the tail at the affine vertex.  The re-identified
  // diagram yields a new system of simple roots; the result maps each root
  // r = sum c_k alpha_k to sum c_k new_simple[k].  The re-identification is
  // the graph isomorphism fixing the most original vertices (ties broken
  // lexicographically).
  struct Twist {
    std::vector<Root> new_simples;  // image of alpha_1..alpha_n
    Root apply(const Root& r) const;
  };
  Twist dynkin_twist(int i) const;

 private:
  Family family_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positives_;      // sorted by (height, lex)
  std::set<Root> positive_set_;
};

std::string root_to_string(const Root& b);

}  // namespace rootfp
