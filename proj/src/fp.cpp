#include "rootfp/fp.hpp"

#include <stdexcept>
#include <string>

namespace rootfp {

int mod_reduce(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

namespace {

int inv_mod(int x, int p) {
  // p is a small prime here; Fermat is plenty.
  int acc = 1, base = mod_reduce(x, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
  }
  return acc;
}

}  // namespace

int det_mod(const std::vector<std::vector<int>>& a, int p) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = mod_reduce(a[i][j], p);
  int det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = mod_reduce(-det, p);
    }
    det = det * m[c][c] % p;
    int inv = inv_mod(m[c][c], p);
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      int f = m[r][c] * inv % p;
      for (int j = c; j < n; ++j) m[r][j] = mod_reduce(m[r][j] - f * m[c][j], p);
    }
  }
  return det;
}

KernelMod kernel_mod(const std::vector<std::vector<int>>& a, int p) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = mod_reduce(a[i][j], p);
  KernelMod out;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[r]);
    int inv = inv_mod(m[r][c], p);
    for (int j = 0; j < n; ++j) m[r][j] = m[r][j] * inv % p;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      int f = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] = mod_reduce(m[i][j] - f * m[r][j], p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (int c = 0; c < n; ++c) {
    bool is_pivot = false;
    for (int pc : out.pivots)
      if (pc == c) is_pivot = true;
    if (!is_pivot) out.free.push_back(c);
  }
  for (int fc : out.free) {
    FpVec v(n, 0);
    v[fc] = 1;
    for (size_t ri = 0; ri < out.pivots.size(); ++ri)
      v[out.pivots[ri]] = mod_reduce(-m[ri][fc], p);
    out.basis.push_back(v);
  }
  return out;
}

FpQuadSpace FpQuadSpace::e7_target() {
  FpQuadSpace s;
  s.p = 2;
  s.dim = 6;
  s.gram.assign(6, std::vector<int>(6, 0));
  for (int b = 0; b < 3; ++b) {
    s.gram[2 * b][2 * b + 1] = 1;
    s.gram[2 * b + 1][2 * b] = 1;
  }
  return s;
}

FpQuadSpace FpQuadSpace::e6_target() { return dot(3, 5); }

FpQuadSpace FpQuadSpace::dot(int p, int dim) {
  FpQuadSpace s;
  s.p = p;
  s.dim = dim;
  s.gram.assign(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < dim; ++i) s.gram[i][i] = 1;
  return s;
}

FpQuadSpace FpQuadSpace::with_gram(int p, std::vector<std::vector<int>> g) {
  FpQuadSpace s;
  s.p = p;
  s.dim = static_cast<int>(g.size());
  s.gram = std::move(g);
  for (auto& row : s.gram)
    for (auto& x : row) x = mod_reduce(x, p);
  return s;
}

int FpQuadSpace::form(const FpVec& x, const FpVec& y) const {
  long long acc = 0;
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) acc += 1LL * x[i] * gram[i][j] * y[j];
  }
  return mod_reduce(acc, p);
}

long long FpQuadSpace::index(const FpVec& x) const {
  long long idx = 0;
  for (int i = 0; i < dim; ++i) idx = idx * p + mod_reduce(x[i], p);
  return idx;
}

FpVec FpQuadSpace::vector_at(long long index) const {
  FpVec x(dim, 0);
  for (int i = dim - 1; i >= 0; --i) {
    x[i] = static_cast<int>(index % p);
    index /= p;
  }
  return x;
}

long long FpQuadSpace::size() const {
  long long n = 1;
  for (int i = 0; i < dim; ++i) n *= p;
  return n;
}

FpVec FpQuadSpace::add(const FpVec& x, const FpVec& y) const {
  FpVec out(dim);
  for (int i = 0; i < dim; ++i) out[i] = mod_reduce(x[i] + y[i], p);
  return out;
}

FpVec FpQuadSpace::neg(const FpVec& x) const {
  FpVec out(dim);
  for (int i = 0; i < dim; ++i) out[i] = mod_reduce(-x[i], p);
  return out;
}

std::vector<FpVec> FpQuadSpace::gamma() const {
  std::vector<FpVec> out;
  const int want = mod_reduce(2, p);
  for (long long i = 1; i < size(); ++i) {
    FpVec x = vector_at(i);
    if (form(x, x) == want) out.push_back(x);
  }
  return out;
}

F3Code f3_from_vec(const FpVec& x) {
  F3Code c;
  c.a = x[0] * 2 + x[1];
  c.b = x[2] * 2 + x[3];
  c.c = x[4] * 2 + x[5];
  return c;
}

FpVec f3_to_vec(const F3Code& x) {
  return {x.a >> 1, x.a & 1, x.b >> 1, x.b & 1, x.c >> 1, x.c & 1};
}

F3Code f3_xor(const F3Code& x, const F3Code& y) {
  return {x.a ^ y.a, x.b ^ y.b, x.c ^ y.c};
}

int f3_pack(const F3Code& x) { return x.a * 16 + x.b * 4 + x.c; }

F3Code f3_unpack(int code) { return {code / 16, (code / 4) % 4, code % 4}; }

std::string f3_string(const F3Code& x) {
  return std::to_string(x.a) + std::to_string(x.b) + std::to_string(x.c);
}

bool t_adjacent_f3(const F3Code& x, const F3Code& y) {
  if (x == y) return false;
  int agree = (x.a == y.a) + (x.b == y.b) + (x.c == y.c);
  return agree == 1;
}

bool t_adjacent_zp(const FpVec& x, const FpVec& y) {
  if (x == y) return false;
  int agree = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] == y[i]) ++agree;
  return agree == 1;
}

}  // namespace rootfp
