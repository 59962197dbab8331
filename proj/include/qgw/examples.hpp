#pragma once

// Shipped specimens: function and group algebras of small finite groups,
// the eight-dimensional Kac-Paljutkin algebra, matrix algebras for the
// modular engine, and a negative specimen that is not a quantum group.

#include "qgw/quantum_group.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgw {

struct GroupTable {
  std::string name;
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of ab

  int order() const { return static_cast<int>(mul.size()); }
};

struct GroupInfo {
  int identity = 0;
  std::vector<int> inverse;
  bool abelian = true;
};

inline GroupInfo check_group(const GroupTable& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (const auto& row : g.mul) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::NotAGroup, "table is not closed");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw Error(ErrorKind::NotAGroup, "multiplication is not associative");
  GroupInfo info;
  info.identity = -1;
  for (int e = 0; e < n && info.identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul[e][a] == a && g.mul[a][e] == a;
    if (ok) info.identity = e;
  }
  if (info.identity < 0) throw Error(ErrorKind::NotAGroup, "no identity element");
  info.inverse.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == info.identity && g.mul[b][a] == info.identity) info.inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (info.inverse[a] < 0) throw Error(ErrorKind::NotAGroup, "element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] != g.mul[b][a]) info.abelian = false;
  return info;
}

namespace detail {

using IntMatrix = std::vector<int>;  // row-major k x k

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, int k) {
  IntMatrix c(static_cast<size_t>(k * k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) c[i * k + j] += a[i * k + l] * b[l * k + j];
  return c;
}

// Closure of integer matrix generators, breadth first from the identity.
inline GroupTable generated_group(std::string name, const std::vector<IntMatrix>& gens, int k) {
  IntMatrix id(static_cast<size_t>(k * k), 0);
  for (int i = 0; i < k; ++i) id[i * k + i] = 1;
  std::vector<IntMatrix> elems{id};
  std::map<IntMatrix, int> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      IntMatrix p = int_mul(elems[head], g, k);
      if (!index.count(p)) {
        index[p] = static_cast<int>(elems.size());
        elems.push_back(p);
      }
    }
  GroupTable t{std::move(name), {}};
  const int n = static_cast<int>(elems.size());
  t.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mul[a][b] = index.at(int_mul(elems[a], elems[b], k));
  return t;
}

}  // namespace detail

inline GroupTable cyclic_group(int n) {
  GroupTable t{"Z" + std::to_string(n), {}};
  t.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
  return t;
}

inline GroupTable symmetric_group_3() {
  // transposition (0 1) and 3-cycle as permutation matrices
  return detail::generated_group("S3", {{0, 1, 0, 1, 0, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 0, 0, 1, 0}}, 3);
}

inline GroupTable dihedral_group_4() {
  // quarter turn and a reflection of the plane
  return detail::generated_group("D4", {{0, -1, 1, 0}, {1, 0, 0, -1}}, 2);
}

inline GroupTable quaternion_group() {
  // left multiplication by i and j on the quaternions, basis (1, i, j, k)
  detail::IntMatrix qi{0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0};
  detail::IntMatrix qj{0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0};
  return detail::generated_group("Q8", {qi, qj}, 4);
}

inline GroupTable group_by_name(const std::string& name) {
  if (name == "trivial") return cyclic_group(1);
  if (name == "z2") return cyclic_group(2);
  if (name == "z3") return cyclic_group(3);
  if (name == "z4") return cyclic_group(4);
  if (name == "s3") return symmetric_group_3();
  if (name == "d4") return dihedral_group_4();
  if (name == "q8") return quaternion_group();
  throw Error(ErrorKind::InvalidInput, "unknown group " + name);
}

struct Specimen {
  std::string name;
  AlgebraSpec alg;
  Coproduct delta;
};

// C(G) in the basis of point masses, Delta(f)(r, s) = f(rs).
inline Specimen build_function_algebra(const GroupTable& g) {
  check_group(g);
  const Index n = g.order();
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
  auto alg = AlgebraSpec::from_products(
      labels,
      [n](Index i, Index j) {
        Vec v = Vec::Zero(n);
        if (i == j) v(i) = 1.0;
        return v;
      },
      identity(n), Vec::Ones(n));
  Coproduct d = Mat::Zero(n * n, n);
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s) d(r * n + s, g.mul[r][s]) += 1.0;
  return {"C(" + g.name + ")", alg, d};
}

// C[G] in the basis of group elements, Delta(g) = g ⊗ g.
inline Specimen build_group_algebra(const GroupTable& g) {
  GroupInfo info = check_group(g);
  const Index n = g.order();
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back("l" + std::to_string(i));
  auto alg = AlgebraSpec::from_products(
      labels,
      [&](Index i, Index j) {
        Vec v = Vec::Zero(n);
        v(g.mul[i][j]) = 1.0;
        return v;
      },
      [&] {
        Mat s = Mat::Zero(n, n);
        for (Index i = 0; i < n; ++i) s(info.inverse[i], i) = 1.0;
        return s;
      }(),
      [&] {
        Vec u = Vec::Zero(n);
        u(info.identity) = 1.0;
        return u;
      }());
  Coproduct d = Mat::Zero(n * n, n);
  for (Index i = 0; i < n; ++i) d(i * n + i, i) = 1.0;
  return {"C[" + g.name + "]", alg, d};
}

// Direct sum of full matrix algebras; basis = matrix units block by block.
struct BlockAlgebra {
  AlgebraSpec alg;
  std::vector<int> blocks;
  std::vector<Index> offsets;  // first basis index of each block

  Index index(size_t block, int i, int j) const { return offsets[block] + i * blocks[block] + j; }
};

inline BlockAlgebra build_matrix_algebra(const std::vector<int>& blocks) {
  BlockAlgebra b;
  b.blocks = blocks;
  Index n = 0;
  for (int m : blocks) {
    b.offsets.push_back(n);
    n += static_cast<Index>(m) * m;
  }
  std::vector<std::string> labels(static_cast<size_t>(n));
  struct Unit { size_t block; int i, j; };
  std::vector<Unit> units(static_cast<size_t>(n));
  for (size_t k = 0; k < blocks.size(); ++k)
    for (int i = 0; i < blocks[k]; ++i)
      for (int j = 0; j < blocks[k]; ++j) {
        Index idx = b.offsets[k] + i * blocks[k] + j;
        units[idx] = {k, i, j};
        labels[idx] = "E" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j);
      }
  Mat star = Mat::Zero(n, n);
  Vec unit = Vec::Zero(n);
  for (Index a = 0; a < n; ++a) {
    const auto& u = units[a];
    star(b.offsets[u.block] + u.j * blocks[u.block] + u.i, a) = 1.0;
    if (u.i == u.j) unit(a) = 1.0;
  }
  b.alg = AlgebraSpec::from_products(
      labels,
      [&](Index x, Index y) {
        Vec v = Vec::Zero(n);
        const auto& p = units[x];
        const auto& q = units[y];
        if (p.block == q.block && p.j == q.i) v(b.offsets[p.block] + p.i * blocks[p.block] + q.j) = 1.0;
        return v;
      },
      star, unit);
  return b;
}

// x -> sum_k Tr(rho_k x_k)
inline LinearFunctional density_functional(const BlockAlgebra& b, const std::vector<Mat>& rhos) {
  require_dim(static_cast<Index>(rhos.size()), static_cast<Index>(b.blocks.size()), "densities");
  Vec c = Vec::Zero(b.alg.dim());
  for (size_t k = 0; k < b.blocks.size(); ++k)
    for (int i = 0; i < b.blocks[k]; ++i)
      for (int j = 0; j < b.blocks[k]; ++j) c(b.index(k, i, j)) = rhos[k](j, i);
  return LinearFunctional(c);
}

// Kac-Paljutkin algebra C⊕C⊕C⊕C⊕M2, basis e1..e4, E11, E12, E21, E22.
inline Specimen build_kac_paljutkin() {
  BlockAlgebra b = build_matrix_algebra({1, 1, 1, 1, 2});
  std::vector<std::string> labels{"e1", "e2", "e3", "e4", "E11", "E12", "E21", "E22"};
  AlgebraSpec alg(labels, b.alg.left_mult(), b.alg.star_matrix(), b.alg.unit());

  enum { e1, e2, e3, e4, E11, E12, E21, E22 };
  const Index n = 8;
  Coproduct d = Mat::Zero(n * n, n);
  auto put = [&](int target, int a, int c, cplx v) { d(a * n + c, target) += v; };
  const cplx h = 0.5, ih = cplx(0.0, 0.5), i1 = kI;

  for (int k = e1; k <= e4; ++k) put(e1, k, k, 1.0);
  put(e1, E11, E11, h); put(e1, E12, E12, h); put(e1, E21, E21, h); put(e1, E22, E22, h);

  put(e2, e1, e2, 1.0); put(e2, e2, e1, 1.0); put(e2, e3, e4, 1.0); put(e2, e4, e3, 1.0);
  put(e2, E11, E22, h); put(e2, E22, E11, h); put(e2, E21, E12, ih); put(e2, E12, E21, -ih);

  put(e3, e1, e3, 1.0); put(e3, e3, e1, 1.0); put(e3, e2, e4, 1.0); put(e3, e4, e2, 1.0);
  put(e3, E11, E22, h); put(e3, E22, E11, h); put(e3, E21, E12, -ih); put(e3, E12, E21, ih);

  put(e4, e1, e4, 1.0); put(e4, e4, e1, 1.0); put(e4, e2, e3, 1.0); put(e4, e3, e2, 1.0);
  put(e4, E11, E11, h); put(e4, E22, E22, h); put(e4, E12, E12, -h); put(e4, E21, E21, -h);

  put(E11, e1, E11, 1.0); put(E11, E11, e1, 1.0); put(E11, e2, E22, 1.0); put(E11, E22, e2, 1.0);
  put(E11, e3, E22, 1.0); put(E11, E22, e3, 1.0); put(E11, e4, E11, 1.0); put(E11, E11, e4, 1.0);

  put(E12, e1, E12, 1.0); put(E12, E12, e1, 1.0); put(E12, e2, E21, i1); put(E12, E21, e2, -i1);
  put(E12, e3, E21, -i1); put(E12, E21, e3, i1); put(E12, e4, E12, -1.0); put(E12, E12, e4, -1.0);

  put(E21, e1, E21, 1.0); put(E21, E21, e1, 1.0); put(E21, e2, E12, -i1); put(E21, E12, e2, i1);
  put(E21, e3, E12, i1); put(E21, E12, e3, -i1); put(E21, e4, E21, -1.0); put(E21, E21, e4, -1.0);

  put(E22, e1, E22, 1.0); put(E22, E22, e1, 1.0); put(E22, e2, E11, 1.0); put(E22, E11, e2, 1.0);
  put(E22, e3, E11, 1.0); put(E22, E11, e3, 1.0); put(E22, e4, E22, 1.0); put(E22, E22, e4, 1.0);
  return {"KP8", alg, d};
}

// C^4 = C(Z2) ⊕ C(Z2), with the coproduct of functions on the semigroup
// Z2 x {0, 1}, (g, p)(h, q) = (gh, q).  A unital coassociative coproduct
// whose invariant functionals are not unique.
inline Specimen build_invalid_blocksum() {
  const Index n = 4;
  auto idx = [](int g, int p) { return p * 2 + g; };
  auto alg = AlgebraSpec::from_products(
      {"d(0,0)", "d(1,0)", "d(0,1)", "d(1,1)"},
      [n](Index i, Index j) {
        Vec v = Vec::Zero(n);
        if (i == j) v(i) = 1.0;
        return v;
      },
      identity(n), Vec::Ones(n));
  Coproduct d = Mat::Zero(n * n, n);
  for (int g = 0; g < 2; ++g)
    for (int p = 0; p < 2; ++p)
      for (int h = 0; h < 2; ++h)
        for (int q = 0; q < 2; ++q) d(idx(g, p) * n + idx(h, q), idx((g + h) % 2, q)) += 1.0;
  return {"blocksum_invalid", alg, d};
}

struct ExampleDescriptor {
  std::string name;
  std::string group;  // empty for non-group specimens
  enum Kind { Function, GroupAlgebra, KacPaljutkin, InvalidBlockSum } kind;
  Index dim;
  bool abelian;   // commutative algebra
  bool positive;  // a genuine finite quantum group
};

inline const std::vector<ExampleDescriptor>& example_catalog() {
  static const std::vector<ExampleDescriptor> cat = [] {
    std::vector<ExampleDescriptor> c;
    c.push_back({"trivial", "trivial", ExampleDescriptor::Function, 1, true, true});
    const std::vector<std::pair<std::string, std::pair<int, bool>>> groups{
        {"z2", {2, true}}, {"z3", {3, true}}, {"z4", {4, true}},
        {"s3", {6, false}}, {"d4", {8, false}}, {"q8", {8, false}}};
    for (const auto& [g, info] : groups)
      c.push_back({g + "_function", g, ExampleDescriptor::Function, info.first, true, true});
    for (const auto& [g, info] : groups)
      c.push_back({g + "_group", g, ExampleDescriptor::GroupAlgebra, info.first, info.second, true});
    c.push_back({"kp8", "", ExampleDescriptor::KacPaljutkin, 8, false, true});
    c.push_back({"blocksum_invalid", "", ExampleDescriptor::InvalidBlockSum, 4, true, false});
    return c;
  }();
  return cat;
}

inline std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& e : example_catalog()) out.push_back(e.name);
  return out;
}

inline const ExampleDescriptor& find_example(const std::string& name) {
  for (const auto& e : example_catalog())
    if (e.name == name) return e;
  throw Error(ErrorKind::InvalidInput, "unknown example " + name);
}

inline Specimen build_example(const std::string& name) {
  const auto& e = find_example(name);
  Specimen s;
  switch (e.kind) {
    case ExampleDescriptor::Function: s = build_function_algebra(group_by_name(e.group)); break;
    case ExampleDescriptor::GroupAlgebra: s = build_group_algebra(group_by_name(e.group)); break;
    case ExampleDescriptor::KacPaljutkin: s = build_kac_paljutkin(); break;
    case ExampleDescriptor::InvalidBlockSum: s = build_invalid_blocksum(); break;
  }
  s.name = name;
  return s;
}

}  // namespace qgw
