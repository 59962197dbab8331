#pragma once

// Coproducts, Haar functionals, regular representations, and the
// modular element of a finite-dimensional quantum group.

#include "qgw/gns.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qgw {

struct Residual {
  std::string name;
  double value = 0.0;
};

struct CheckReport {
  std::vector<Residual> items;

  void add(std::string name, double value) { items.push_back({std::move(name), value}); }
  void append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
  double worst() const {
    double w = 0.0;
    for (const auto& r : items) w = std::max(w, r.value);
    return w;
  }
  double value(const std::string& name) const {
    for (const auto& r : items)
      if (r.name == name) return r.value;
    throw Error(ErrorKind::InvalidInput, "no residual named " + name);
  }
};

// Delta as an (n^2 x n) matrix; row a*n+b holds the e_a ⊗ e_b coefficient.
using Coproduct = Mat;

inline void require_coproduct_shape(const AlgebraSpec& alg, const Coproduct& delta) {
  require_dim(delta.rows(), alg.dim() * alg.dim(), "coproduct rows");
  require_dim(delta.cols(), alg.dim(), "coproduct cols");
}

// (A⊗B) applied to an element of the tensor square, A and B as coordinate maps.
inline Mat tensor_map(const Mat& a, const Mat& b) { return kron(a, b); }

inline std::vector<Violation> validate_coproduct(const AlgebraSpec& alg, const Coproduct& delta,
                                                 double tol = kDefaultTol) {
  require_coproduct_shape(alg, delta);
  std::vector<Violation> out;
  const Index n = alg.dim();
  const double bound = tol * std::max(alg.scale(), max_abs(delta));
  const AlgebraSpec sq = tensor(alg, alg);

  double hom = 0.0;
  for (Index i = 0; i < n; ++i) {
    Mat li = sq.left_matrix(delta.col(i));
    for (Index j = 0; j < n; ++j) {
      Vec lhs = delta * alg.left(i).col(j);
      Vec rhs = li * delta.col(j);
      hom = std::max(hom, max_abs(Vec(lhs - rhs)));
    }
  }
  if (hom > bound) out.push_back({"multiplicative", hom, "Delta(xy) != Delta(x)Delta(y)"});

  double st = residual(Mat(delta * alg.star_matrix()),
                       Mat(sq.star_matrix() * delta.conjugate()));
  if (st > bound) out.push_back({"star-preserving", st, "Delta(x*) != Delta(x)*"});

  double un = max_abs(Vec(delta * alg.unit() - kron(alg.unit(), alg.unit())));
  if (un > bound) out.push_back({"unital", un, "Delta(1) != 1⊗1"});

  Mat id = identity(n);
  double co = residual(Mat(kron(delta, id) * delta), Mat(kron(id, delta) * delta));
  if (co > bound) out.push_back({"coassociative", co, "(Delta⊗id)Delta != (id⊗Delta)Delta"});
  return out;
}

// Dimensions of {x : Delta(x) = x⊗1} and {x : Delta(x) = 1⊗x}.
struct ScalarKernel {
  Index x_tensor_one = 0;
  Index one_tensor_x = 0;
};

inline ScalarKernel scalar_kernel(const AlgebraSpec& alg, const Coproduct& delta) {
  require_coproduct_shape(alg, delta);
  const Index n = alg.dim();
  Mat u = alg.unit();
  Mat right = delta - kron(identity(n), u);
  Mat left = delta - kron(u, identity(n));
  return {n - numerical_rank(right), n - numerical_rank(left)};
}

struct HaarPair {
  LinearFunctional phi;  // left invariant
  LinearFunctional psi;  // right invariant
  Index left_nullity = 0;
  Index right_nullity = 0;
  double left_residual = 0.0;
  double right_residual = 0.0;
};

// Rows (a, j):  sum_b Delta_{ab,j} phi_b - unit_a phi_j
inline Mat left_invariance_system(const AlgebraSpec& alg, const Coproduct& delta) {
  const Index n = alg.dim();
  Mat sys = Mat::Zero(n * n, n);
  for (Index a = 0; a < n; ++a)
    for (Index j = 0; j < n; ++j) {
      for (Index b = 0; b < n; ++b) sys(a * n + j, b) += delta(a * n + b, j);
      sys(a * n + j, j) -= alg.unit()(a);
    }
  return sys;
}

// Rows (b, j):  sum_a Delta_{ab,j} psi_a - unit_b psi_j
inline Mat right_invariance_system(const AlgebraSpec& alg, const Coproduct& delta) {
  const Index n = alg.dim();
  Mat sys = Mat::Zero(n * n, n);
  for (Index b = 0; b < n; ++b)
    for (Index j = 0; j < n; ++j) {
      for (Index a = 0; a < n; ++a) sys(b * n + j, a) += delta(a * n + b, j);
      sys(b * n + j, j) -= alg.unit()(b);
    }
  return sys;
}

namespace detail {

inline Vec invariant_vector(const Mat& sys, Index& nullity, const char* side) {
  auto svd = svd_summary(sys, 1e-10);
  nullity = svd.null_basis.cols();
  if (nullity == 0)
    throw Error(ErrorKind::NoInvariantFunctional, std::string("no ") + side + " invariant functional");
  if (nullity > 1)
    throw Error(ErrorKind::NonUniqueInvariant,
                std::string(side) + " invariant functionals form a space of dimension " +
                    std::to_string(nullity));
  return svd.null_basis.col(0);
}

inline LinearFunctional normalized(const Vec& v, const Vec& unit, cplx target) {
  cplx at_one = (v.transpose() * unit)(0);
  if (std::abs(at_one) < 1e-12)
    throw Error(ErrorKind::NotPositive, "invariant functional vanishes on the unit");
  return LinearFunctional(Vec(v * (target / at_one)));
}

inline void require_positive_faithful(const AlgebraSpec& alg, LinearFunctional& w,
                                      const char* side) {
  w = classify(alg, w);
  if (!*w.positive) throw Error(ErrorKind::NotPositive, std::string(side) + " Haar functional");
  if (!*w.faithful) throw Error(ErrorKind::NotFaithful, std::string(side) + " Haar functional");
}

}  // namespace detail

// phi is normalised to phi(1) = 1 unless a left invariant functional is
// supplied; psi is scaled so that psi(1) = phi(1).
inline HaarPair solve_haar(const AlgebraSpec& alg, const Coproduct& delta,
                           const std::optional<LinearFunctional>& phi_given = std::nullopt) {
  require_coproduct_shape(alg, delta);
  HaarPair h;
  Mat lsys = left_invariance_system(alg, delta);
  Mat rsys = right_invariance_system(alg, delta);
  Vec l = detail::invariant_vector(lsys, h.left_nullity, "left");
  Vec r = detail::invariant_vector(rsys, h.right_nullity, "right");
  if (phi_given) {
    require_dim(phi_given->dim(), alg.dim(), "supplied functional");
    h.phi = LinearFunctional(phi_given->covector());
  } else {
    h.phi = detail::normalized(l, alg.unit(), 1.0);
  }
  h.psi = detail::normalized(r, alg.unit(), h.phi(alg.unit()));
  const double scale = std::max(1.0, max_abs(h.phi.covector()));
  h.left_residual = max_abs(Vec(lsys * h.phi.covector())) / scale;
  h.right_residual = max_abs(Vec(rsys * h.psi.covector())) / scale;
  if (h.left_residual > 1e-8)
    throw Error(ErrorKind::InvalidInput, "supplied functional is not left invariant");
  detail::require_positive_faithful(alg, h.phi, "left");
  detail::require_positive_faithful(alg, h.psi, "right");
  return h;
}

// (pi1 ⊗ pi2)(z) for z in the tensor square.
inline Mat tensor_operator(const GnsData& g1, const GnsData& g2, const Vec& z) {
  const Index n1 = g1.dim(), n2 = g2.dim();
  require_dim(z.size(), n1 * n2, "tensor element");
  Mat out = Mat::Zero(n1 * n2, n1 * n2);
  for (Index a = 0; a < n1; ++a)
    for (Index b = 0; b < n2; ++b) {
      cplx c = z(a * n2 + b);
      if (c != cplx(0.0)) out += c * kron(g1.rep()[a], g2.rep()[b]);
    }
  return out;
}

struct RegularRepresentations {
  Mat W;      // on H_phi ⊗ H_phi
  Mat W_psi;  // on H_psi ⊗ H_phi, same unitary with the first leg in the psi picture
  Mat V;      // on H_psi ⊗ H_phi
};

namespace detail {

// sum Delta_{ab,j} pi(e_a) ⊗ E_{bj}, conjugated by the frame on the second leg
inline Mat left_unitary_adjoint(const GnsData& first, const GnsData& gphi, const Coproduct& delta) {
  const Index n = gphi.dim();
  Mat x = Mat::Zero(n * n, n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index j = 0; j < n; ++j) {
        cplx c = delta(a * n + b, j);
        if (c == cplx(0.0)) continue;
        Mat ebj = Mat::Zero(n, n);
        ebj(b, j) = 1.0;
        x += c * kron(first.rep()[a], ebj);
      }
  return kron(identity(n), gphi.frame()) * x * kron(identity(n), gphi.frame_inv());
}

}  // namespace detail

inline RegularRepresentations build_regular_reps(const AlgebraSpec& alg, const Coproduct& delta,
                                                 const GnsData& gphi, const GnsData& gpsi,
                                                 double tol = kDefaultTol) {
  require_coproduct_shape(alg, delta);
  const Index n = alg.dim();
  RegularRepresentations r;
  r.W = detail::left_unitary_adjoint(gphi, gphi, delta).adjoint();
  r.W_psi = detail::left_unitary_adjoint(gpsi, gphi, delta).adjoint();

  Mat y = Mat::Zero(n * n, n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index j = 0; j < n; ++j) {
        cplx c = delta(a * n + b, j);
        if (c == cplx(0.0)) continue;
        Mat eaj = Mat::Zero(n, n);
        eaj(a, j) = 1.0;
        y += c * kron(eaj, gphi.rep()[b]);
      }
  r.V = kron(gpsi.frame(), identity(n)) * y * kron(gpsi.frame_inv(), identity(n));

  const double bound = std::max(tol, 1e-8);
  if (unitarity_residual(r.W) > bound)
    throw Error(ErrorKind::NotUnitary, "left regular representation is not unitary");
  if (unitarity_residual(r.V) > bound)
    throw Error(ErrorKind::NotUnitary, "right regular representation is not unitary");
  return r;
}

inline double pentagon_residual(const Mat& w, Index n) {
  Mat w12 = kron(w, identity(n));
  Mat w23 = kron(identity(n), w);
  Mat p = flip23(n, n, n);
  Mat w13 = p * w12 * p;
  return residual(Mat(w12 * w13 * w23), Mat(w23 * w12));
}

// Characterising identities and leg formulas of W and V.
inline CheckReport regular_rep_residuals(const AlgebraSpec& alg, const Coproduct& delta,
                                         const GnsData& gphi, const GnsData& gpsi,
                                         const RegularRepresentations& r) {
  const Index n = alg.dim();
  CheckReport rep;
  rep.add("W unitary", unitarity_residual(r.W));
  rep.add("V unitary", unitarity_residual(r.V));
  rep.add("pentagon", pentagon_residual(r.W, n));

  double dw = 0.0, dv = 0.0;
  Mat wadj = r.W.adjoint();
  for (Index j = 0; j < n; ++j) {
    Vec e = alg.basis(j);
    Vec dx = delta.col(j);
    Mat lhs_w = wadj * kron(identity(n), gphi.pi(e)) * r.W;
    dw = std::max(dw, residual(lhs_w, tensor_operator(gphi, gphi, dx)));
    Mat lhs_v = r.V * kron(gpsi.pi(e), identity(n)) * r.V.adjoint();
    dv = std::max(dv, residual(lhs_v, tensor_operator(gpsi, gphi, dx)));
  }
  rep.add("Delta = W*(1⊗x)W", dw);
  rep.add("Delta = V(x⊗1)V*", dv);

  // ((omega⊗id)W*) Lambda(x) = Lambda((omega⊗id)Delta(x)),  omega = omega_kl on the first leg
  double cw = 0.0;
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) {
      Mat s = slice_left(wadj, n, n, k, l);
      for (Index j = 0; j < n; ++j) {
        Vec slice = Vec::Zero(n);
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) slice(b) += gphi.rep()[a](l, k) * delta(a * n + b, j);
        cw = std::max(cw, max_abs(Vec(s * gphi.lambda(alg.basis(j)) - gphi.lambda(slice))));
      }
    }
  rep.add("W characterisation", cw);

  double cv = 0.0;
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) {
      Mat s = slice_right(r.V, n, n, k, l);
      for (Index j = 0; j < n; ++j) {
        Vec slice = Vec::Zero(n);
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) slice(a) += gphi.rep()[b](l, k) * delta(a * n + b, j);
        cv = std::max(cv, max_abs(Vec(s * gpsi.lambda(alg.basis(j)) - gpsi.lambda(slice))));
      }
    }
  rep.add("V characterisation", cv);

  // (Delta⊗id)W = W13 W23
  Mat p = flip23(n, n, n);
  Mat w13 = p * kron(r.W, identity(n)) * p;
  Mat w23 = kron(identity(n), r.W);
  Mat dwl = map_left_leg(r.W, n, n, [&](const Mat& s) {
    return tensor_operator(gphi, gphi, Vec(delta * gphi.element_of(s)));
  });
  rep.add("(Delta⊗id)W = W13W23", residual(dwl, Mat(w13 * w23)));

  // (id⊗Delta)V = V12 V13
  Mat v12 = kron(r.V, identity(n));
  Mat v13 = p * v12 * p;
  Mat dvr = map_right_leg(r.V, n, n, [&](const Mat& s) {
    return tensor_operator(gphi, gphi, Vec(delta * gphi.element_of(s)));
  });
  rep.add("(id⊗Delta)V = V12V13", residual(dvr, Mat(v12 * v13)));
  return rep;
}

struct DensityRanks {
  Index left_leg_of_W = 0;     // span{(id⊗omega)W}
  Index coproduct_slices = 0;  // span{(omega⊗id)Delta(x)}
  Index delta_times_one = 0;   // span{Delta(x)(1⊗y)}
};

inline DensityRanks check_densities(const AlgebraSpec& alg, const Coproduct& delta,
                                    const GnsData& gphi, const RegularRepresentations& r) {
  const Index n = alg.dim();
  DensityRanks d;
  Mat slices(n * n, n * n);
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) slices.col(k * n + l) = vec(slice_right(r.W, n, n, k, l));
  d.left_leg_of_W = numerical_rank(slices);
  (void)gphi;

  Mat cs(n, n * n);
  for (Index a = 0; a < n; ++a)
    for (Index j = 0; j < n; ++j)
      for (Index b = 0; b < n; ++b) cs(b, a * n + j) = delta(a * n + b, j);
  d.coproduct_slices = numerical_rank(cs);

  const AlgebraSpec sq = tensor(alg, alg);
  Mat prod(n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      prod.col(i * n + j) = sq.multiply(delta.col(i), kron(alg.unit(), alg.basis(j)));
  d.delta_times_one = numerical_rank(prod);
  return d;
}

// Counit from (eps⊗id)Delta = id, least squares.
struct Counit {
  Vec eps;
  double residual = 0.0;
};

inline Counit solve_counit(const AlgebraSpec& alg, const Coproduct& delta) {
  const Index n = alg.dim();
  Mat sys(n * n, n);
  Vec rhs = Vec::Zero(n * n);
  for (Index b = 0; b < n; ++b)
    for (Index j = 0; j < n; ++j) {
      for (Index a = 0; a < n; ++a) sys(b * n + j, a) = delta(a * n + b, j);
      if (b == j) rhs(b * n + j) = 1.0;
    }
  Counit c;
  c.eps = Eigen::CompleteOrthogonalDecomposition<Mat>(sys).solve(rhs);
  double r = max_abs(Vec(sys * c.eps - rhs));
  // (id⊗eps)Delta = id as well
  for (Index a = 0; a < n; ++a)
    for (Index j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (Index b = 0; b < n; ++b) s += delta(a * n + b, j) * c.eps(b);
      r = std::max(r, std::abs(s - cplx(a == j ? 1.0 : 0.0)));
    }
  c.residual = r;
  return c;
}

struct ModularElementData {
  Element delta;        // the modular element
  Element delta_sqrt;   // its positive square root
  double nu = 1.0;      // scaling constant
  double nu_spread = 0.0;
  double fit_residual = 0.0;
  double solve_residual = 0.0;
};

// Requires a tracial phi; tau(t) returns the scaling automorphism as a
// coordinate matrix.
inline ModularElementData modular_element(const GnsData& gphi, const HaarPair& haar,
                                          const std::function<Mat(double)>& tau) {
  const AlgebraSpec& alg = gphi.algebra();
  const Index n = alg.dim();
  const double scale = std::max(1.0, max_abs(haar.phi.covector()));
  if (trace_defect(alg, haar.phi) > 1e-9 * scale)
    throw Error(ErrorKind::NonTracialUnsupported, "left Haar functional is not a trace");

  // psi_j = sum_i delta_i phi(e_i e_j)
  Mat g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(j, i) = haar.phi(alg.left(i).col(j));
  ModularElementData m;
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible()) throw Error(ErrorKind::NotFaithful, "trace form is degenerate");
  m.delta = lu.solve(haar.psi.covector());
  m.solve_residual = max_abs(Vec(g * m.delta - haar.psi.covector()));

  Mat d = gphi.pi(m.delta);
  if (residual(d, Mat(d.adjoint())) > 1e-8 * std::max(1.0, max_abs(d)) || !is_positive_definite(d))
    throw Error(ErrorKind::NotPositive, "modular element is not positive invertible");
  m.delta_sqrt = gphi.element_of(positive_power(d, 0.5));

  const std::array<double, 4> ts{1.0, -1.0, 0.5, -0.5};
  const Vec& p = haar.phi.covector();
  const double pp = p.squaredNorm();
  double lo = 1e300, hi = -1e300;
  for (double t : ts) {
    Vec pt = tau(t).transpose() * p;
    cplx lam = p.dot(pt) / pp;  // phi∘tau_t = lam phi
    m.fit_residual = std::max(m.fit_residual, max_abs(Vec(pt - lam * p)) / std::sqrt(pp));
    if (lam.real() <= 0.0) throw Error(ErrorKind::NotPositive, "phi∘tau_t is not a positive multiple of phi");
    double nu_t = std::pow(lam.real(), -1.0 / t);
    lo = std::min(lo, nu_t);
    hi = std::max(hi, nu_t);
  }
  m.nu = 0.5 * (lo + hi);
  m.nu_spread = hi - lo;
  if (m.nu_spread > 1e-9 * m.nu)
    throw Error(ErrorKind::InconsistentAssignment, "scaling constant fit is not constant in t");
  return m;
}

}  // namespace qgw
