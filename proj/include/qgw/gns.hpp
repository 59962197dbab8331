#pragma once

// GNS spaces of faithful positive functionals and their (relative)
// Tomita-Takesaki data.  Everything lives in the orthonormal frame
// obtained from the Cholesky factor of the Gram matrix.

#include "qgw/algebra.hpp"

#include <vector>

namespace qgw {

class GnsData {
 public:
  GnsData() = default;

  GnsData(const AlgebraSpec& alg, const LinearFunctional& phi) : alg_(alg), phi_(phi) {
    const Index n = alg.dim();
    require_dim(phi.dim(), n, "functional");
    gram_ = gram_matrix(alg, phi);
    Mat q = hermitian_part(Mat(gram_.transpose()));
    auto ev = hermitian_eigenvalues(q);
    if (ev.minCoeff() < -1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff()))
      throw Error(ErrorKind::NotPositive, "Gram matrix has a negative eigenvalue");
    if (!is_positive_definite(q))
      throw Error(ErrorKind::NotFaithful, "Gram matrix is singular");
    Eigen::LLT<Mat> llt(q);
    if (llt.info() != Eigen::Success) throw Error(ErrorKind::NotFaithful, "Cholesky failed");
    frame_ = llt.matrixL().adjoint();
    frame_inv_ = frame_.triangularView<Eigen::Upper>().solve(identity(n));
    rep_.reserve(static_cast<size_t>(n));
    Mat stacked(n * n, n);
    for (Index i = 0; i < n; ++i) {
      rep_.push_back(frame_ * alg.left(i) * frame_inv_);
      stacked.col(i) = vec(rep_.back());
    }
    span_ = SpanSolver(stacked);
  }

  const AlgebraSpec& algebra() const { return alg_; }
  const LinearFunctional& functional() const { return phi_; }
  Index dim() const { return alg_.dim(); }
  const Mat& gram() const { return gram_; }
  // Lambda(x) = frame * x
  const Mat& frame() const { return frame_; }
  const Mat& frame_inv() const { return frame_inv_; }
  const std::vector<Mat>& rep() const { return rep_; }

  Vec lambda(const Element& x) const { return frame_ * x; }
  Element unlambda(const Vec& v) const { return frame_inv_ * v; }

  Mat pi(const Element& x) const {
    require_dim(x.size(), dim(), "element");
    Mat out = Mat::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (x(i) != cplx(0.0)) out += x(i) * rep_[static_cast<size_t>(i)];
    return out;
  }

  // Coordinates of an operator in pi(M), by least squares.
  Element element_of(const Mat& op) const { return span_.coordinates(vec(op)); }
  // Distance of op from pi(M).
  double membership_residual(const Mat& op) const { return span_.residual(vec(op)); }

  // Matrix of an algebra map A (coordinates) as an operator: x -> pi(A x) acts
  // on vectors Lambda(y) by Lambda(y) -> Lambda(A y).
  Mat transport(const Mat& algebra_map) const { return frame_ * algebra_map * frame_inv_; }

 private:
  AlgebraSpec alg_;
  LinearFunctional phi_;
  Mat gram_, frame_, frame_inv_;
  std::vector<Mat> rep_;
  SpanSolver span_;
};

inline GnsData gns(const AlgebraSpec& alg, const LinearFunctional& phi) { return GnsData(alg, phi); }

struct ModularData {
  Mat nabla;
  AntilinearOperator J;
  AntilinearOperator T;
  Mat log_nabla;

  // Algebra automorphism sigma_z as a matrix on coordinates; z may be complex.
  Mat sigma(const GnsData& g, cplx z) const {
    Mat a = positive_power(nabla, kI * z);
    Mat b = positive_power(nabla, -kI * z);
    return map_matrix(g.dim(), [&](const Element& x) { return g.element_of(a * g.pi(x) * b); });
  }
  Mat sigma(const GnsData& g, double t) const { return sigma(g, cplx(t, 0.0)); }
  Mat nabla_it(double t) const { return unitary_power(nabla, t); }
};

inline ModularData tomita(const GnsData& g) {
  ModularData m;
  const Mat& s = g.algebra().star_matrix();
  m.T = AntilinearOperator(Mat(g.frame() * s * g.frame_inv().conjugate()));
  m.nabla = hermitian_part(m.T.gram());
  auto p = polar(m.T);
  m.J = p.phase;
  m.log_nabla = positive_log(m.nabla);
  return m;
}

struct RelativeModularData {
  AntilinearOperator T_r;  // H_1 -> H_2
  Mat nabla_r;             // on H_1
  AntilinearOperator J_r;
  Mat nabla_1;

  // u_t = nabla_1^{it} nabla_r^{-it}, as an operator on H_1
  Mat cocycle_operator(double t) const {
    return unitary_power(nabla_1, t) * unitary_power(nabla_r, -t);
  }
  Element cocycle(const GnsData& g1, double t) const {
    return g1.element_of(cocycle_operator(t));
  }
};

inline RelativeModularData relative_tomita(const GnsData& g1, const GnsData& g2) {
  require_dim(g1.dim(), g2.dim(), "functional pair");
  RelativeModularData r;
  const Mat& s = g1.algebra().star_matrix();
  r.T_r = AntilinearOperator(Mat(g2.frame() * s * g1.frame_inv().conjugate()));
  r.nabla_r = hermitian_part(r.T_r.gram());
  r.J_r = polar(r.T_r).phase;
  r.nabla_1 = tomita(g1).nabla;
  return r;
}

inline RelativeModularData relative_tomita(const AlgebraSpec& alg, const LinearFunctional& phi1,
                                           const LinearFunctional& phi2) {
  return relative_tomita(gns(alg, phi1), gns(alg, phi2));
}

// phi(x y) - phi(y sigma_{-i}(x)) over all basis pairs.
inline double kms_residual(const GnsData& g, const ModularData& m) {
  const auto& alg = g.algebra();
  const auto& phi = g.functional();
  Mat s = m.sigma(g, cplx(0.0, -1.0));
  double r = 0.0;
  for (Index i = 0; i < alg.dim(); ++i) {
    Vec sx = s.col(i);
    for (Index j = 0; j < alg.dim(); ++j)
      r = std::max(r, std::abs(phi(alg.left(i).col(j)) - phi(alg.multiply(alg.basis(j), sx))));
  }
  return r;
}

}  // namespace qgw
