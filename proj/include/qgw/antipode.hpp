#pragma once

// The involutive operator K on H_psi, built from slices of the left regular
// representation, and its polar decomposition into the unitary antipode R
// and the scaling group tau.

#include "qgw/quantum_group.hpp"

namespace qgw {

struct KGenerators {
  Mat xi;   // columns: Lambda_psi((id⊗omega(c . d*))W)
  Mat kxi;  // columns: Lambda_psi((id⊗omegabar(d . c*))W)
};

// w_psi acts on H_psi ⊗ H_phi; omega ranges over all omega_kl = <. e_k, e_l>.
inline KGenerators k_generators(const GnsData& gphi, const GnsData& gpsi, const Mat& w_psi) {
  const Index n = gphi.dim();
  const Index count = n * n * n * n;
  KGenerators g{Mat(n, count), Mat(n, count)};
  const Vec one = gpsi.lambda(gpsi.algebra().unit());
  const Mat id = identity(n);
  Index col = 0;
  for (Index c = 0; c < n; ++c) {
    const Mat& pc = gphi.rep()[c];
    for (Index d = 0; d < n; ++d) {
      const Mat& pd = gphi.rep()[d];
      Mat fwd = kron(id, pc) * w_psi * kron(id, Mat(pd.adjoint()));
      Mat bwd = kron(id, pd) * w_psi * kron(id, Mat(pc.adjoint()));
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l, ++col) {
          g.xi.col(col) = slice_right(fwd, n, n, k, l) * one;
          g.kxi.col(col) = slice_right(bwd, n, n, l, k) * one;
        }
    }
  }
  return g;
}

inline AntilinearOperator build_K(const GnsData& gphi, const GnsData& gpsi, const Mat& w_psi) {
  const Index n = gpsi.dim();
  KGenerators g = k_generators(gphi, gpsi, w_psi);
  if (numerical_rank(g.xi) < n)
    throw Error(ErrorKind::RankDeficient, "generating vectors do not span H_psi");
  // mat * conj(xi) = kxi
  Mat a = g.xi.conjugate().transpose();
  Mat mt = Eigen::CompleteOrthogonalDecomposition<Mat>(a).solve(Mat(g.kxi.transpose()));
  Mat mat = mt.transpose();
  double res = max_abs(Mat(mat * g.xi.conjugate() - g.kxi));
  if (res > 1e-8 * std::max(1.0, max_abs(g.kxi)))
    throw Error(ErrorKind::InconsistentAssignment,
                "generating data do not define an antilinear map (residual " +
                    std::to_string(res) + ")");
  return AntilinearOperator(mat);
}

struct AntipodeData {
  GnsData gpsi;
  AntilinearOperator K;
  AntilinearOperator I;
  Mat L;
  Mat log_L;
  Mat R;  // coordinate matrix of the unitary antipode
  Mat S;  // coordinate matrix of the antipode
  double membership = 0.0;

  // tau_z(x) = L^{iz} x L^{-iz}; z may be complex.
  Mat tau(cplx z) const {
    Mat a = positive_power(L, kI * z);
    Mat b = positive_power(L, -kI * z);
    return map_matrix(gpsi.dim(), [&](const Element& x) { return gpsi.element_of(a * gpsi.pi(x) * b); });
  }
  Mat tau(double t) const { return tau(cplx(t, 0.0)); }
};

inline AntipodeData polar_antipode(const GnsData& gpsi, const AntilinearOperator& K) {
  const Index n = gpsi.dim();
  double inv = residual(K.compose(K), identity(n));
  if (inv > 1e-8 * std::max(1.0, max_abs(K.matrix())))
    throw Error(ErrorKind::NotInvolutive, "K∘K differs from the identity by " + std::to_string(inv));
  AntipodeData a;
  a.gpsi = gpsi;
  a.K = K;
  auto p = polar(K);
  a.I = p.phase;
  a.L = p.positive;
  a.log_L = positive_log(a.L);
  a.R = map_matrix(n, [&](const Element& x) {
    return gpsi.element_of(a.I.sandwich(Mat(gpsi.pi(x).adjoint())));
  });
  a.S = a.R * a.tau(cplx(0.0, -0.5));

  Mat l1 = unitary_power(a.L, 1.0), l1i = unitary_power(a.L, -1.0);
  for (Index j = 0; j < n; ++j) {
    Mat x = gpsi.rep()[j];
    a.membership = std::max(a.membership, gpsi.membership_residual(a.I.sandwich(x)));
    a.membership = std::max(a.membership, gpsi.membership_residual(Mat(l1 * x * l1i)));
  }
  return a;
}

}  // namespace qgw
