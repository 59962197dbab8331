#pragma once

// QuantumGroupData: every object attached to a finite quantum group,
// computed eagerly and then read-only.  Operators carrying a hat or a
// prime are expressed on H = H_phi.

#include "qgw/antipode.hpp"

#include <optional>
#include <string>

namespace qgw {

class QuantumGroupData {
 public:
  static QuantumGroupData build(const AlgebraSpec& alg, const Coproduct& delta,
                                std::string name = "",
                                const std::optional<LinearFunctional>& phi = std::nullopt,
                                double tol = kDefaultTol) {
    QuantumGroupData q;
    q.name_ = std::move(name);
    q.alg_ = alg;
    q.delta_ = delta;
    q.tol_ = tol;

    auto va = validate_algebra(alg, tol);
    if (!va.empty()) throw Error(ErrorKind::InvalidInput, "algebra axioms fail:\n" + describe(va));
    auto vc = validate_coproduct(alg, delta, tol);
    if (!vc.empty()) throw Error(ErrorKind::InvalidInput, "coproduct axioms fail:\n" + describe(vc));

    q.haar_ = solve_haar(alg, delta, phi);
    q.gphi_ = gns(alg, q.haar_.phi);
    q.gpsi_ = gns(alg, q.haar_.psi);
    q.mod_ = tomita(q.gphi_);
    q.mod_psi_ = tomita(q.gpsi_);
    q.reps_ = build_regular_reps(alg, delta, q.gphi_, q.gpsi_, tol);
    q.antipode_ = polar_antipode(q.gpsi_, build_K(q.gphi_, q.gpsi_, q.reps_.W_psi));
    q.counit_ = solve_counit(alg, delta);
    q.modular_ = modular_element(q.gphi_, q.haar_, [&q](double t) { return q.antipode_.tau(t); });
    q.derive();
    return q;
  }

  const std::string& name() const { return name_; }
  double tol() const { return tol_; }
  Index dim() const { return alg_.dim(); }
  const AlgebraSpec& algebra() const { return alg_; }
  const Coproduct& coproduct() const { return delta_; }
  const HaarPair& haar() const { return haar_; }
  const GnsData& gns_phi() const { return gphi_; }
  const GnsData& gns_psi() const { return gpsi_; }
  const ModularData& modular_phi() const { return mod_; }
  const ModularData& modular_psi() const { return mod_psi_; }
  const RegularRepresentations& regular() const { return reps_; }
  const Mat& W() const { return reps_.W; }
  const AntipodeData& antipode() const { return antipode_; }
  const Counit& counit() const { return counit_; }
  const ModularElementData& modular_element_data() const { return modular_; }
  double nu() const { return modular_.nu; }
  const Element& delta_element() const { return modular_.delta; }

  // Lambda_psi(x) = Lambda_phi(x delta^{1/2}) identifies H_psi with H.
  const Mat& U_psi() const { return u_psi_; }
  const Mat& lambda_psi_on_H() const { return e_psi_; }

  Mat pi(const Element& x) const { return gphi_.pi(x); }
  const Mat& J_matrix() const { return mod_.J.matrix(); }
  const AntilinearOperator& J() const { return mod_.J; }
  const Mat& nabla() const { return mod_.nabla; }
  const AntilinearOperator& K_on_H() const { return k_h_; }
  const AntilinearOperator& I_on_H() const { return i_h_; }
  const Mat& L_on_H() const { return l_h_; }
  const Mat& V_on_H() const { return v_h_; }
  const Mat& nabla_prime() const { return nabla_prime_; }
  const AntilinearOperator& J_prime() const { return j_prime_; }
  const AntilinearOperator& J_hat() const { return j_hat_; }
  const Mat& nabla_hat() const { return nabla_hat_; }
  const Mat& P() const { return p_; }
  const Mat& delta_operator() const { return delta_op_; }

  // Coordinate matrices of the automorphism groups and the unitary antipode.
  Mat sigma(double t) const { return mod_.sigma(gphi_, t); }
  Mat sigma(cplx z) const { return mod_.sigma(gphi_, z); }
  Mat sigma_prime(double t) const { return mod_psi_.sigma(gpsi_, t); }
  Mat tau(double t) const { return antipode_.tau(t); }
  Mat tau(cplx z) const { return antipode_.tau(z); }
  const Mat& R() const { return antipode_.R; }
  const Mat& S() const { return antipode_.S; }

  Element delta_power(cplx z) const {
    return gphi_.element_of(positive_power(delta_op_, z));
  }
  Mat delta_it(double t) const { return unitary_power(delta_op_, t); }

  // Operator on H of an algebra map A: Lambda(x) -> Lambda(A x)
  Mat on_H(const Mat& algebra_map) const { return gphi_.transport(algebra_map); }

  Mat u(double t) const { return unitary_power(mod_.nabla, t); }
  Mat v(double t) const { return std::pow(nu(), 0.5 * t) * on_H(tau(t)); }
  Mat w(double t) const { return std::pow(nu(), -0.5 * t) * on_H(sigma_prime(t)); }
  Mat nabla_prime_it(double t) const { return u_psi_ * unitary_power(mod_psi_.nabla, t) * u_psi_.adjoint(); }
  Mat P_it(double t) const { return unitary_power(p_, t); }
  // Lambda(x) -> Lambda(tau_t(x) delta^{-it})
  Mat nabla_hat_it(double t) const {
    return gphi_.frame() * alg_.right_matrix(delta_power(cplx(0.0, -t))) * tau(t) *
           gphi_.frame_inv();
  }

 private:
  void derive() {
    const Index n = alg_.dim();
    delta_op_ = hermitian_part(gphi_.pi(modular_.delta));
    Mat rmul_sqrt = alg_.right_matrix(modular_.delta_sqrt);
    e_psi_ = gphi_.frame() * rmul_sqrt;
    u_psi_ = e_psi_ * gpsi_.frame_inv();
    if (unitarity_residual(u_psi_) > 1e-8)
      throw Error(ErrorKind::NotUnitary, "H_psi -> H identification is not unitary");

    k_h_ = conjugate_by(u_psi_, antipode_.K);
    i_h_ = conjugate_by(u_psi_, antipode_.I);
    l_h_ = u_psi_ * antipode_.L * u_psi_.adjoint();
    v_h_ = kron(u_psi_, identity(n)) * reps_.V * kron(Mat(u_psi_.adjoint()), identity(n));
    nabla_prime_ = hermitian_part(Mat(u_psi_ * mod_psi_.nabla * u_psi_.adjoint()));
    j_prime_ = conjugate_by(u_psi_, mod_psi_.J);

    const Mat& f = gphi_.frame();
    const Mat& finv = gphi_.frame_inv();
    j_hat_ = AntilinearOperator(Mat(f * rmul_sqrt * alg_.star_matrix() * antipode_.R.conjugate() *
                                    finv.conjugate()));
    Element delta_inv = delta_power(-1.0);
    nabla_hat_ = hermitian_part(Mat(f * alg_.right_matrix(delta_inv) * tau(cplx(0.0, -1.0)) * finv));
    p_ = hermitian_part(Mat(std::exp(cplx(0.0, -0.5) * std::log(nu())) * f *
                            tau(cplx(0.0, -1.0)) * finv));
  }

  std::string name_;
  double tol_ = kDefaultTol;
  AlgebraSpec alg_;
  Coproduct delta_;
  HaarPair haar_;
  GnsData gphi_, gpsi_;
  ModularData mod_, mod_psi_;
  RegularRepresentations reps_;
  AntipodeData antipode_;
  Counit counit_;
  ModularElementData modular_;
  Mat delta_op_, e_psi_, u_psi_, l_h_, v_h_, nabla_prime_, nabla_hat_, p_;
  AntilinearOperator k_h_, i_h_, j_prime_, j_hat_;
};

inline const std::vector<double>& default_t_samples() {
  static const std::vector<double> ts{1.0, -1.0, 0.5, -0.5, 1.0 / 3.0};
  return ts;
}

inline CheckReport verify_antipode_identities(const QuantumGroupData& q) {
  const Index n = q.dim();
  const auto& a = q.antipode();
  const auto& gpsi = q.gns_psi();
  const auto& gphi = q.gns_phi();
  const auto& alg = q.algebra();
  const Mat& wpsi = q.regular().W_psi;
  CheckReport rep;

  rep.add("K involutive", residual(a.K.compose(a.K), identity(n)));
  rep.add("K = I L^{1/2}", residual(a.K, a.I.after(positive_power(a.L, 0.5))));
  rep.add("I antiunitary", antiunitarity_residual(a.I));
  rep.add("I L I = L^{-1}", residual(a.I.sandwich(a.L), positive_power(a.L, -1.0)));
  rep.add("I, L^{it} preserve M", a.membership);

  // (S⊗id)W = W*
  Mat sw = map_left_leg(q.W(), n, n, [&](const Mat& s) { return gphi.pi(Vec(q.S() * gphi.element_of(s))); });
  rep.add("(S⊗id)W = W*", residual(sw, Mat(q.W().adjoint())));

  AntilinearOperator ij = tensor(a.I, q.J());
  rep.add("(I⊗J)W(I⊗J) = W*", residual(ij.sandwich(wpsi), Mat(wpsi.adjoint())));

  double lw = 0.0;
  for (double t : default_t_samples()) {
    Mat g = kron(unitary_power(a.L, t), q.u(t));
    lw = std::max(lw, residual(Mat(g * wpsi * g.adjoint()), wpsi));
  }
  Mat gen = kron(a.log_L, identity(n)) + kron(identity(n), q.modular_phi().log_nabla);
  lw = std::max(lw, max_abs(Mat(gen * wpsi - wpsi * gen)));
  rep.add("(L^{it}⊗nabla^{it})W(L^{-it}⊗nabla^{-it}) = W", lw);

  double kx = 0.0;
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) {
      Mat x = slice_right(wpsi, n, n, k, l);
      Mat xbar = slice_right(wpsi, n, n, l, k);
      kx = std::max(kx, residual(a.K.after(x), a.K.before(xbar)));
    }
  rep.add("K((id⊗omega)W) = ((id⊗omegabar)W)K", kx);

  double am = 0.0, inv = 0.0;
  for (Index i = 0; i < n; ++i) {
    Vec si = q.S().col(i);
    Vec back = alg.star(q.S() * alg.star(si));
    inv = std::max(inv, max_abs(Vec(back - alg.basis(i))));
    for (Index j = 0; j < n; ++j) {
      Vec lhs = q.S() * alg.left(i).col(j);
      Vec rhs = alg.multiply(q.S().col(j), si);
      am = std::max(am, max_abs(Vec(lhs - rhs)));
    }
  }
  rep.add("S(xy) = S(y)S(x)", am);
  rep.add("S(S(x)*)* = x", inv);

  // m(S⊗id)Delta = eps(.)1 = m(id⊗S)Delta
  double hopf = 0.0;
  const Coproduct& d = q.coproduct();
  for (Index j = 0; j < n; ++j) {
    Vec l = Vec::Zero(n), r = Vec::Zero(n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        cplx c = d(x * n + y, j);
        if (c == cplx(0.0)) continue;
        l += c * alg.multiply(q.S().col(x), alg.basis(y));
        r += c * alg.multiply(alg.basis(x), q.S().col(y));
      }
    Vec target = q.counit().eps(j) * alg.unit();
    hopf = std::max({hopf, max_abs(Vec(l - target)), max_abs(Vec(r - target))});
  }
  rep.add("m(S⊗id)Delta = eps 1", std::max(hopf, q.counit().residual));

  rep.add("R^2 = id", residual(Mat(q.R() * q.R()), identity(n)));
  double rt = 0.0;
  for (double t : default_t_samples()) rt = std::max(rt, residual(Mat(q.R() * q.tau(t)), Mat(q.tau(t) * q.R())));
  rep.add("R tau_t = tau_t R", rt);

  // K Lambda_psi(x) = Lambda_psi(S(x)*)
  Mat direct = gpsi.frame() * alg.star_matrix() * q.S().conjugate() * gpsi.frame_inv().conjugate();
  rep.add("K Lambda_psi(x) = Lambda_psi(S(x)*)", residual(a.K.matrix(), direct));
  return rep;
}

// consistency of the unitary groups u, v, w and P
inline CheckReport unitary_group_residuals(const QuantumGroupData& q) {
  CheckReport rep;
  const Mat& e = q.lambda_psi_on_H();
  double pv = 0.0, wn = 0.0, wl = 0.0, un = 0.0;
  for (double t : default_t_samples()) {
    pv = std::max(pv, residual(q.P_it(t), q.v(t)));
    wn = std::max(wn, residual(q.w(t), q.nabla_prime_it(t)));
    wl = std::max(wl, residual(Mat(q.w(t) * e), Mat(e * q.sigma_prime(t))));
    un = std::max({un, unitarity_residual(q.u(t)), unitarity_residual(q.v(t)),
                   unitarity_residual(q.w(t))});
  }
  rep.add("v_t = P^{it}", pv);
  rep.add("w_t = nabla'^{it}", wn);
  rep.add("w_t Lambda_psi(x) = Lambda_psi(sigma'_t(x))", wl);
  rep.add("u, v, w unitary", un);
  rep.add("P positive", residual(q.P(), Mat(q.P().adjoint())) +
                            (is_positive_definite(q.P()) ? 0.0 : 1.0));
  return rep;
}

}  // namespace qgw
