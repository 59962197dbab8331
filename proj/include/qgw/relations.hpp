#pragma once

// Relation catalog: every identity is a data entry with an evaluator that
// returns a residual.  run_suite evaluates a selection, possibly on several
// threads, and assembles the report in catalog order.

#include "qgw/duality.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

namespace qgw {

enum class Expectation { AlwaysHolds, EmergentTrivial };

struct SuiteContext {
  const QuantumGroupData& q;
  const DualQuantumGroup& d;
  std::vector<double> ts;

  Index n() const { return q.dim(); }
  Mat sigma_flip() const { return flip(n(), n()); }
  Mat one() const { return identity(n()); }

  // dual objects as operators on H
  Mat delta_hat_op() const { return d.data.op(d.qg.delta_element()); }
  Mat delta_hat_it(double t) const { return d.to_H(d.qg.delta_it(t)); }
  Mat nabla_hat_prime_it(double t) const { return d.to_H(d.qg.nabla_prime_it(t)); }
  double nu_hat() const { return d.qg.nu(); }
  // J x J for linear x
  Mat jxj(const Mat& x) const { return q.J().sandwich(x); }
  Mat jhxjh(const Mat& x) const { return q.J_hat().sandwich(x); }
  Mat nabla_it(double t) const { return q.u(t); }

  template <class F>
  double over_t(F&& f) const {
    double r = 0.0;
    for (double t : ts) r = std::max(r, f(t));
    return r;
  }

  // (f⊗ι)W for an algebra map f on M (coordinates)
  Mat left_leg_map(const Mat& f) const {
    const auto& g = q.gns_phi();
    return map_left_leg(q.W(), n(), n(), [&](const Mat& x) -> Mat { return g.pi(Vec(f * g.element_of(x))); });
  }
};

struct EntryResult {
  double residual = 0.0;
  std::string note;
};

struct RelationCatalogEntry {
  std::string id;
  std::string description;
  std::string paper_ref;  // formula text
  Expectation expected = Expectation::AlwaysHolds;
  std::function<EntryResult(const SuiteContext&)> evaluate;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline double anti_res(const AntilinearOperator& a, const AntilinearOperator& b) { return residual(a, b); }

// -J(log a)J, the generator of t -> J a^{it} J
inline Mat conj_generator(const AntilinearOperator& j, const Mat& a) {
  return Mat(-j.sandwich(positive_log(a)));
}

inline std::string emergent_note(const SuiteContext& c) {
  const auto& q = c.q;
  double dd = max_abs(Vec(q.delta_element() - q.algebra().unit()));
  double dh = max_abs(Vec(c.d.qg.delta_element() - c.d.qg.algebra().unit()));
  return "computed nu=" + fmt(q.nu()) + ", nu_hat=" + fmt(c.nu_hat()) + ", |delta-1|=" + fmt(dd) +
         ", |delta_hat-1|=" + fmt(dh);
}

inline std::string nondegeneracy_note(const SuiteContext& c) {
  return "|J-J_hat|=" + fmt(residual(c.q.J(), c.q.J_hat()));
}

}  // namespace detail

inline const std::vector<RelationCatalogEntry>& relation_catalog() {
  using detail::anti_res;
  using detail::conj_generator;
  static const std::vector<RelationCatalogEntry> cat = [] {
    std::vector<RelationCatalogEntry> c;
    auto add = [&](std::string id, std::string desc, std::string ref, Expectation e,
                   std::function<EntryResult(const SuiteContext&)> f) {
      c.push_back({std::move(id), std::move(desc), std::move(ref), e, std::move(f)});
    };
    const auto holds = Expectation::AlwaysHolds;
    const auto trivial = Expectation::EmergentTrivial;

    add("REL-1.11", "pentagon equation for W", "W12 W13 W23 = W23 W12", holds,
        [](const SuiteContext& c) -> EntryResult { return {pentagon_residual(c.q.W(), c.n()), ""}; });

    add("REL-1.16", "polar decomposition of K", "K = I L^{1/2}, K^2 = 1, I L I = L^{-1}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& a = c.q.antipode();
          const Index n = c.n();
          double r = residual(a.K.compose(a.K), identity(n));
          r = std::max(r, anti_res(a.K, a.I.after(positive_power(a.L, 0.5))));
          r = std::max(r, residual(a.I.sandwich(a.L), positive_power(a.L, -1.0)));
          r = std::max(r, antiunitarity_residual(a.I));
          return {r, ""};
        });

    add("REL-1.20", "conjugation rules for W with I and L",
        "(I⊗J)W(I⊗J) = W*, (L^{it}⊗∇^{it})W(L^{-it}⊗∇^{-it}) = W", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& a = c.q.antipode();
          const Mat& w = c.q.regular().W_psi;
          const AntilinearOperator& jpsi = c.q.modular_phi().J;
          double r = residual(tensor(a.I, jpsi).sandwich(w), Mat(w.adjoint()));
          r = std::max(r, c.over_t([&](double t) {
            Mat x = kron(unitary_power(a.L, t), c.nabla_it(t));
            return residual(Mat(x * w * x.adjoint()), w);
          }));
          return {r, ""};
        });

    add("REL-1.24", "antipode and W", "(S⊗ι)W = W*", holds, [](const SuiteContext& c) -> EntryResult {
      return {residual(c.left_leg_map(c.q.S()), Mat(c.q.W().adjoint())), ""};
    });

    add("REL-2.3i", "coproduct and modular group", "Δσ_t = (τ_t⊗σ_t)Δ", holds,
        [](const SuiteContext& c) -> EntryResult {
          const Mat& d = c.q.coproduct();
          return {c.over_t([&](double t) {
                    return residual(Mat(d * c.q.sigma(t)), Mat(kron(c.q.tau(t), c.q.sigma(t)) * d));
                  }),
                  ""};
        });
    add("REL-2.3ii", "coproduct and scaling group", "Δτ_t = (τ_t⊗τ_t)Δ", holds,
        [](const SuiteContext& c) -> EntryResult {
          const Mat& d = c.q.coproduct();
          return {c.over_t([&](double t) {
                    Mat tt = c.q.tau(t);
                    return residual(Mat(d * tt), Mat(kron(tt, tt) * d));
                  }),
                  ""};
        });
    add("REL-2.3iii", "unitary antipode flips the coproduct", "ΔR = (R⊗R)Δ′", holds,
        [](const SuiteContext& c) -> EntryResult {
          const Mat& d = c.q.coproduct();
          const Mat& r = c.q.R();
          return {residual(Mat(d * r), Mat(kron(r, r) * c.sigma_flip() * d)), ""};
        });

    add("REL-2.6i", "unitary antipode and modular groups", "Rσ_t = σ′_{-t}R", holds,
        [](const SuiteContext& c) -> EntryResult {
          const Mat& r = c.q.R();
          return {c.over_t([&](double t) {
                    return residual(Mat(r * c.q.sigma(t)), Mat(c.q.sigma_prime(-t) * r));
                  }),
                  ""};
        });
    add("REL-2.6ii", "coproduct and right modular group", "Δσ′_t = (σ′_t⊗τ_{-t})Δ", holds,
        [](const SuiteContext& c) -> EntryResult {
          const Mat& d = c.q.coproduct();
          return {c.over_t([&](double t) {
                    return residual(Mat(d * c.q.sigma_prime(t)),
                                    Mat(kron(c.q.sigma_prime(t), c.q.tau(-t)) * d));
                  }),
                  ""};
        });

    add("REL-2.7", "scaling of phi under tau", "φ∘τ_t = ν^{-t} φ", trivial,
        [](const SuiteContext& c) -> EntryResult {
          const Vec& phi = c.q.haar().phi.covector();
          double r = c.over_t([&](double t) {
            return max_abs(Vec(c.q.tau(t).transpose() * phi - std::pow(c.q.nu(), -t) * phi));
          });
          return {r, detail::emergent_note(c)};
        });

    add("REL-2.8", "sigma, sigma' and tau commute", "σ_s σ′_t = σ′_t σ_s, σ_s τ_t = τ_t σ_s, σ′_s τ_t = τ_t σ′_s",
        holds, [](const SuiteContext& c) -> EntryResult {
          double r = 0.0;
          for (double s : c.ts)
            for (double t : c.ts) {
              Mat a = c.q.sigma(s), b = c.q.sigma_prime(t), tt = c.q.tau(t), bs = c.q.sigma_prime(s);
              r = std::max(r, residual(Mat(a * b), Mat(b * a)));
              r = std::max(r, residual(Mat(a * tt), Mat(tt * a)));
              r = std::max(r, residual(Mat(bs * tt), Mat(tt * bs)));
            }
          return {r, ""};
        });

    add("REL-2.9", "scaling of psi and phi under the modular groups", "ψ∘σ_t = ν^{-t} ψ, φ∘σ′_t = ν^t φ",
        trivial, [](const SuiteContext& c) -> EntryResult {
          const Vec& phi = c.q.haar().phi.covector();
          const Vec& psi = c.q.haar().psi.covector();
          double r = c.over_t([&](double t) {
            double a = max_abs(Vec(c.q.sigma(t).transpose() * psi - std::pow(c.q.nu(), -t) * psi));
            double b = max_abs(Vec(c.q.sigma_prime(t).transpose() * phi - std::pow(c.q.nu(), t) * phi));
            return std::max(a, b);
          });
          return {r, detail::emergent_note(c)};
        });

    add("REL-2.10", "coproduct and scaling group via modular groups", "Δτ_t = (σ_t⊗σ′_{-t})Δ", holds,
        [](const SuiteContext& c) -> EntryResult {
          const Mat& d = c.q.coproduct();
          return {c.over_t([&](double t) {
                    return residual(Mat(d * c.q.tau(t)), Mat(kron(c.q.sigma(t), c.q.sigma_prime(-t)) * d));
                  }),
                  ""};
        });

    add("REL-2.11", "modular element",
        "ψ = φ(δ^{1/2}·δ^{1/2}), σ_t(δ) = ν^t δ, σ′_t(δ) = ν^{-t} δ, τ_t(δ) = δ, R(δ) = δ^{-1}, "
        "σ′_t(x) = δ^{it} σ_t(x) δ^{-it}",
        trivial, [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          const auto& alg = q.algebra();
          const Element& dl = q.delta_element();
          const Element half = q.modular_element_data().delta_sqrt;
          double r = 0.0;
          for (Index i = 0; i < q.dim(); ++i) {
            Element x = alg.basis(i);
            cplx lhs = q.haar().psi(x);
            cplx rhs = q.haar().phi(alg.multiply(alg.multiply(half, x), half));
            r = std::max(r, std::abs(lhs - rhs));
          }
          r = std::max(r, max_abs(Vec(q.R() * dl - q.delta_power(-1.0))));
          r = std::max(r, c.over_t([&](double t) {
            double a = max_abs(Vec(q.sigma(t) * dl - std::pow(q.nu(), t) * dl));
            a = std::max(a, max_abs(Vec(q.sigma_prime(t) * dl - std::pow(q.nu(), -t) * dl)));
            a = std::max(a, max_abs(Vec(q.tau(t) * dl - dl)));
            Mat dit = q.delta_it(t), dmit = q.delta_it(-t);
            Mat st = q.sigma(t);
            Mat sp = q.sigma_prime(t);
            for (Index i = 0; i < q.dim(); ++i)
              a = std::max(a, residual(q.pi(sp.col(i)), Mat(dit * q.pi(st.col(i)) * dmit)));
            return a;
          }));
          return {r, detail::emergent_note(c)};
        });

    add("REL-4.2", "unitary groups v and w", "v_t = P^{it}, w_t = ∇′^{it}, w_t Λ_ψ(x) = Λ_ψ(σ′_t(x))", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          return {c.over_t([&](double t) {
                    double r = residual(q.v(t), q.P_it(t));
                    r = std::max(r, residual(q.w(t), q.nabla_prime_it(t)));
                    const Mat& e = q.lambda_psi_on_H();
                    r = std::max(r, residual(Mat(q.w(t) * e), Mat(std::pow(q.nu(), -0.5 * t) * e * q.sigma_prime(t))));
                    return r;
                  }),
                  ""};
        });

    add("REL-4.3", "right modular operator", "∇′^{it} = δ^{it}(Jδ^{it}J)∇^{it}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = c.over_t([&](double t) {
            return residual(q.nabla_prime_it(t), Mat(q.delta_it(t) * c.jxj(q.delta_it(t)) * c.nabla_it(t)));
          });
          Mat gen = positive_log(q.delta_operator()) + conj_generator(q.J(), q.delta_operator()) +
                    q.modular_phi().log_nabla;
          r = std::max(r, residual(positive_log(q.nabla_prime()), gen));
          return {r, ""};
        });

    add("REL-4.4", "u, v, w commute, commute with J and implement σ, τ, σ′",
        "u_t π(x) u_t* = π(σ_t(x)), v_t π(x) v_t* = π(τ_t(x)), w_t π(x) w_t* = π(σ′_t(x))", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          const Mat& jm = q.J().matrix();
          double r = 0.0;
          for (double s : c.ts)
            for (double t : c.ts) {
              Mat u = q.u(s), v = q.v(t), w = q.w(t), vs = q.v(s);
              r = std::max({r, residual(Mat(u * v), Mat(v * u)), residual(Mat(u * w), Mat(w * u)),
                            residual(Mat(vs * w), Mat(w * vs))});
            }
          r = std::max(r, c.over_t([&](double t) {
            double a = 0.0;
            Mat u = q.u(t), v = q.v(t), w = q.w(t);
            for (const Mat* x : {&u, &v, &w}) a = std::max(a, residual(Mat(*x * jm), Mat(jm * x->conjugate())));
            Mat st = q.sigma(t), tt = q.tau(t), sp = q.sigma_prime(t);
            for (Index i = 0; i < q.dim(); ++i) {
              Mat x = q.gns_phi().rep()[static_cast<size_t>(i)];
              a = std::max(a, residual(Mat(u * x * u.adjoint()), q.pi(st.col(i))));
              a = std::max(a, residual(Mat(v * x * v.adjoint()), q.pi(tt.col(i))));
              a = std::max(a, residual(Mat(w * x * w.adjoint()), q.pi(sp.col(i))));
            }
            return a;
          }));
          return {r, ""};
        });

    add("REL-4.5", "dual modular conjugation and operator on H",
        "ĴΛ(x) = Λ(R(x)*δ^{1/2}), ∇̂^{it}Λ(x) = Λ(τ_t(x)δ^{-it})", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          const auto& alg = q.algebra();
          const auto& g = q.gns_phi();
          const Element half = q.modular_element_data().delta_sqrt;
          double r = 0.0;
          for (Index i = 0; i < q.dim(); ++i) {
            Element x = alg.basis(i);
            Vec lhs = q.J_hat()(g.lambda(x));
            Vec rhs = g.lambda(alg.multiply(alg.star(Vec(q.R() * x)), half));
            r = std::max(r, max_abs(Vec(lhs - rhs)));
          }
          r = std::max(r, c.over_t([&](double t) {
            double a = 0.0;
            Mat nh = unitary_power(q.nabla_hat(), t);
            Element dmit = q.delta_power(cplx(0.0, -t));
            Mat tt = q.tau(t);
            for (Index i = 0; i < q.dim(); ++i) {
              Vec lhs = nh * g.lambda(alg.basis(i));
              Vec rhs = g.lambda(alg.multiply(tt.col(i), dmit));
              a = std::max(a, max_abs(Vec(lhs - rhs)));
            }
            return a;
          }));
          return {r, ""};
        });

    add("REL-4.6", "dual modular operator factorised", "∇̂^{it} = (Jδ^{it}J)P^{it}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = c.over_t([&](double t) {
            return residual(unitary_power(q.nabla_hat(), t), Mat(c.jxj(q.delta_it(t)) * q.P_it(t)));
          });
          Mat gen = conj_generator(q.J(), q.delta_operator()) + positive_log(q.P());
          r = std::max(r, residual(positive_log(q.nabla_hat()), gen));
          return {r, ""};
        });

    add("REL-4.7", "R and τ implemented by Ĵ and ∇̂", "R(x) = Ĵx*Ĵ, τ_t(x) = ∇̂^{it}x∇̂^{-it}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = 0.0;
          for (Index i = 0; i < q.dim(); ++i) {
            const Mat& x = q.gns_phi().rep()[static_cast<size_t>(i)];
            r = std::max(r, residual(c.jhxjh(Mat(x.adjoint())), q.pi(q.R().col(i))));
          }
          r = std::max(r, c.over_t([&](double t) {
            double a = 0.0;
            Mat nh = unitary_power(q.nabla_hat(), t);
            Mat tt = q.tau(t);
            for (Index i = 0; i < q.dim(); ++i) {
              const Mat& x = q.gns_phi().rep()[static_cast<size_t>(i)];
              a = std::max(a, residual(Mat(nh * x * nh.adjoint()), q.pi(tt.col(i))));
            }
            return a;
          }));
          return {r, ""};
        });

    add("REL-4.8", "right modular operator via Ĵ", "∇′^{it} = Ĵ∇^{-it}Ĵ", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          return {c.over_t([&](double t) { return residual(q.nabla_prime_it(t), c.jhxjh(c.nabla_it(-t))); }), ""};
        });

    add("REL-4.9", "right regular representation via W", "V = (Ĵ⊗Ĵ)ΣW*Σ(Ĵ⊗Ĵ)", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          Mat s = c.sigma_flip();
          Mat rhs = tensor(q.J_hat(), q.J_hat()).sandwich(Mat(s * q.W().adjoint() * s));
          return {residual(q.V_on_H(), rhs), detail::nondegeneracy_note(c)};
        });

    add("REL-R4.10", "K against Ĵ∇̂^{1/2} (empirical)", "I = Ĵ and L = ∇̂", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = anti_res(q.K_on_H(), q.J_hat().after(positive_power(q.nabla_hat(), 0.5)));
          return {r, "|I-J_hat|=" + detail::fmt(anti_res(q.I_on_H(), q.J_hat())) +
                         ", |L-nabla_hat|=" + detail::fmt(residual(q.L_on_H(), q.nabla_hat()))};
        });

    add("REL-4.11", "polar decomposition of the dual involution", "T̂ = Ĵ∇̂^{1/2}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          const auto& dd = c.d.data;
          Mat e = dd.lambda_hat;
          Mat einv = e.partialPivLu().inverse();
          AntilinearOperator t_hat(Mat(e * dd.alg.star_matrix() * einv.conjugate()));
          double r = anti_res(t_hat, q.J_hat().after(positive_power(q.nabla_hat(), 0.5)));
          r = std::max(r, anti_res(c.d.to_H(c.d.qg.J()), q.J_hat()));
          r = std::max(r, residual(c.d.to_H(c.d.qg.nabla()), q.nabla_hat()));
          return {r, detail::nondegeneracy_note(c)};
        });

    add("REL-4.12", "dual unitary antipode and scaling group", "R̂(y) = Jy*J, τ̂_t(y) = ∇^{it}y∇^{-it}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& dd = c.d.data;
          const auto& dq = c.d.qg;
          double r = 0.0;
          for (Index m = 0; m < dd.dim(); ++m) {
            const Mat& y = dd.basis[static_cast<size_t>(m)];
            r = std::max(r, residual(dd.op(dq.R().col(m)), c.jxj(Mat(y.adjoint()))));
          }
          r = std::max(r, c.over_t([&](double t) {
            double a = 0.0;
            Mat tt = dq.tau(t);
            Mat u = c.nabla_it(t);
            for (Index m = 0; m < dd.dim(); ++m) {
              const Mat& y = dd.basis[static_cast<size_t>(m)];
              a = std::max(a, residual(dd.op(tt.col(m)), Mat(u * y * u.adjoint())));
            }
            return a;
          }));
          return {r, detail::nondegeneracy_note(c)};
        });

    add("REL-4.13", "P implements the dual scaling group; dual scaling constant",
        "P^{it}Λ̂(y) = ν^{-t/2}Λ̂(τ̂_t(y)), ν̂ = ν^{-1}", trivial, [](const SuiteContext& c) -> EntryResult {
          const auto& dd = c.d.data;
          const auto& q = c.q;
          double r = std::abs(c.nu_hat() * q.nu() - 1.0);
          r = std::max(r, c.over_t([&](double t) {
            Mat lhs = q.P_it(t) * dd.lambda_hat;
            Mat rhs = std::pow(q.nu(), -0.5 * t) * dd.lambda_hat * c.d.qg.tau(t);
            return residual(lhs, rhs);
          }));
          return {r, detail::emergent_note(c)};
        });

    add("REL-4.14", "conjugation rules for W",
        "(τ_t⊗ι)W = (1⊗u_t*)W(1⊗u_t), (σ′_t⊗ι)W = (1⊗w_t*)W(1⊗v_t*), (τ_t⊗ι)W = (1⊗v_t*)W(1⊗v_t), "
        "(σ_t⊗ι)W = (1⊗v_t*)W(1⊗w_t*)",
        holds, [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          const Mat& w = q.W();
          const Mat id = c.one();
          return {c.over_t([&](double t) {
                    Mat u = kron(id, q.u(t)), v = kron(id, q.v(t)), ww = kron(id, q.w(t));
                    Mat tau_w = c.left_leg_map(q.tau(t));
                    double r = residual(tau_w, Mat(u.adjoint() * w * u));
                    r = std::max(r, residual(c.left_leg_map(q.sigma_prime(t)), Mat(ww.adjoint() * w * v.adjoint())));
                    r = std::max(r, residual(tau_w, Mat(v.adjoint() * w * v)));
                    r = std::max(r, residual(c.left_leg_map(q.sigma(t)), Mat(v.adjoint() * w * ww.adjoint())));
                    return r;
                  }),
                  ""};
        });

    add("REL-4.15", "dual modular element", "δ̂^{it} = v_t* w_t*, Δ̂(δ̂^{it}) = δ̂^{it}⊗δ̂^{it}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          Mat s = c.sigma_flip();
          const Mat& w = q.W();
          double r = c.over_t([&](double t) {
            Mat dh = c.delta_hat_it(t);
            double a = residual(dh, Mat(q.v(t).adjoint() * q.w(t).adjoint()));
            Mat cop = s * w * kron(dh, c.one()) * w.adjoint() * s;
            return std::max(a, residual(cop, kron(dh, dh)));
          });
          return {r, detail::emergent_note(c)};
        });

    add("REL-4.17", "the four modular operators",
        "∇^{it} = (Ĵδ̂^{it}Ĵ)P^{it}, ∇̂^{it} = (Jδ^{it}J)P^{it}, ∇′^{it} = δ̂^{-it}P^{-it} = Ĵ∇^{-it}Ĵ, "
        "∇̂′^{it} = δ^{-it}P^{-it} = J∇̂^{-it}J",
        holds, [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = c.over_t([&](double t) {
            Mat nh = unitary_power(q.nabla_hat(), t);
            Mat nhm = unitary_power(q.nabla_hat(), -t);
            double a = residual(c.nabla_it(t), Mat(c.jhxjh(c.delta_hat_it(t)) * q.P_it(t)));
            a = std::max(a, residual(nh, Mat(c.jxj(q.delta_it(t)) * q.P_it(t))));
            a = std::max(a, residual(q.nabla_prime_it(t), Mat(c.delta_hat_it(-t) * q.P_it(-t))));
            a = std::max(a, residual(q.nabla_prime_it(t), c.jhxjh(c.nabla_it(-t))));
            Mat nhp = c.nabla_hat_prime_it(t);
            a = std::max(a, residual(nhp, Mat(q.delta_it(-t) * q.P_it(-t))));
            a = std::max(a, residual(nhp, c.jxj(nhm)));
            return a;
          });
          Mat logp = positive_log(q.P());
          r = std::max(r, residual(q.modular_phi().log_nabla,
                                   Mat(conj_generator(q.J_hat(), c.delta_hat_op()) + logp)));
          r = std::max(r, residual(positive_log(q.nabla_prime()),
                                   Mat(-positive_log(c.delta_hat_op()) - logp)));
          return {r, ""};
        });

    add("REL-4.18", "commutation of Ĵ with ∇ and of J with ∇̂",
        "Ĵ∇^{-it}Ĵ = δ^{it}(Jδ^{it}J)∇^{it}, J∇̂^{-it}J = δ̂^{it}(Ĵδ̂^{it}Ĵ)∇̂^{it}", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          return {c.over_t([&](double t) {
                    double a = residual(c.jhxjh(c.nabla_it(-t)),
                                        Mat(q.delta_it(t) * c.jxj(q.delta_it(t)) * c.nabla_it(t)));
                    Mat dh = c.delta_hat_it(t);
                    a = std::max(a, residual(c.jxj(unitary_power(q.nabla_hat(), -t)),
                                             Mat(dh * c.jhxjh(dh) * unitary_power(q.nabla_hat(), t))));
                    return a;
                  }),
                  detail::nondegeneracy_note(c)};
        });

    add("REL-4.19", "commutation of δ with δ̂ and of J with Ĵ",
        "δ̂^{is}δ^{it} = ν^{-ist}δ^{it}δ̂^{is}, ĴJ = ν^{i/4}JĴ", trivial,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = 0.0;
          for (double s : c.ts)
            for (double t : c.ts) {
              cplx f = std::exp(cplx(0.0, -s * t) * std::log(q.nu()));
              Mat dh = c.delta_hat_it(s), dl = q.delta_it(t);
              r = std::max(r, residual(Mat(dh * dl), Mat(f * dl * dh)));
            }
          cplx f = std::exp(cplx(0.0, 0.25) * std::log(q.nu()));
          r = std::max(r, residual(q.J_hat().compose(q.J()), Mat(f * q.J().compose(q.J_hat()))));
          return {r, detail::nondegeneracy_note(c) + "; only the commutation form is testable, " +
                         detail::emergent_note(c)};
        });

    add("REL-4.20", "Radford formula", "P^{-2it} = δ^{it}(Jδ^{it}J)δ̂^{it}(Ĵδ̂^{it}Ĵ)", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& q = c.q;
          double r = c.over_t([&](double t) {
            Mat dl = q.delta_it(t), dh = c.delta_hat_it(t);
            return residual(q.P_it(-2.0 * t), Mat(dl * c.jxj(dl) * dh * c.jhxjh(dh)));
          });
          Mat gen = positive_log(q.delta_operator()) + conj_generator(q.J(), q.delta_operator()) +
                    positive_log(c.delta_hat_op()) + conj_generator(q.J_hat(), c.delta_hat_op());
          r = std::max(r, residual(Mat(-2.0 * positive_log(q.P())), gen));
          return {r, detail::nondegeneracy_note(c)};
        });

    add("REL-3.14", "dual multiplicative unitary", "Ŵ = ΣW*Σ, pentagon for Ŵ, Δ̂(y) = Ŵ*(1⊗y)Ŵ", holds,
        [](const SuiteContext& c) -> EntryResult {
          const auto& dd = c.d.data;
          const Mat& wh = dd.W_hat;
          double r = residual(c.d.to_HH(c.d.qg.W()), wh);
          r = std::max(r, pentagon_residual(c.d.qg.W(), dd.dim()));
          for (Index m = 0; m < dd.dim(); ++m) {
            Mat lhs = Mat::Zero(c.n() * c.n(), c.n() * c.n());
            for (Index a = 0; a < dd.dim(); ++a)
              for (Index b = 0; b < dd.dim(); ++b)
                lhs += dd.delta_hat(a * dd.dim() + b, m) *
                       kron(dd.basis[static_cast<size_t>(a)], dd.basis[static_cast<size_t>(b)]);
            Mat rhs = wh.adjoint() * kron(c.one(), dd.basis[static_cast<size_t>(m)]) * wh;
            r = std::max(r, residual(lhs, rhs));
          }
          return {r, ""};
        });

    add("REL-3.15", "dual Haar functional is left invariant", "(ι⊗φ̂)Δ̂(y) = φ̂(y)1", holds,
        [](const SuiteContext& c) -> EntryResult {
          auto h = dual_haar(c.d.data);
          return {h.left_residual, "phi_hat(1)=" + detail::fmt(std::real(h.phi_hat(c.d.data.alg.unit())))};
        });

    add("REL-3.16", "dual unitary antipode and right Haar functional", "R̂(y) = Jy*J, ψ̂ = φ̂∘R̂ right invariant",
        holds, [](const SuiteContext& c) -> EntryResult {
          auto h = dual_haar(c.d.data);
          double r = std::max(h.right_residual, residual(c.d.qg.R(), c.d.data.R_hat));
          r = std::max(r, max_abs(Vec(h.psi_hat.covector() - c.d.qg.haar().psi.covector())));
          return {r, ""};
        });

    add("REL-3.18", "biduality", "the dual of (M̂,Δ̂) is (M,Δ)", holds, [](const SuiteContext& c) -> EntryResult {
      auto rep = biduality_check(c.q, c.d);
      auto in = intersections(c.q, c.d.data);
      double r = std::max(rep.worst(), static_cast<double>(std::abs(in.m_cap_mhat_commutant - 1) +
                                                           std::abs(in.m_cap_mhat - 1)));
      return {r, "dim M∩M̂′=" + std::to_string(in.m_cap_mhat_commutant) +
                     ", dim M∩M̂=" + std::to_string(in.m_cap_mhat)};
    });
    return c;
  }();
  return cat;
}

inline std::vector<std::string> relation_ids() {
  std::vector<std::string> out;
  for (const auto& e : relation_catalog()) out.push_back(e.id);
  return out;
}

struct EntryReport {
  std::string id;
  std::string paper_ref;
  double residual = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string example;
  double tol = kDefaultTol;
  std::vector<double> t_samples;
  Index dim = 0;
  Index dual_dim = 0;
  std::vector<EntryReport> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

inline unsigned suite_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("QGW_THREADS");
  if (!env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 0) return hw;
  return v == 0 ? hw : static_cast<unsigned>(v);
}

// ids empty = all
inline VerificationReport run_suite(const QuantumGroupData& q, const DualQuantumGroup& d, double tol,
                                    const std::vector<double>& t_samples,
                                    const std::vector<std::string>& ids = {}) {
  const auto& cat = relation_catalog();
  std::vector<size_t> selected;
  if (ids.empty()) {
    for (size_t i = 0; i < cat.size(); ++i) selected.push_back(i);
  } else {
    std::set<std::string> want(ids.begin(), ids.end());
    for (const auto& id : want) {
      bool known = false;
      for (const auto& e : cat) known = known || e.id == id;
      if (!known) throw Error(ErrorKind::InvalidInput, "unknown relation id " + id);
    }
    for (size_t i = 0; i < cat.size(); ++i)
      if (want.count(cat[i].id)) selected.push_back(i);
  }

  VerificationReport rep;
  rep.example = q.name();
  rep.tol = tol;
  rep.t_samples = t_samples;
  rep.dim = q.dim();
  rep.dual_dim = d.data.dim();
  rep.entries.resize(selected.size());
  SuiteContext ctx{q, d, t_samples};

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < selected.size(); k = next++) {
      const auto& e = cat[selected[k]];
      EntryResult r = e.evaluate(ctx);
      rep.entries[k] = {e.id, e.paper_ref, r.residual, r.residual < tol, r.note};
    }
  };
  const unsigned nt = std::min<unsigned>(suite_threads(), static_cast<unsigned>(std::max<size_t>(1, selected.size())));
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rep;
}

inline VerificationReport run_suite(const QuantumGroupData& q, const DualQuantumGroup& d,
                                    double tol = kDefaultTol) {
  return run_suite(q, d, tol, default_t_samples());
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["example"] = r.example;
  j["tol"] = r.tol;
  j["t_samples"] = r.t_samples;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json x;
    x["id"] = e.id;
    x["paper_ref"] = e.paper_ref;
    x["residual"] = e.residual;
    x["pass"] = e.pass;
    x["note"] = e.note;
    j["entries"].push_back(x);
  }
  return j;
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.example = j.at("example").get<std::string>();
  r.tol = j.at("tol").get<double>();
  r.t_samples = j.at("t_samples").get<std::vector<double>>();
  for (const auto& x : j.at("entries"))
    r.entries.push_back({x.at("id").get<std::string>(), x.at("paper_ref").get<std::string>(),
                         x.at("residual").get<double>(), x.at("pass").get<bool>(),
                         x.at("note").get<std::string>()});
  return r;
}

}  // namespace qgw
