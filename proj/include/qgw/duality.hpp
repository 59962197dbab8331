#pragma once

// The dual quantum group: M̂ spanned by left slices of W inside B(H), its
// coproduct, the map Λ̂ and the dual Haar functional, the dual promoted to
// a QuantumGroupData of its own, and biduality.

#include "qgw/pipeline.hpp"

#include <algorithm>
#include <optional>

namespace qgw {

struct DualData {
  Index n = 0;                 // dim H
  std::vector<Mat> basis;      // y_m, operators on H
  std::vector<Index> chosen;   // slice ids k*n+l of the basis
  AlgebraSpec alg;             // structure of M̂ in the basis y_m
  Coproduct delta_hat;
  Mat lambda_hat;              // column m = Λ̂(y_m)
  LinearFunctional phi_hat;
  Mat W_hat;                   // ΣW*Σ on H⊗H
  Mat R_hat;                   // coordinates of y -> J y* J
  SpanSolver span;             // vec(y_m) as columns
  CheckReport build_report;

  Index dim() const { return static_cast<Index>(basis.size()); }

  Mat op(const Element& y) const {
    Mat out = Mat::Zero(n, n);
    for (Index m = 0; m < dim(); ++m) out += y(m) * basis[static_cast<size_t>(m)];
    return out;
  }
  Element coords(const Mat& y) const { return span.coordinates(vec(y)); }
  double membership(const Mat& y) const { return span.residual(vec(y)); }
  Vec lambda(const Element& y) const { return lambda_hat * y; }
};

// Left slices (ω_kl⊗ι)W, in the order k*n+l.
inline std::vector<Mat> left_slices(const Mat& w, Index n) {
  std::vector<Mat> out;
  out.reserve(static_cast<size_t>(n * n));
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) out.push_back(slice_left(w, n, n, k, l));
  return out;
}

// <Λ̂((ω_kl⊗ι)W), Λ(x)> = ω_kl(x*) = π(x*)(l,k) for all x.
inline Vec lambda_hat_of_slice(const GnsData& g, Index k, Index l) {
  const auto& alg = g.algebra();
  const Index n = g.dim();
  Vec w(n);
  for (Index j = 0; j < n; ++j) w(j) = g.pi(alg.star(alg.basis(j)))(l, k);
  return g.frame().adjoint().partialPivLu().solve(w);
}

// Column pivoted QR, cutoff 1e-10 * largest pivot; returns sorted indices.
inline std::vector<Index> pivot_columns(const Mat& a, double rel_cutoff = 1e-10) {
  Eigen::ColPivHouseholderQR<Mat> qr(a);
  const Index r = numerical_rank(a, rel_cutoff);
  std::vector<Index> idx;
  for (Index i = 0; i < r; ++i) idx.push_back(qr.colsPermutation().indices()(i));
  std::sort(idx.begin(), idx.end());
  return idx;
}

inline DualData build_dual(const QuantumGroupData& q) {
  const Index n = q.dim();
  const auto& g = q.gns_phi();
  const double tol = q.tol();
  DualData d;
  d.n = n;

  auto slices = left_slices(q.W(), n);
  Mat family(n * n, n * n);
  for (Index s = 0; s < n * n; ++s) family.col(s) = vec(slices[static_cast<size_t>(s)]);
  d.chosen = pivot_columns(family);
  const Index m = static_cast<Index>(d.chosen.size());
  Mat stacked(n * n, m);
  for (Index i = 0; i < m; ++i) {
    d.basis.push_back(slices[static_cast<size_t>(d.chosen[static_cast<size_t>(i)])]);
    stacked.col(i) = vec(d.basis.back());
  }
  d.span = SpanSolver(stacked);

  // structure constants, star and unit by least squares
  const double bound = tol * std::max(1.0, max_abs(stacked));
  double closure = 0.0;
  std::vector<Mat> left(static_cast<size_t>(m), Mat(m, m));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      Mat p = d.basis[static_cast<size_t>(a)] * d.basis[static_cast<size_t>(b)];
      left[static_cast<size_t>(a)].col(b) = d.coords(p);
      closure = std::max(closure, d.membership(p));
    }
  Mat star(m, m);
  double star_res = 0.0;
  for (Index a = 0; a < m; ++a) {
    Mat y = d.basis[static_cast<size_t>(a)].adjoint();
    star.col(a) = d.coords(y);
    star_res = std::max(star_res, d.membership(y));
  }
  Vec unit = d.coords(identity(n));
  double unit_res = d.membership(identity(n));
  d.build_report.add("product closure", closure);
  d.build_report.add("star closure", star_res);
  d.build_report.add("unit membership", unit_res);
  if (closure > bound || star_res > bound || unit_res > bound)
    throw Error(ErrorKind::SliceSpanNotClosed,
                "slice span is not a unital *-algebra (product " + std::to_string(closure) +
                    ", star " + std::to_string(star_res) + ", unit " + std::to_string(unit_res) + ")");
  std::vector<std::string> labels;
  for (Index c : d.chosen) labels.push_back("w" + std::to_string(c / n) + std::to_string(c % n));
  d.alg = AlgebraSpec(labels, left, star, unit);

  // Δ̂(y) = Σ W (y⊗1) W* Σ in the basis y_a ⊗ y_b
  const Mat sigma = flip(n, n);
  const Mat& w = q.W();
  Mat pairs(n * n * n * n, m * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      pairs.col(a * m + b) = vec(kron(d.basis[static_cast<size_t>(a)], d.basis[static_cast<size_t>(b)]));
  SpanSolver pair_span(pairs);
  d.delta_hat = Mat(m * m, m);
  double cop = 0.0;
  for (Index j = 0; j < m; ++j) {
    Mat img = sigma * w * kron(d.basis[static_cast<size_t>(j)], identity(n)) * w.adjoint() * sigma;
    d.delta_hat.col(j) = pair_span.coordinates(vec(img));
    cop = std::max(cop, pair_span.residual(vec(img)));
  }
  d.build_report.add("coproduct lands in tensor square", cop);
  if (cop > bound)
    throw Error(ErrorKind::SliceSpanNotClosed, "dual coproduct leaves M̂⊗M̂");

  // Λ̂ on the basis, then consistency over every slice
  d.lambda_hat = Mat(n, m);
  for (Index i = 0; i < m; ++i) {
    Index c = d.chosen[static_cast<size_t>(i)];
    d.lambda_hat.col(i) = lambda_hat_of_slice(g, c / n, c % n);
  }
  double lam = 0.0;
  for (Index s = 0; s < n * n; ++s) {
    Vec direct = lambda_hat_of_slice(g, s / n, s % n);
    lam = std::max(lam, max_abs(Vec(d.lambda(d.coords(slices[static_cast<size_t>(s)])) - direct)));
  }
  d.build_report.add("lambda hat well defined", lam);

  // φ̂(y) = <Λ̂(y), Λ̂(1)>, no renormalisation
  const Vec one = d.lambda(unit);
  Vec cov(m);
  for (Index i = 0; i < m; ++i) cov(i) = one.dot(d.lambda_hat.col(i));
  d.phi_hat = LinearFunctional(cov);

  d.W_hat = sigma * w.adjoint() * sigma;

  d.R_hat = Mat(m, m);
  for (Index i = 0; i < m; ++i)
    d.R_hat.col(i) = d.coords(q.J().sandwich(Mat(d.basis[static_cast<size_t>(i)].adjoint())));
  return d;
}

inline Vec dual_lambda(const DualData& d, const Element& y) { return d.lambda(y); }

struct DualHaar {
  LinearFunctional phi_hat;
  LinearFunctional psi_hat;  // φ̂∘R̂
  double left_residual = 0.0;
  double right_residual = 0.0;
};

inline DualHaar dual_haar(const DualData& d) {
  DualHaar h;
  h.phi_hat = classify(d.alg, d.phi_hat);
  if (!*h.phi_hat.faithful || !*h.phi_hat.positive)
    throw Error(ErrorKind::NotFaithful, "dual Haar functional is not faithful and positive");
  h.psi_hat = classify(d.alg, LinearFunctional(Vec(d.R_hat.transpose() * d.phi_hat.covector())));
  h.left_residual = max_abs(Vec(left_invariance_system(d.alg, d.delta_hat) * h.phi_hat.covector()));
  h.right_residual = max_abs(Vec(right_invariance_system(d.alg, d.delta_hat) * h.psi_hat.covector()));
  return h;
}

// Residual of Λ̂(y1 y) = y1 Λ̂(y) over basis pairs.
inline double module_property_residual(const DualData& d) {
  double r = 0.0;
  for (Index a = 0; a < d.dim(); ++a)
    for (Index b = 0; b < d.dim(); ++b) {
      const Mat& ya = d.basis[static_cast<size_t>(a)];
      Vec lhs = d.lambda(d.alg.multiply(d.alg.basis(a), d.alg.basis(b)));
      r = std::max(r, max_abs(Vec(lhs - ya * d.lambda_hat.col(b))));
    }
  return r;
}

// The dual as a quantum group in its own right, with the unitary
// U: H_φ̂ -> H, Λ_φ̂(y) -> Λ̂(y).
struct DualQuantumGroup {
  DualData data;
  QuantumGroupData qg;
  Mat U;

  Mat to_H(const Mat& x) const { return U * x * U.adjoint(); }
  AntilinearOperator to_H(const AntilinearOperator& x) const { return conjugate_by(U, x); }
  Mat to_HH(const Mat& x) const {
    Mat uu = kron(U, U);
    return uu * x * uu.adjoint();
  }
};

inline DualQuantumGroup dual_quantum_group(const QuantumGroupData& q) {
  DualQuantumGroup out;
  out.data = build_dual(q);
  out.qg = QuantumGroupData::build(out.data.alg, out.data.delta_hat,
                                   q.name().empty() ? "dual" : "dual of " + q.name(),
                                   out.data.phi_hat, q.tol());
  out.U = out.data.lambda_hat * out.qg.gns_phi().frame_inv();
  if (unitarity_residual(out.U) > std::max(q.tol(), 1e-8))
    throw Error(ErrorKind::NotUnitary, "Λ̂ does not induce a unitary H_φ̂ -> H");
  return out;
}

// Intersections of M with M̂′ and with M̂, as dimensions.
struct Intersections {
  Index m_cap_mhat_commutant = 0;
  Index m_cap_mhat = 0;
};

inline Intersections intersections(const QuantumGroupData& q, const DualData& d) {
  const Index n = q.dim();
  const auto& rep = q.gns_phi().rep();
  Intersections out;
  // c -> ([Σ c_i π(e_i), y_m])_m
  Mat sys(n * n * d.dim(), n);
  for (Index i = 0; i < n; ++i) {
    Vec col(n * n * d.dim());
    for (Index mm = 0; mm < d.dim(); ++mm) {
      const Mat& y = d.basis[static_cast<size_t>(mm)];
      col.segment(mm * n * n, n * n) = vec(Mat(rep[static_cast<size_t>(i)] * y - y * rep[static_cast<size_t>(i)]));
    }
    sys.col(i) = col;
  }
  out.m_cap_mhat_commutant = n - numerical_rank(sys);
  Mat both(n * n, n + d.dim());
  for (Index i = 0; i < n; ++i) both.col(i) = vec(rep[static_cast<size_t>(i)]);
  for (Index mm = 0; mm < d.dim(); ++mm) both.col(n + mm) = vec(d.basis[static_cast<size_t>(mm)]);
  out.m_cap_mhat = n + d.dim() - numerical_rank(both);
  return out;
}

// π′(η): Λ(x) -> π(x)η, an operator in the commutant of π(M).
inline Mat commutant_operator(const GnsData& g, const Vec& eta) {
  const Index n = g.dim();
  Mat cols(n, n);
  for (Index j = 0; j < n; ++j) cols.col(j) = g.rep()[static_cast<size_t>(j)] * eta;
  return cols * g.frame_inv();
}

inline CheckReport dual_lambda_checks(const QuantumGroupData& q, const DualData& d) {
  CheckReport r;
  const auto& g = q.gns_phi();
  const auto& alg = q.algebra();
  const Index n = q.dim();
  double cross = 0.0, comm = 0.0;
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) {
      Mat p = commutant_operator(g, identity(n).col(l));
      Vec alt = p.adjoint() * identity(n).col(k);
      cross = std::max(cross, max_abs(Vec(alt - lambda_hat_of_slice(g, k, l))));
      for (const auto& x : g.rep()) comm = std::max(comm, max_abs(Mat(p * x - x * p)));
    }
  r.add("lambda hat via commutant representation", cross);
  r.add("commutant representation commutes with M", comm);
  r.add("lambda hat module property", module_property_residual(d));

  // <Λ̂(y*), Λ(a)> = conj <Λ̂(y), Λ(S(a*))>
  double adj = 0.0;
  for (Index mm = 0; mm < d.dim(); ++mm) {
    Vec y = d.alg.basis(mm);
    Vec ly = d.lambda(y);
    Vec lys = d.lambda(d.alg.star(y));
    for (Index a = 0; a < n; ++a) {
      Vec ea = alg.basis(a);
      cplx lhs = g.lambda(ea).dot(lys);
      cplx rhs = std::conj(g.lambda(Vec(q.S() * alg.star(ea))).dot(ly));
      adj = std::max(adj, std::abs(lhs - rhs));
    }
  }
  r.add("lambda hat adjoint relation", adj);
  return r;
}

// The dual of the dual, transported to H, against (M, Δ).
inline CheckReport biduality_check(const QuantumGroupData& q, const DualQuantumGroup& dq) {
  CheckReport r;
  DualData bd = build_dual(dq.qg);
  const Index n = q.dim();
  const auto& rep = q.gns_phi().rep();
  std::vector<Mat> z;
  for (const auto& b : bd.basis) z.push_back(dq.to_H(b));

  double member = 0.0;
  Mat both(n * n, n + static_cast<Index>(z.size()));
  for (Index i = 0; i < n; ++i) both.col(i) = vec(rep[static_cast<size_t>(i)]);
  for (size_t m = 0; m < z.size(); ++m) {
    both.col(n + static_cast<Index>(m)) = vec(z[m]);
    member = std::max(member, q.gns_phi().membership_residual(z[m]));
  }
  const Index rank = numerical_rank(both);
  r.add("bidual dimension defect", static_cast<double>(std::abs(bd.dim() - n)));
  r.add("bidual span rank defect", static_cast<double>(rank - n));
  r.add("bidual inside M", member);

  // bidual coproduct, transported, against W*(1⊗z)W
  double cop = 0.0;
  const Mat& w = q.W();
  for (Index m = 0; m < bd.dim(); ++m) {
    Mat lhs = Mat::Zero(n * n, n * n);
    for (Index a = 0; a < bd.dim(); ++a)
      for (Index b = 0; b < bd.dim(); ++b) {
        cplx c = bd.delta_hat(a * bd.dim() + b, m);
        if (c != cplx(0.0)) lhs += c * kron(z[static_cast<size_t>(a)], z[static_cast<size_t>(b)]);
      }
    Mat rhs = w.adjoint() * kron(identity(n), z[static_cast<size_t>(m)]) * w;
    cop = std::max(cop, residual(lhs, rhs));
  }
  r.add("bidual coproduct", cop);
  // Ŵ of the dual is ΣŴ*Σ = W, transported back
  r.add("bidual multiplicative unitary", residual(dq.to_HH(bd.W_hat), w));
  return r;
}

}  // namespace qgw
