#pragma once

// Dense complex linear algebra shared by every module: Kronecker products,
// leg slicing on tensor products, Hermitian functional calculus, null
// spaces, and antilinear operators stored as "matrix after conjugation".

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr cplx kI{0.0, 1.0};

enum class ErrorKind {
  DimensionMismatch,
  InvalidInput,
  NotPositive,
  NotFaithful,
  NoInvariantFunctional,
  NonUniqueInvariant,
  NotUnitary,
  InconsistentAssignment,
  RankDeficient,
  NotInvolutive,
  NonTracialUnsupported,
  SliceSpanNotClosed,
  NotAGroup,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::NoInvariantFunctional: return "NoInvariantFunctional";
    case ErrorKind::NonUniqueInvariant: return "NonUniqueInvariant";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::InconsistentAssignment: return "InconsistentAssignment";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NonTracialUnsupported: return "NonTracialUnsupported";
    case ErrorKind::SliceSpanNotClosed: return "SliceSpanNotClosed";
    case ErrorKind::NotAGroup: return "NotAGroup";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require_dim(Index got, Index want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": expected " + std::to_string(want) + ", got " +
                    std::to_string(got));
  }
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }
inline double residual(const Mat& a, const Mat& b) { return max_abs(Mat(a - b)); }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline Mat identity(Index n) { return Mat::Identity(n, n); }

// Flip  C^n1 ⊗ C^n2 -> C^n2 ⊗ C^n1,  e_a ⊗ e_b -> e_b ⊗ e_a.
inline Mat flip(Index n1, Index n2) {
  Mat s = Mat::Zero(n1 * n2, n1 * n2);
  for (Index a = 0; a < n1; ++a)
    for (Index b = 0; b < n2; ++b) s(b * n1 + a, a * n2 + b) = 1.0;
  return s;
}

// Permutation on C^n1 ⊗ C^n2 ⊗ C^n3 exchanging the last two legs.
inline Mat flip23(Index n1, Index n2, Index n3) { return kron(identity(n1), flip(n2, n3)); }

// Slice (ι⊗ω_{kl}) X with ω_{kl} = <· e_k, e_l>, X acting on C^n1 ⊗ C^n2.
inline Mat slice_right(const Mat& x, Index n1, Index n2, Index k, Index l) {
  Mat out(n1, n1);
  for (Index p = 0; p < n1; ++p)
    for (Index q = 0; q < n1; ++q) out(p, q) = x(p * n2 + l, q * n2 + k);
  return out;
}

// Slice (ω_{kl}⊗ι) X.
inline Mat slice_left(const Mat& x, Index n1, Index n2, Index k, Index l) {
  Mat out(n2, n2);
  for (Index p = 0; p < n2; ++p)
    for (Index q = 0; q < n2; ++q) out(p, q) = x(l * n2 + p, k * n2 + q);
  return out;
}

// (f⊗ι)X for a map f on the first leg; f may change the leg dimension.
template <class F>
Mat map_left_leg(const Mat& x, Index n1, Index n2, F&& f) {
  Mat out;
  for (Index k = 0; k < n2; ++k) {
    for (Index l = 0; l < n2; ++l) {
      Mat unit_lk = Mat::Zero(n2, n2);
      unit_lk(l, k) = 1.0;
      Mat term = kron(f(slice_right(x, n1, n2, k, l)), unit_lk);
      if (out.size() == 0) out = Mat::Zero(term.rows(), term.cols());
      out += term;
    }
  }
  return out;
}

template <class F>
Mat map_right_leg(const Mat& x, Index n1, Index n2, F&& f) {
  Mat out;
  for (Index k = 0; k < n1; ++k) {
    for (Index l = 0; l < n1; ++l) {
      Mat unit_lk = Mat::Zero(n1, n1);
      unit_lk(l, k) = 1.0;
      Mat term = kron(unit_lk, f(slice_left(x, n1, n2, k, l)));
      if (out.size() == 0) out = Mat::Zero(term.rows(), term.cols());
      out += term;
    }
  }
  return out;
}

inline Vec vec(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

inline Mat unvec(const Vec& v, Index rows, Index cols) {
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

inline Mat hermitian_part(const Mat& a) { return 0.5 * (a + a.adjoint()); }

// f(A) for Hermitian A through its eigendecomposition; f maps a real
// eigenvalue to a complex number.
template <class F>
Mat hermitian_function(const Mat& a, F&& f) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(a));
  const auto& vals = es.eigenvalues();
  Vec mapped(vals.size());
  for (Index i = 0; i < vals.size(); ++i) mapped(i) = f(vals(i));
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
}

inline Eigen::VectorXd hermitian_eigenvalues(const Mat& a) {
  return Eigen::SelfAdjointEigenSolver<Mat>(hermitian_part(a), Eigen::EigenvaluesOnly)
      .eigenvalues();
}

// A^z for positive definite Hermitian A and complex z.
inline Mat positive_power(const Mat& a, cplx z) {
  return hermitian_function(a, [z](double lam) { return std::exp(z * std::log(lam)); });
}

// A^{it}
inline Mat unitary_power(const Mat& a, double t) { return positive_power(a, kI * t); }

inline Mat positive_log(const Mat& a) {
  return hermitian_function(a, [](double lam) { return cplx(std::log(lam), 0.0); });
}

inline Mat hermitian_exp(const Mat& h) {
  return hermitian_function(h, [](double lam) { return cplx(std::exp(lam), 0.0); });
}

inline bool is_positive_definite(const Mat& a, double rel_cutoff = 1e-10) {
  auto ev = hermitian_eigenvalues(a);
  if (ev.size() == 0) return true;
  return ev.minCoeff() > rel_cutoff * std::max(1e-300, ev.cwiseAbs().maxCoeff());
}

struct SvdSummary {
  Eigen::VectorXd singular_values;
  Index rank = 0;
  Mat null_basis;  // columns span the kernel
};

// Numerical rank and kernel with cutoff rel_cutoff * sigma_max.
inline SvdSummary svd_summary(const Mat& a, double rel_cutoff = 1e-10) {
  SvdSummary out;
  if (a.cols() == 0) return out;
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const double smax = out.singular_values.size() ? out.singular_values(0) : 0.0;
  const double cut = rel_cutoff * smax;
  for (Index i = 0; i < out.singular_values.size(); ++i)
    if (smax > 0.0 && out.singular_values(i) > cut) ++out.rank;
  out.null_basis = svd.matrixV().rightCols(a.cols() - out.rank);
  return out;
}

inline Index numerical_rank(const Mat& a, double rel_cutoff = 1e-10) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(0) > 0.0 && s(i) > rel_cutoff * s(0)) ++r;
  return r;
}

// Columns of a matrix (each a vectorised operator) as a basis; solves for
// coordinates of arbitrary vectors in that basis and reports the residual.
class SpanSolver {
 public:
  SpanSolver() = default;
  explicit SpanSolver(Mat basis) : basis_(std::move(basis)), cod_(basis_) {
    cod_.setThreshold(1e-12);
  }

  Vec coordinates(const Vec& target) const { return cod_.solve(target); }
  double residual(const Vec& target) const {
    return max_abs(Vec(basis_ * coordinates(target) - target));
  }
  Index rank() const { return cod_.rank(); }
  const Mat& basis() const { return basis_; }

 private:
  Mat basis_;
  Eigen::CompleteOrthogonalDecomposition<Mat> cod_;
};

// Antilinear operator v -> M conj(v).  Composition of two antilinear
// operators is linear with matrix M1 conj(M2); the adjoint has matrix M^T.
class AntilinearOperator {
 public:
  AntilinearOperator() = default;
  explicit AntilinearOperator(Mat m) : mat_(std::move(m)) {}

  const Mat& matrix() const { return mat_; }
  Index rows() const { return mat_.rows(); }
  Index cols() const { return mat_.cols(); }

  Vec operator()(const Vec& v) const { return mat_ * v.conjugate(); }

  // this ∘ other (linear)
  Mat compose(const AntilinearOperator& other) const { return mat_ * other.mat_.conjugate(); }
  // this ∘ lin (antilinear)
  AntilinearOperator after(const Mat& lin) const {
    return AntilinearOperator(mat_ * lin.conjugate());
  }
  // lin ∘ this (antilinear)
  AntilinearOperator before(const Mat& lin) const { return AntilinearOperator(lin * mat_); }
  // this ∘ x ∘ this (linear)
  Mat sandwich(const Mat& x) const { return mat_ * x.conjugate() * mat_.conjugate(); }

  AntilinearOperator adjoint() const { return AntilinearOperator(mat_.transpose()); }
  // A^* A, a positive linear operator
  Mat gram() const { return Mat(mat_.adjoint() * mat_).conjugate(); }

  friend AntilinearOperator tensor(const AntilinearOperator& a, const AntilinearOperator& b) {
    return AntilinearOperator(kron(a.mat_, b.mat_));
  }

 private:
  Mat mat_;
};

inline double residual(const AntilinearOperator& a, const AntilinearOperator& b) {
  return residual(a.matrix(), b.matrix());
}

// A = phase ∘ positive^{1/2}; `positive` is A^*A.
struct AntilinearPolar {
  AntilinearOperator phase;
  Mat positive;
};

inline AntilinearPolar polar(const AntilinearOperator& a) {
  Mat pos = hermitian_part(a.gram());
  if (!is_positive_definite(pos)) {
    throw Error(ErrorKind::RankDeficient, "antilinear operator is not injective");
  }
  return {a.after(positive_power(pos, -0.5)), pos};
}

// Unitary U with U(A)U^* for an antilinear A.
inline AntilinearOperator conjugate_by(const Mat& u, const AntilinearOperator& a) {
  return AntilinearOperator(u * a.matrix() * u.transpose());
}

inline double unitarity_residual(const Mat& u) {
  return std::max(residual(Mat(u.adjoint() * u), identity(u.cols())),
                  residual(Mat(u * u.adjoint()), identity(u.rows())));
}

inline double antiunitarity_residual(const AntilinearOperator& a) {
  return unitarity_residual(a.matrix());
}

}  // namespace qgw
