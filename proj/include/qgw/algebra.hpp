#pragma once

// Finite-dimensional unital *-algebras given by structure constants.

#include "qgw/linalg.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qgw {

inline constexpr double kDefaultTol = 1e-9;

using Element = Vec;

struct Violation {
  std::string axiom;
  double residual = 0.0;
  std::string detail;
};

inline std::string describe(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (const auto& v : vs) os << v.axiom << " (residual " << v.residual << ") " << v.detail << "\n";
  return os.str();
}

class AlgebraSpec {
 public:
  AlgebraSpec() = default;

  // left_mult[i] is the matrix of x -> e_i x, i.e. left_mult[i](k, j) = mult[k][i][j].
  AlgebraSpec(std::vector<std::string> labels, std::vector<Mat> left_mult, Mat star, Vec unit)
      : labels_(std::move(labels)),
        left_(std::move(left_mult)),
        star_(std::move(star)),
        unit_(std::move(unit)) {
    const Index n = static_cast<Index>(left_.size());
    if (n == 0) throw Error(ErrorKind::InvalidInput, "algebra dimension must be positive");
    require_dim(static_cast<Index>(labels_.size()), n, "labels");
    for (const auto& l : left_) {
      require_dim(l.rows(), n, "mult rows");
      require_dim(l.cols(), n, "mult cols");
    }
    require_dim(star_.rows(), n, "star rows");
    require_dim(star_.cols(), n, "star cols");
    require_dim(unit_.size(), n, "unit");
  }

  // Builds from a product rule e_i e_j = product(i, j).
  static AlgebraSpec from_products(std::vector<std::string> labels,
                                   const std::function<Vec(Index, Index)>& product, Mat star,
                                   Vec unit) {
    const Index n = static_cast<Index>(labels.size());
    std::vector<Mat> left(n, Mat::Zero(n, n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) left[i].col(j) = product(i, j);
    return AlgebraSpec(std::move(labels), std::move(left), std::move(star), std::move(unit));
  }

  // mult[k][i][j]
  static AlgebraSpec from_tensor(std::vector<std::string> labels,
                                 const std::vector<std::vector<std::vector<cplx>>>& mult,
                                 Mat star, Vec unit) {
    const Index n = static_cast<Index>(mult.size());
    std::vector<Mat> left(n, Mat::Zero(n, n));
    for (Index k = 0; k < n; ++k) {
      require_dim(static_cast<Index>(mult[k].size()), n, "mult[k]");
      for (Index i = 0; i < n; ++i) {
        require_dim(static_cast<Index>(mult[k][i].size()), n, "mult[k][i]");
        for (Index j = 0; j < n; ++j) left[i](k, j) = mult[k][i][j];
      }
    }
    return AlgebraSpec(std::move(labels), std::move(left), std::move(star), std::move(unit));
  }

  Index dim() const { return static_cast<Index>(left_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Mat>& left_mult() const { return left_; }
  const Mat& left(Index i) const { return left_[static_cast<size_t>(i)]; }
  cplx structure_constant(Index k, Index i, Index j) const { return left(i)(k, j); }
  const Mat& star_matrix() const { return star_; }
  const Vec& unit() const { return unit_; }

  double scale() const {
    double s = 1.0;
    for (const auto& l : left_) s = std::max(s, max_abs(l));
    return s;
  }

  Vec basis(Index i) const {
    Vec e = Vec::Zero(dim());
    e(i) = 1.0;
    return e;
  }

  // Matrix of x -> a x.
  Mat left_matrix(const Element& a) const {
    require_dim(a.size(), dim(), "element");
    Mat out = Mat::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (a(i) != cplx(0.0)) out += a(i) * left_[static_cast<size_t>(i)];
    return out;
  }

  // Matrix of x -> x a.
  Mat right_matrix(const Element& a) const {
    require_dim(a.size(), dim(), "element");
    Mat out(dim(), dim());
    for (Index j = 0; j < dim(); ++j) out.col(j) = left(j) * a;
    return out;
  }

  Element multiply(const Element& a, const Element& b) const {
    require_dim(a.size(), dim(), "left factor");
    require_dim(b.size(), dim(), "right factor");
    return left_matrix(a) * b;
  }

  Element star(const Element& a) const {
    require_dim(a.size(), dim(), "element");
    return star_ * a.conjugate();
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Mat> left_;
  Mat star_;
  Vec unit_;
};

inline Element multiply(const Element& a, const Element& b, const AlgebraSpec& alg) {
  return alg.multiply(a, b);
}

inline std::vector<Violation> validate_algebra(const AlgebraSpec& alg, double tol = kDefaultTol) {
  std::vector<Violation> out;
  const Index n = alg.dim();
  const double bound = tol * alg.scale();

  double assoc = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      // (e_i e_j) x = e_i (e_j x) for all x
      Mat lhs = alg.left_matrix(alg.left(i).col(j));
      Mat rhs = alg.left(i) * alg.left(j);
      assoc = std::max(assoc, residual(lhs, rhs));
    }
  }
  if (assoc > bound) out.push_back({"associativity", assoc, "(e_i e_j) e_k != e_i (e_j e_k)"});

  double unit_res = residual(alg.left_matrix(alg.unit()), identity(n));
  for (Index j = 0; j < n; ++j)
    unit_res = std::max(unit_res, max_abs(Vec(alg.left(j) * alg.unit() - alg.basis(j))));
  if (unit_res > bound) out.push_back({"unit", unit_res, "unit is not a two-sided identity"});

  const Mat& s = alg.star_matrix();
  double invol = residual(Mat(s * s.conjugate()), identity(n));
  if (invol > bound) out.push_back({"star-involution", invol, "star(star(x)) != x"});

  double anti = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec lhs = alg.star(alg.left(i).col(j));
      Vec rhs = alg.multiply(s.col(j), s.col(i));
      anti = std::max(anti, max_abs(Vec(lhs - rhs)));
    }
  }
  if (anti > bound) out.push_back({"star-antimultiplicative", anti, "(xy)* != y* x*"});
  return out;
}

inline AlgebraSpec tensor(const AlgebraSpec& a, const AlgebraSpec& b) {
  std::vector<std::string> labels;
  std::vector<Mat> left;
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < b.dim(); ++j) {
      labels.push_back("(" + a.labels()[static_cast<size_t>(i)] + "," +
                       b.labels()[static_cast<size_t>(j)] + ")");
      left.push_back(kron(a.left(i), b.left(j)));
    }
  }
  return AlgebraSpec(std::move(labels), std::move(left), kron(a.star_matrix(), b.star_matrix()),
                     kron(a.unit(), b.unit()));
}

class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(Vec covector) : covector_(std::move(covector)) {}

  const Vec& covector() const { return covector_; }
  Index dim() const { return covector_.size(); }

  cplx operator()(const Element& a) const {
    require_dim(a.size(), dim(), "functional argument");
    return (covector_.transpose() * a)(0);
  }

  LinearFunctional scaled(cplx c) const { return LinearFunctional(c * covector_); }

  // Cached classification, filled by classify().
  std::optional<bool> positive, faithful, tracial;

 private:
  Vec covector_;
};

inline cplx evaluate(const LinearFunctional& w, const Element& a) { return w(a); }

// x -> conj(w(x*))
inline LinearFunctional conjugate_functional(const LinearFunctional& w, const AlgebraSpec& alg) {
  require_dim(w.dim(), alg.dim(), "functional");
  return LinearFunctional(Vec(alg.star_matrix().transpose() * w.covector()).conjugate());
}

// gram(i, j) = w(e_j^* e_i)
inline Mat gram_matrix(const AlgebraSpec& alg, const LinearFunctional& w) {
  const Index n = alg.dim();
  require_dim(w.dim(), n, "functional");
  Mat g(n, n);
  for (Index j = 0; j < n; ++j) {
    Mat left_star = alg.left_matrix(alg.star_matrix().col(j));
    for (Index i = 0; i < n; ++i) g(i, j) = w(left_star.col(i));
  }
  return g;
}

// Maximal |w(xy) - w(yx)| over basis pairs.
inline double trace_defect(const AlgebraSpec& alg, const LinearFunctional& w) {
  double d = 0.0;
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j)
      d = std::max(d, std::abs(w(alg.left(i).col(j)) - w(alg.left(j).col(i))));
  return d;
}

inline LinearFunctional classify(const AlgebraSpec& alg, LinearFunctional w,
                                 double tol = kDefaultTol) {
  Mat g = gram_matrix(alg, w);
  const double herm = residual(g, Mat(g.adjoint()));
  auto ev = hermitian_eigenvalues(g);
  const double emax = ev.cwiseAbs().maxCoeff();
  w.positive = herm <= tol * std::max(1.0, emax) && ev.minCoeff() >= -tol * std::max(1.0, emax);
  w.faithful = *w.positive && ev.minCoeff() > 1e-10 * emax;
  w.tracial = trace_defect(alg, w) <= tol * std::max(1.0, max_abs(w.covector()));
  return w;
}

// Matrix of a linear map on the algebra, column j = f(e_j).
inline Mat map_matrix(Index n, const std::function<Element(const Element&)>& f) {
  Mat out(n, n);
  for (Index j = 0; j < n; ++j) {
    Vec e = Vec::Zero(n);
    e(j) = 1.0;
    out.col(j) = f(e);
  }
  return out;
}

}  // namespace qgw
