#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qgw;

namespace {

struct Built {
  QuantumGroupData q;
  DualQuantumGroup d;
};

Built make(const std::string& name) {
  auto s = build_example(name);
  auto q = QuantumGroupData::build(s.alg, s.delta, name);
  auto d = dual_quantum_group(q);
  return {std::move(q), std::move(d)};
}

}  // namespace

TEST_CASE("dual of C(G) is spanned by the left regular representation", "[dual]") {
  for (const char* g : {"z4", "s3", "d4", "q8"}) {
    INFO(g);
    oracle::GroupOracle go(group_by_name(g));
    auto b = make(std::string(g) + "_function");
    // H has orthonormal basis sqrt|G| Λ(d_x) = e_x since the frame is scalar
    std::vector<Mat> left, right;
    for (int x = 0; x < go.order(); ++x) {
      left.push_back(go.left_translation(x));
      right.push_back(go.right_translation(x));
    }
    CHECK(b.d.data.dim() == go.order());
    CHECK(oracle::same_span(b.d.data.basis, left));
    if (!go.abelian()) CHECK_FALSE(oracle::same_span(b.d.data.basis, right));
  }
}

TEST_CASE("dual of C[G] is the diagonal algebra of multiplication operators", "[dual]") {
  for (const char* g : {"z3", "s3", "q8"}) {
    INFO(g);
    auto b = make(std::string(g) + "_group");
    const Index n = b.q.dim();
    std::vector<Mat> diag;
    for (Index x = 0; x < n; ++x) {
      Mat e = Mat::Zero(n, n);
      e(x, x) = 1.0;
      diag.push_back(e);
    }
    CHECK(oracle::same_span(b.d.data.basis, diag));
  }
}

TEST_CASE("dual Haar functional on the dual of C(G) is the counting trace", "[dual][haar]") {
  oracle::GroupOracle go(symmetric_group_3());
  auto b = make("s3_function");
  const auto& d = b.d.data;
  for (int x = 0; x < go.order(); ++x) {
    Vec c = d.coords(go.left_translation(x));
    CHECK(d.membership(go.left_translation(x)) < 1e-10);
    cplx want = x == go.e ? cplx(double(go.order())) : cplx(0.0);
    CHECK(std::abs(d.phi_hat(c) - want) < 1e-10);
  }
  auto h = dual_haar(d);
  CHECK(h.left_residual < 1e-9);
  CHECK(h.right_residual < 1e-9);
  CHECK(*h.phi_hat.positive);
  CHECK(*h.phi_hat.faithful);
}

TEST_CASE("dimension of the dual equals the dimension of M", "[dual]") {
  for (const auto& e : example_catalog()) {
    if (!e.positive) continue;
    INFO(e.name);
    auto b = make(e.name);
    CHECK(b.d.data.dim() == b.q.dim());
    for (const auto& item : b.d.data.build_report.items) {
      INFO(item.name);
      CHECK(item.value < 1e-9);
    }
  }
}

TEST_CASE("module property of the dual GNS map on random pairs", "[dual]") {
  auto b = make("s3_function");
  const auto& d = b.d.data;
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Vec y1 = oracle::random_vec(rng, d.dim()), y = oracle::random_vec(rng, d.dim());
    Vec lhs = d.lambda(d.alg.multiply(y1, y));
    Vec rhs = d.op(y1) * d.lambda(y);
    CHECK(max_abs(Vec(lhs - rhs)) < 1e-10);
  }
  CHECK(module_property_residual(d) < 1e-10);
}

TEST_CASE("dual GNS map: commutant cross-check and adjoint relation", "[dual]") {
  for (const char* name : {"s3_function", "d4_group", "kp8"}) {
    INFO(name);
    auto b = make(name);
    auto rep = dual_lambda_checks(b.q, b.d.data);
    for (const auto& item : rep.items) {
      INFO(item.name);
      CHECK(item.value < 1e-9);
    }
  }
}

TEST_CASE("dual multiplicative unitary and pentagon", "[dual][W]") {
  for (const auto& e : example_catalog()) {
    if (!e.positive) continue;
    INFO(e.name);
    auto b = make(e.name);
    const Index n = b.q.dim();
    Mat s = flip(n, n);
    CHECK(residual(b.d.data.W_hat, Mat(s * b.q.W().adjoint() * s)) < 1e-15);
    CHECK(residual(b.d.to_HH(b.d.qg.W()), b.d.data.W_hat) < 1e-9);
    CHECK(pentagon_residual(b.d.data.W_hat, n) < 1e-9);
    CHECK(unitarity_residual(b.d.U) < 1e-9);
  }
}

TEST_CASE("biduality recovers M and its coproduct", "[dual]") {
  for (const char* name : {"s3_function", "z4_group", "kp8", "trivial"}) {
    INFO(name);
    auto b = make(name);
    auto rep = biduality_check(b.q, b.d);
    for (const auto& item : rep.items) {
      INFO(item.name);
      CHECK(item.value < 1e-9);
    }
  }
}

TEST_CASE("M meets M^ and its commutant only in the scalars", "[dual]") {
  for (const char* name : {"s3_function", "s3_group", "kp8", "q8_group"}) {
    INFO(name);
    auto b = make(name);
    auto in = intersections(b.q, b.d.data);
    CHECK(in.m_cap_mhat_commutant == 1);
    CHECK(in.m_cap_mhat == 1);
  }
}

TEST_CASE("pivot selection is deterministic and sorted", "[dual]") {
  auto b1 = make("kp8");
  auto b2 = make("kp8");
  CHECK(b1.d.data.chosen == b2.d.data.chosen);
  CHECK(std::is_sorted(b1.d.data.chosen.begin(), b1.d.data.chosen.end()));
}
