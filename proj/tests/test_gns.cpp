#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qgw;

namespace {

// random faithful state on M2 ⊕ M3
std::vector<Mat> random_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.2, 0.8);
  double p = u(rng);
  return {Mat(p * oracle::random_density(rng, 2)), Mat((1.0 - p) * oracle::random_density(rng, 3))};
}

}  // namespace

TEST_CASE("gram matrices of the Haar functionals on group examples", "[gns]") {
  for (const char* g : {"z3", "s3", "q8"}) {
    auto f = build_function_algebra(group_by_name(g));
    const Index n = f.alg.dim();
    auto q = QuantumGroupData::build(f.alg, f.delta);
    CHECK(residual(q.gns_phi().gram(), Mat(identity(n) / double(n))) < 1e-12);

    auto c = build_group_algebra(group_by_name(g));
    auto qc = QuantumGroupData::build(c.alg, c.delta);
    CHECK(residual(qc.gns_phi().gram(), identity(n)) < 1e-12);
  }
}

TEST_CASE("M2 with a diagonal density: gram and modular spectrum", "[gns]") {
  auto b = build_matrix_algebra({2});
  Mat rho = Mat::Zero(2, 2);
  rho(0, 0) = 1.0 / 3.0;
  rho(1, 1) = 2.0 / 3.0;
  auto phi = density_functional(b, {rho});
  auto g = gns(b.alg, phi);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Vec x = oracle::random_vec(rng, 4), y = oracle::random_vec(rng, 4);
    Mat xm = oracle::blocks_of(b, x)[0], ym = oracle::blocks_of(b, y)[0];
    cplx direct = (rho * ym.adjoint() * xm).trace();
    CHECK(std::abs(g.lambda(y).dot(g.lambda(x)) - direct) < 1e-12);
  }
  auto m = tomita(g);
  auto ev = hermitian_eigenvalues(m.nabla);
  std::vector<double> got(ev.data(), ev.data() + ev.size());
  std::sort(got.begin(), got.end());
  std::vector<double> want{0.5, 1.0, 1.0, 2.0};
  for (size_t i = 0; i < 4; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("a tracial functional has trivial modular operator", "[gns]") {
  auto kp = build_example("kp8");
  auto q = QuantumGroupData::build(kp.alg, kp.delta);
  CHECK(residual(q.nabla(), identity(8)) < 1e-12);
  CHECK(trace_defect(kp.alg, q.haar().phi) < 1e-12);
}

TEST_CASE("Tomita data on random faithful states of M2 ⊕ M3", "[gns][modular]") {
  auto b = build_matrix_algebra({2, 3});
  std::mt19937 rng(2024);
  const std::vector<double> ts{0.7, -1.3, 2.0};
  for (int trial = 0; trial < 20; ++trial) {
    auto rhos = random_state(rng);
    auto g = gns(b.alg, density_functional(b, rhos));
    auto m = tomita(g);
    CHECK(kms_residual(g, m) < 1e-8);
    CHECK(antiunitarity_residual(m.J) < 1e-10);
    CHECK(residual(m.J.compose(m.J), identity(13)) < 1e-10);
    CHECK(residual(m.J.sandwich(m.nabla), positive_power(m.nabla, -1.0)) < 1e-9);
    CHECK(residual(m.T, m.J.after(positive_power(m.nabla, 0.5))) < 1e-9);
    for (double t : ts) {
      Mat sig = m.sigma(g, t);
      for (int k = 0; k < 3; ++k) {
        Vec x = oracle::random_vec(rng, 13);
        CHECK(max_abs(Vec(sig * x - oracle::density_sigma(b, rhos, x, t))) < 1e-9);
      }
    }
    // sigma at an imaginary point
    Vec x = oracle::random_vec(rng, 13);
    cplx z(0.0, -0.5);
    CHECK(max_abs(Vec(m.sigma(g, z) * x - oracle::density_sigma(b, rhos, x, z))) < 1e-8);
  }
}

TEST_CASE("relative modular theory against densities", "[gns][modular]") {
  auto b = build_matrix_algebra({2, 3});
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto r1 = random_state(rng), r2 = random_state(rng), r3 = random_state(rng);
    auto g1 = gns(b.alg, density_functional(b, r1));
    auto g2 = gns(b.alg, density_functional(b, r2));
    auto g3 = gns(b.alg, density_functional(b, r3));

    // the diagonal case reproduces the ordinary data
    auto self = relative_tomita(g1, g1);
    auto m1 = tomita(g1);
    CHECK(residual(self.nabla_r, m1.nabla) < 1e-10);
    CHECK(residual(self.J_r, m1.J) < 1e-10);

    auto r12 = relative_tomita(g1, g2);
    auto r23 = relative_tomita(g2, g3);
    auto r13 = relative_tomita(g1, g3);
    auto m2 = tomita(g2);
    for (double s : {0.4, -1.1}) {
      for (double t : {0.9, 1.7}) {
        Vec us = r12.cocycle(g1, s);
        Vec ut = r12.cocycle(g1, t);
        Vec ust = r12.cocycle(g1, s + t);
        CHECK(max_abs(Vec(ust - oracle::density_cocycle(b, r1, r2, s + t))) < 1e-8);
        // u_{s+t} = u_s sigma^{phi2}_s(u_t)
        Vec rhs = b.alg.multiply(us, Vec(m2.sigma(g2, s) * ut));
        CHECK(max_abs(Vec(ust - rhs)) < 1e-8);
      }
      // chain rule (Dphi1:Dphi3) = (Dphi1:Dphi2)(Dphi2:Dphi3)
      Vec chain = b.alg.multiply(r12.cocycle(g1, s), r23.cocycle(g2, s));
      CHECK(max_abs(Vec(r13.cocycle(g1, s) - chain)) < 1e-8);
      CHECK(unitarity_residual(r12.cocycle_operator(s)) < 1e-10);
    }
  }
}

TEST_CASE("cocycle of a rescaled functional is a scalar phase", "[gns][modular]") {
  auto b = build_matrix_algebra({2, 3});
  std::mt19937 rng(5);
  auto rhos = random_state(rng);
  auto phi = density_functional(b, rhos);
  const double c = 3.0;
  auto r = relative_tomita(b.alg, phi, phi.scaled(c));
  for (double t : {0.5, -2.0, 1.0 / 3.0}) {
    Vec u = r.cocycle(gns(b.alg, phi), t);
    Vec want = std::exp(cplx(0.0, -t * std::log(c))) * b.alg.unit();
    CHECK(max_abs(Vec(u - want)) < 1e-10);
  }
}

TEST_CASE("non-faithful and non-positive functionals are rejected", "[gns]") {
  auto b = build_matrix_algebra({2});
  Mat rho = Mat::Zero(2, 2);
  rho(0, 0) = 1.0;
  try {
    gns(b.alg, density_functional(b, {rho}));
    FAIL("expected NotFaithful");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFaithful);
  }
  rho(1, 1) = -0.5;
  try {
    gns(b.alg, density_functional(b, {rho}));
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositive);
  }
}
