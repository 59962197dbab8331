// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

using namespace qgw;

namespace {

struct Built {
  QuantumGroupData q;
  DualQuantumGroup d;
  VerificationReport report;
};

std::map<std::string, std::unique_ptr<Built>> g_built;
double g_pipeline_seconds = 0.0;

std::vector<std::string> positive_names() {
  std::vector<std::string> out;
  for (const auto& e : example_catalog())
    if (e.positive) out.push_back(e.name);
  return out;
}

bool nonabelian(const ExampleDescriptor& e) {
  if (e.kind == ExampleDescriptor::KacPaljutkin) return true;
  return e.positive && !e.group.empty() && !check_group(group_by_name(e.group)).abelian;
}

const EntryReport* find_entry(const VerificationReport& r, const std::string& id) {
  for (const auto& e : r.entries)
    if (e.id == id) return &e;
  return nullptr;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

int g_failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <class F>
void guarded(int n, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qgw");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string worst_at;
  bool ok = true;
  for (const auto& name : positive_names()) {
    auto s = build_example(name);
    auto b = std::make_unique<Built>();
    b->q = QuantumGroupData::build(s.alg, s.delta, name);
    b->d = dual_quantum_group(b->q);
    b->report = run_suite(b->q, b->d, 1e-9, default_t_samples());
    for (const auto& e : b->report.entries) {
      ok = ok && e.pass && e.residual < 1e-9;
      if (e.residual >= worst) {
        worst = e.residual;
        worst_at = name + " " + e.id;
      }
    }
    ok = ok && b->report.entries.size() == relation_ids().size();
    g_built[name] = std::move(b);
  }
  g_pipeline_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && g_pipeline_seconds < 60.0;
  report(1, ok,
         std::to_string(g_built.size()) + " specimens x " + std::to_string(relation_ids().size()) +
             " entries, worst residual " + sci(worst) + " (" + worst_at + "), " + sci(g_pipeline_seconds) + " s");
}

void criterion2() {
  double w = 0.0, wh = 0.0;
  for (const auto& [name, b] : g_built) {
    w = std::max(w, pentagon_residual(b->q.W(), b->q.dim()));
    wh = std::max(wh, pentagon_residual(b->d.data.W_hat, b->q.dim()));
    wh = std::max(wh, pentagon_residual(b->d.qg.W(), b->d.qg.dim()));
  }
  report(2, !g_built.empty() && w < 1e-9 && wh < 1e-9, "pentagon W " + sci(w) + ", W hat " + sci(wh));
}

void criterion3() {
  bool ok = true;
  for (const auto& name : positive_names()) {
    auto s = build_example(name);
    auto h = solve_haar(s.alg, s.delta);
    ok = ok && h.left_nullity == 1 && h.right_nullity == 1;
  }
  auto bs = build_invalid_blocksum();
  Index left = bs.alg.dim() - numerical_rank(left_invariance_system(bs.alg, bs.delta));
  Index right = bs.alg.dim() - numerical_rank(right_invariance_system(bs.alg, bs.delta));
  std::string kind;
  try {
    QuantumGroupData::build(bs.alg, bs.delta);
  } catch (const Error& e) {
    kind = to_string(e.kind());
  }
  ok = ok && std::max(left, right) >= 2 && kind == "NonUniqueInvariant";
  report(3, ok,
         "nullity 1 on all valid specimens; block-sum nullities " + std::to_string(left) + "/" +
             std::to_string(right) + ", error " + (kind.empty() ? "none" : kind));
}

void criterion4() {
  auto b = build_matrix_algebra({2, 3});
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.2, 0.8);
  auto state = [&] {
    double p = u(rng);
    return std::vector<Mat>{Mat(p * oracle::random_density(rng, 2)),
                            Mat((1.0 - p) * oracle::random_density(rng, 3))};
  };
  double kms = 0.0, jnj = 0.0, pol = 0.0, chain = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto r1 = state(), r2 = state(), r3 = state();
    auto g1 = gns(b.alg, density_functional(b, r1));
    auto g2 = gns(b.alg, density_functional(b, r2));
    auto g3 = gns(b.alg, density_functional(b, r3));
    auto m = tomita(g1);
    kms = std::max(kms, kms_residual(g1, m));
    jnj = std::max(jnj, residual(m.J.sandwich(m.nabla), positive_power(m.nabla, -1.0)));
    pol = std::max(pol, residual(m.T, m.J.after(positive_power(m.nabla, 0.5))));
    auto r12 = relative_tomita(g1, g2), r23 = relative_tomita(g2, g3), r13 = relative_tomita(g1, g3);
    for (double t : default_t_samples()) {
      Vec prod = b.alg.multiply(r12.cocycle(g1, t), r23.cocycle(g2, t));
      chain = std::max(chain, max_abs(Vec(r13.cocycle(g1, t) - prod)));
      // and against the densities directly
      chain = std::max(chain, max_abs(Vec(r13.cocycle(g1, t) - oracle::density_cocycle(b, r1, r3, t))));
    }
  }
  report(4, kms < 1e-8 && jnj < 1e-9 && pol < 1e-9 && chain < 1e-8,
         "20 states on M2+M3: KMS " + sci(kms) + ", JnablaJ-nabla^-1 " + sci(jnj) + ", polar " + sci(pol) +
             ", cocycle chain " + sci(chain));
}

void criterion5() {
  double k = 0.0, k2 = 0.0, sw = 0.0;
  for (const auto& [name, b] : g_built) {
    const auto& q = b->q;
    const auto& alg = q.algebra();
    Mat so = oracle::hopf_antipode(alg, q.coproduct());
    const auto& g = q.gns_psi();
    Mat direct = g.frame() * alg.star_matrix() * so.conjugate() * g.frame_inv().conjugate();
    k = std::max(k, residual(q.antipode().K.matrix(), direct));
    k2 = std::max(k2, residual(q.antipode().K.compose(q.antipode().K), identity(q.dim())));
    const auto& gp = q.gns_phi();
    Mat m = map_left_leg(q.W(), q.dim(), q.dim(), [&](const Mat& x) { return gp.pi(Vec(so * gp.element_of(x))); });
    sw = std::max(sw, residual(m, Mat(q.W().adjoint())));
    sw = std::max(sw, residual(map_left_leg(q.W(), q.dim(), q.dim(),
                                            [&](const Mat& x) { return gp.pi(Vec(q.S() * gp.element_of(x))); }),
                               Mat(q.W().adjoint())));
  }
  report(5, !g_built.empty() && k < 1e-9 && k2 < 1e-9 && sw < 1e-9,
         "K vs S-formula " + sci(k) + ", K^2-1 " + sci(k2) + ", (S⊗id)W-W* " + sci(sw));
}

void criterion6() {
  double what = 0.0, inv = 0.0, bi = 0.0;
  for (const auto& [name, b] : g_built) {
    const Index n = b->q.dim();
    Mat s = flip(n, n);
    Mat sws = s * b->q.W().adjoint() * s;
    what = std::max(what, residual(b->d.data.W_hat, sws));
    what = std::max(what, residual(b->d.to_HH(b->d.qg.W()), sws));
    inv = std::max(inv, dual_haar(b->d.data).left_residual);
    bi = std::max(bi, biduality_check(b->q, b->d).worst());
  }
  bool spans = true;
  for (const char* g : {"z2", "z3", "z4", "s3", "d4", "q8"}) {
    oracle::GroupOracle go(group_by_name(g));
    std::vector<Mat> left;
    for (int x = 0; x < go.order(); ++x) left.push_back(go.left_translation(x));
    spans = spans && oracle::same_span(g_built.at(std::string(g) + "_function")->d.data.basis, left);
  }
  report(6, !g_built.empty() && what < 1e-9 && inv < 1e-9 && bi < 1e-9 && spans,
         "W hat vs ΣW*Σ " + sci(what) + ", phi hat invariance " + sci(inv) + ", biduality " + sci(bi) +
             ", dual of C(G) = span of left translations: " + (spans ? "yes" : "no"));
}

double note_value(const std::string& note, const std::string& key) {
  auto pos = note.find(key);
  if (pos == std::string::npos) return -1.0;
  return std::stod(note.substr(pos + key.size()));
}

void criterion7() {
  bool ok = true;
  double worst = 0.0, min_gap = 1e300;
  int specimens = 0;
  for (const auto& e : example_catalog()) {
    if (!nonabelian(e)) continue;
    ++specimens;
    const auto& b = *g_built.at(e.name);
    double gap = residual(b.q.J(), b.q.J_hat());
    min_gap = std::min(min_gap, gap);
    ok = ok && gap > 0.1;
    for (const char* id : {"REL-4.9", "REL-4.11", "REL-4.12", "REL-4.19", "REL-4.20"}) {
      const auto* r = find_entry(b.report, id);
      ok = ok && r && r->pass;
      if (r) worst = std::max(worst, r->residual);
    }
  }
  int emergent = 0;
  for (const auto& [name, b] : g_built)
    for (const auto& c : relation_catalog()) {
      if (c.expected != Expectation::EmergentTrivial) continue;
      const auto* r = find_entry(b->report, c.id);
      bool logged = r && r->note.find("computed nu=") != std::string::npos &&
                    std::abs(note_value(r->note, "computed nu=") - 1.0) < 1e-6 &&
                    std::abs(note_value(r->note, "nu_hat=") - 1.0) < 1e-6 &&
                    note_value(r->note, "|delta-1|=") >= 0.0 && note_value(r->note, "|delta-1|=") < 1e-6 &&
                    note_value(r->note, "|delta_hat-1|=") >= 0.0 && note_value(r->note, "|delta_hat-1|=") < 1e-6;
      ok = ok && logged;
      ++emergent;
    }
  ok = ok && specimens > 0 && emergent > 0;
  report(7, ok,
         std::to_string(specimens) + " nonabelian specimens, min |J-J_hat| " + sci(min_gap) +
             ", worst residual " + sci(worst) + "; " + std::to_string(emergent) +
             " emergent-trivial entries log computed nu, nu_hat, delta, delta_hat");
}

void criterion8() {
  bool ok = !g_built.empty();
  double worst = 0.0;
  for (const auto& [name, b] : g_built) {
    const auto* r = find_entry(b->report, "REL-R4.10");
    ok = ok && r != nullptr;
    if (!r) continue;
    worst = std::max(worst, r->residual);
    double direct = residual(b->q.K_on_H(), b->q.J_hat().after(positive_power(b->q.nabla_hat(), 0.5)));
    ok = ok && std::abs(direct - r->residual) < 1e-12;
  }
  ok = ok && worst < 1e-9;
  report(8, ok, "|K - J_hat nabla_hat^{1/2}| reported for all specimens, worst " + sci(worst));
}

void criterion9() {
  std::vector<std::string> seen;
  bool ok = true;
  // perturbed structure constants
  {
    auto s = build_function_algebra(symmetric_group_3());
    auto left = s.alg.left_mult();
    left[1](2, 3) += 1e-3;
    AlgebraSpec bad(s.alg.labels(), left, s.alg.star_matrix(), s.alg.unit());
    bool assoc = false;
    for (const auto& v : validate_algebra(bad)) assoc = assoc || v.axiom == "associativity";
    auto p = std::filesystem::temp_directory_path() / "qgw_acceptance_perturbed.json";
    write_text_file(p.string(), to_json(bad, &s.delta, "perturbed").dump());
    auto r = cli({"check", "--input", p.string()});
    bool hit = assoc && r.code == 2 && r.err.find("associativity") != std::string::npos;
    ok = ok && hit;
    seen.push_back(std::string("perturbed mult -> exit ") + std::to_string(r.code));
  }
  // non-group tables
  {
    int raised = 0;
    const std::vector<GroupTable> tables{{"minus", {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}},
                                         {"const", {{0, 0}, {0, 0}}},
                                         {"monoid", {{0, 1}, {1, 1}}},
                                         {"open", {{0, 1}, {1, 2}}}};
    for (const auto& t : tables) {
      try {
        build_function_algebra(t);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotAGroup) ++raised;
      }
    }
    ok = ok && raised == static_cast<int>(tables.size());
    seen.push_back("non-group tables -> NotAGroup " + std::to_string(raised) + "/" + std::to_string(tables.size()));
  }
  // block sum
  {
    auto r = cli({"check", "--example", "blocksum_invalid"});
    bool hit = r.code == 2 && r.err.find("NonUniqueInvariant") != std::string::npos;
    ok = ok && hit;
    seen.push_back("block-sum -> exit " + std::to_string(r.code));
  }
  std::string d;
  for (const auto& s : seen) d += (d.empty() ? "" : ", ") + s;
  report(9, ok, d);
}

void criterion10() {
  auto dir = std::filesystem::temp_directory_path();
  auto a = dir / "qgw_acceptance_a.json", b = dir / "qgw_acceptance_b.json";
  bool ok = true;
  for (const char* ex : {"kp8", "s3_function"}) {
    int ra = cli({"check", "--example", ex, "--format", "json", "--out", a.string()}).code;
    int rb = cli({"check", "--example", ex, "--format", "json", "--out", b.string()}).code;
    std::string sa = slurp(a), sb = slurp(b);
    ok = ok && ra == 0 && rb == 0 && !sa.empty() && sa == sb;
  }
  report(10, ok, "two consecutive check runs give byte-identical JSON");
}

}  // namespace

int main() {
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  guarded(9, criterion9);
  guarded(10, criterion10);
  std::printf("%d of 10 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
