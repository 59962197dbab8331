#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <set>

using namespace qgw;

namespace {

struct Built {
  QuantumGroupData q;
  DualQuantumGroup d;
  VerificationReport report;
};

// one pipeline run per example for the whole binary
const Built& built(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Built>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return *it->second;
  auto s = build_example(name);
  auto b = std::make_unique<Built>();
  b->q = QuantumGroupData::build(s.alg, s.delta, name);
  b->d = dual_quantum_group(b->q);
  b->report = run_suite(b->q, b->d);
  return *cache.emplace(name, std::move(b)).first->second;
}

const EntryReport& entry(const VerificationReport& r, const std::string& id) {
  for (const auto& e : r.entries)
    if (e.id == id) return e;
  throw std::runtime_error("missing entry " + id);
}

double parse_after(const std::string& note, const std::string& key) {
  auto pos = note.find(key);
  if (pos == std::string::npos) return -1.0;
  return std::stod(note.substr(pos + key.size()));
}

}  // namespace

TEST_CASE("catalog ids are unique and in catalog order", "[relations]") {
  auto ids = relation_ids();
  CHECK(ids.size() == 36);
  std::set<std::string> uniq(ids.begin(), ids.end());
  CHECK(uniq.size() == ids.size());
  for (const auto& e : relation_catalog()) {
    CHECK(e.id.rfind("REL-", 0) == 0);
    CHECK_FALSE(e.paper_ref.empty());
    CHECK_FALSE(e.description.empty());
  }
}

TEST_CASE("every entry passes on every positive example", "[relations]") {
  for (const auto& ex : example_catalog()) {
    if (!ex.positive) continue;
    const auto& b = built(ex.name);
    CHECK(b.report.entries.size() == relation_ids().size());
    for (const auto& e : b.report.entries) {
      INFO(ex.name << " " << e.id << " residual " << e.residual);
      CHECK(e.pass);
      CHECK(e.residual < 1e-9);
    }
  }
}

TEST_CASE("trivial group residuals sit at rounding level", "[relations]") {
  const auto& b = built("trivial");
  for (const auto& e : b.report.entries) {
    INFO(e.id);
    CHECK(e.residual <= 1e-14);
  }
}

TEST_CASE("nonabelian examples are nondegenerate: J differs from J hat", "[relations]") {
  for (const auto& ex : example_catalog()) {
    bool nonabelian = ex.kind == ExampleDescriptor::KacPaljutkin ||
                      (ex.positive && !ex.group.empty() && !check_group(group_by_name(ex.group)).abelian);
    if (!nonabelian) continue;
    const auto& b = built(ex.name);
    double gap = residual(b.q.J(), b.q.J_hat());
    INFO(ex.name);
    CHECK(gap > 0.1);
    for (const char* id : {"REL-4.9", "REL-4.11", "REL-4.12", "REL-4.19", "REL-4.20"}) {
      const auto& e = entry(b.report, id);
      INFO(id);
      CHECK(e.pass);
      CHECK(parse_after(e.note, "|J-J_hat|=") > 0.1);
    }
  }
}

TEST_CASE("emergent-trivial entries record the computed constants", "[relations]") {
  for (const auto& ex : example_catalog()) {
    if (!ex.positive) continue;
    const auto& b = built(ex.name);
    for (const auto& c : relation_catalog()) {
      if (c.expected != Expectation::EmergentTrivial) continue;
      const auto& e = entry(b.report, c.id);
      INFO(ex.name << " " << c.id << ": " << e.note);
      REQUIRE(e.note.find("computed nu=") != std::string::npos);
      CHECK(std::abs(parse_after(e.note, "computed nu=") - 1.0) < 1e-6);
      CHECK(std::abs(parse_after(e.note, "nu_hat=") - 1.0) < 1e-6);
      CHECK(parse_after(e.note, "|delta-1|=") < 1e-6);
      CHECK(parse_after(e.note, "|delta_hat-1|=") < 1e-6);
    }
  }
}

TEST_CASE("K against J hat nabla hat^{1/2} is reported everywhere", "[relations]") {
  for (const auto& ex : example_catalog()) {
    if (!ex.positive) continue;
    const auto& b = built(ex.name);
    const auto& e = entry(b.report, "REL-R4.10");
    INFO(ex.name);
    CHECK(e.residual < 1e-9);
    CHECK(e.note.find("|I-J_hat|=") != std::string::npos);
  }
}

TEST_CASE("suite subsets, unknown ids and tolerance", "[relations]") {
  const auto& b = built("s3_function");
  auto sub = run_suite(b.q, b.d, 1e-9, default_t_samples(), {"REL-4.20", "REL-1.11"});
  REQUIRE(sub.entries.size() == 2);
  CHECK(sub.entries[0].id == "REL-1.11");
  CHECK(sub.entries[1].id == "REL-4.20");
  try {
    run_suite(b.q, b.d, 1e-9, default_t_samples(), {"REL-9.99"});
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
  // a zero tolerance makes residuals that are not exactly zero fail
  auto strict = run_suite(b.q, b.d, 0.0, default_t_samples(), {"REL-1.11"});
  CHECK(strict.entries[0].pass == (strict.entries[0].residual < 0.0));
}

TEST_CASE("thread count does not change the report", "[relations]") {
  const auto& b = built("kp8");
  setenv("QGW_THREADS", "1", 1);
  CHECK(suite_threads() == 1);
  auto one = to_json(run_suite(b.q, b.d)).dump();
  setenv("QGW_THREADS", "4", 1);
  auto four = to_json(run_suite(b.q, b.d)).dump();
  unsetenv("QGW_THREADS");
  CHECK(one == four);
  CHECK(one == to_json(b.report).dump());
}

TEST_CASE("report JSON schema and round trip", "[relations][json]") {
  const auto& b = built("s3_group");
  auto j = to_json(b.report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"example", "tol", "t_samples", "entries"});
  const auto& first = j["entries"][0];
  std::vector<std::string> ekeys;
  for (auto it = first.begin(); it != first.end(); ++it) ekeys.push_back(it.key());
  CHECK(ekeys == std::vector<std::string>{"id", "paper_ref", "residual", "pass", "note"});
  auto back = report_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  CHECK(back.example == "s3_group");
}
