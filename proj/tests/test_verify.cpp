#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "test_support.hpp"

namespace {

using namespace vknot;

CheckReport without_time(CheckReport r) {
  r.elapsed_ms = 0;
  return r;
}

bool same(const CheckReport& a, const CheckReport& b) { return to_json(without_time(a)) == to_json(without_time(b)); }

TEST(Enumeration, CountsMatchClosedForm) {
  // (2k-1)!! pairings, 2^k orientations, 2^k sign patterns
  const std::uint64_t expected[] = {1, 4, 48, 960};
  for (int k = 0; k <= 3; ++k) {
    std::uint64_t n = 0;
    for_each_diagram(k, [&](const GaussDiagram&) { ++n; });
    EXPECT_EQ(n, raw_diagram_count(k)) << k;
    EXPECT_EQ(n, expected[k]) << k;
  }
}

TEST(Enumeration, ShardsPartitionThePopulation) {
  std::set<GaussDiagram> all, merged;
  for_each_diagram(3, [&](const GaussDiagram& g) { all.insert(g); });
  std::size_t total = 0;
  for (int s = 0; s < 3; ++s)
    for_each_diagram(3, [&](const GaussDiagram& g) {
      merged.insert(g);
      ++total;
    }, s, 3);
  EXPECT_EQ(merged, all);
  EXPECT_EQ(total, all.size());
}

TEST(Enumeration, CanonicalSubsetIsSmaller) {
  for (int k = 1; k <= 3; ++k) {
    const auto canon = enumerate_diagrams(k, true);
    EXPECT_LT(canon.size(), raw_diagram_count(k));
    std::set<std::vector<int>> keys;
    for (const auto& g : canon) keys.insert(rotation_key(g));
    EXPECT_EQ(keys.size(), canon.size());
  }
}

TEST(Harness, AllChecksListed) {
  const auto names = check_names();
  for (const char* n : {"cor-det", "det-asc", "v2-basepoint", "skein", "warp-zero", "smoothing", "split-over", "minors",
                        "block-skein"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_THROW((void)run_check("no-such-check", SweepConfig{}), std::invalid_argument);
  EXPECT_FALSE(check_summary("cor-det").empty());
}

TEST(Harness, ReportsAreIndependentOfWorkerCount) {
  for (const char* name : {"cor-det", "skein", "block-skein", "split-over"}) {
    SweepConfig one;
    one.samples = 200;
    one.workers = 1;
    SweepConfig three = one;
    three.workers = 3;
    const CheckReport a = run_check(name, one), b = run_check(name, three), c = run_check(name, three);
    EXPECT_TRUE(same(a, b)) << name;
    EXPECT_TRUE(same(b, c)) << name;
  }
}

TEST(Harness, SeedChangesRandomPopulationOnly) {
  SweepConfig a, b;
  a.samples = b.samples = 50;
  b.seed = a.seed + 1;
  EXPECT_EQ(run_check("skein", a).population, run_check("skein", b).population);
  EXPECT_EQ(detail::random_sample(a, 3), detail::random_sample(a, 3));
  EXPECT_NE(serialize_gauss_code(detail::random_sample(a, 3)) + serialize_gauss_code(detail::random_sample(a, 4)),
            serialize_gauss_code(detail::random_sample(b, 3)) + serialize_gauss_code(detail::random_sample(b, 4)));
}

TEST(Harness, CanonicalSweepCoversFewerDiagrams) {
  SweepConfig cfg;
  cfg.max_chords = 3;
  SweepConfig canon = cfg;
  canon.canonicalize = true;
  const CheckReport full = run_check("cor-det", cfg), reduced = run_check("cor-det", canon);
  EXPECT_LT(reduced.population, full.population);
  EXPECT_GT(reduced.population, 0U);
  EXPECT_EQ(reduced.failures, 0U);
}

TEST(Harness, ValidationRejectsBadConfig) {
  SweepConfig cfg;
  cfg.max_chords = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SweepConfig{};
  cfg.moduli = {-3};
  EXPECT_THROW((void)run_check("cor-det", cfg), std::invalid_argument);
  cfg = SweepConfig{};
  cfg.max_random_chords = 40;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Harness, JsonFields) {
  SweepConfig cfg;
  cfg.max_chords = 2;
  const nlohmann::json j = to_json(run_check("cor-det", cfg));
  for (const char* key : {"check", "population", "passes", "failures", "counterexamples", "seed", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["check"], "cor-det");
  EXPECT_EQ(j["population"].get<std::uint64_t>(), j["passes"].get<std::uint64_t>() + j["failures"].get<std::uint64_t>());
}

TEST(Harness, TextReport) {
  CheckReport r;
  r.check = "x";
  r.failures = 1;
  r.counterexamples = {"O1+U1+"};
  std::ostringstream out;
  write_report_text(out, r);
  EXPECT_NE(out.str().find("check: x"), std::string::npos);
  EXPECT_NE(out.str().find("    O1+U1+"), std::string::npos);
  EXPECT_FALSE(r.ok());
}

TEST(Recheck, PassingItemsDoNotReproduce) {
  const SweepConfig cfg;
  EXPECT_FALSE(recheck("cor-det", "O1+U2+O3+U1+O2+U3+", cfg));
  EXPECT_FALSE(recheck("v2-basepoint", "O1+U2+O3+U1+O2+U3+", cfg));
  EXPECT_FALSE(recheck("block-skein", "sample 3", cfg));
}

TEST(Recheck, OutsidePopulationThrows) {
  const SweepConfig cfg;
  EXPECT_THROW((void)recheck("cor-det", "O1+O2+U1+U2+", cfg), PreconditionError);
  EXPECT_THROW((void)recheck("cor-det", "O1+;U1+", cfg), PreconditionError);
  EXPECT_THROW((void)recheck("block-skein", "O1+U1+", cfg), std::invalid_argument);
  EXPECT_THROW((void)recheck("cor-det", "O1+U7", cfg), GaussCodeError);
}

TEST(Sweeps, AllExhaustiveChecksPassAtFourChords) {
  for (const auto& name : check_names()) {
    const CheckReport r = run_check(name, SweepConfig{});
    EXPECT_GT(r.population, 0U) << name;
    EXPECT_EQ(r.failures, 0U) << name << ' ' << (r.counterexamples.empty() ? "" : r.counterexamples.front());
  }
}

TEST(Sweeps, V2BasepointAtFiveChordsWithMod4) {
  SweepConfig cfg;
  cfg.max_chords = 5;
  cfg.moduli = {0, 2, 3, 4};
  const CheckReport r = run_check("v2-basepoint", cfg);
  EXPECT_GT(r.population, 0U);
  EXPECT_EQ(r.failures, 0U);
}

}  // namespace
