#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "test_support.hpp"

namespace {

using namespace vknot;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(VKNOT_CLI_PATH) + ' ' + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<CatalogEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

void expect_catalog_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    (void)parse(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

// --- catalog -----------------------------------------------------------------------------------

TEST(Catalog, ParsesFieldsAndSkipsComments) {
  const auto c = parse("# header\n\nk\tO1+U1+\tdet=1,v2=0,numberable=0/2,status=derived,provenance=kink\n");
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].name, "k");
  EXPECT_EQ(c[0].det, 1);
  EXPECT_EQ(c[0].v2, 0);
  EXPECT_FALSE(c[0].c2);
  EXPECT_EQ(c[0].numberable, (std::vector<long long>{0, 2}));
  EXPECT_EQ(c[0].provenance, "kink");
}

TEST(Catalog, RejectsMalformedLines) {
  expect_catalog_error("a\tO1+U1+\tdet=1,provenance=x\nb\tO1+U1+\tcolour=red,provenance=x\n", 2, "unknown key 'colour'");
  expect_catalog_error("a\tO1+U2+\tprovenance=x\n", 1, "bad code");
  expect_catalog_error("a\tO1+U1+\tdet=1\n", 1, "provenance");
  expect_catalog_error("a\tO1+U1+\n", 1, "3 tab-separated fields");
  expect_catalog_error("a\tO1+U1+\tdet=x,provenance=p\n", 1, "not an integer");
  expect_catalog_error("a\t\tstatus=derived\na\t\tstatus=derived\n", 2, "duplicate");
}

TEST(Catalog, DataFileMatchesBuiltin) {
  const auto file = load_catalog(std::string(VKNOT_DATA_DIR) + "/catalog.tsv");
  const auto& builtin = builtin_catalog();
  ASSERT_EQ(file.size(), builtin.size());
  for (std::size_t i = 0; i < file.size(); ++i) {
    EXPECT_EQ(file[i].name, builtin[i].name);
    EXPECT_EQ(file[i].code, builtin[i].code);
    EXPECT_EQ(file[i].det, builtin[i].det);
    EXPECT_EQ(file[i].c2, builtin[i].c2);
    EXPECT_EQ(file[i].provenance, builtin[i].provenance);
  }
}

TEST(Catalog, EveryEntryReproducesItsValues) {
  for (const auto& e : builtin_catalog()) {
    EXPECT_FALSE(e.provenance.empty()) << e.name;
    const auto problems = verify_entry(e);
    EXPECT_TRUE(problems.empty()) << e.name << ": " << (problems.empty() ? "" : problems.front());
  }
}

TEST(Catalog, MismatchNamesProvenance) {
  CatalogEntry e = *find_entry(builtin_catalog(), "trefoil");
  e.det = 7;
  const auto problems = verify_entry(e);
  ASSERT_EQ(problems.size(), 1U);
  EXPECT_NE(problems[0].find(e.provenance), std::string::npos);
  EXPECT_NE(problems[0].find("determinant 3"), std::string::npos);
}

TEST(Catalog, ClassicalEntriesAgreeWithOracle) {
  for (const char* name : {"trefoil", "figure-eight"}) {
    const CatalogEntry& e = *find_entry(builtin_catalog(), name);
    const oracle::Poly p = oracle::skein_conway(e.code);
    EXPECT_EQ(*e.det, support::classical_det(p)) << name;
    EXPECT_EQ(*e.c2, p.size() > 2 ? p[2] : 0) << name;
  }
}

// --- command line ------------------------------------------------------------------------------

TEST(Cli, InvariantsOfTrefoil) {
  const CliRun r = cli("invariants trefoil");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("determinant: 3 (+-3 mod 8)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ascending: 1 + z^2"), std::string::npos) << r.out;
}

TEST(Cli, InvariantsJson) {
  const CliRun r = cli("invariants 6.87548 --json -p 0 -p 2");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["c2"], -2);
  EXPECT_EQ(j["determinant"], 1);
  EXPECT_EQ(j["det_v2_consistent"], true);
  EXPECT_EQ(j["numberable"]["0"], true);
  EXPECT_EQ(j["v2_basepoint_independent"]["0"], true);
}

TEST(Cli, RefusedDeterminantExitsWithPreconditionStatus) {
  const CliRun r = cli("invariants O1+O2+U1+U2+ --json");
  EXPECT_EQ(r.status, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["determinant"].is_null());
  EXPECT_FALSE(j["refused"].empty());
}

TEST(Cli, ParseErrorsExitWithOne) {
  EXPECT_EQ(cli("invariants O1+U1-").status, 1);
  EXPECT_EQ(cli("invariants O1+U2+").status, 1);
  EXPECT_EQ(cli("no-such-command").status, 1);
  EXPECT_EQ(cli("").status, 1);
}

TEST(Cli, VerifyJsonIsStable) {
  const CliRun a = cli("verify cor-det --max-chords 4 --json");
  const CliRun b = cli("verify cor-det --max-chords 4 --json --workers 2");
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  for (const char* key : {"check", "population", "passes", "failures", "counterexamples", "seed", "elapsed_ms"})
    EXPECT_TRUE(ja.contains(key)) << key;
  EXPECT_EQ(ja["failures"], 0);
  EXPECT_GT(ja["population"].get<long long>(), 0);
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  EXPECT_EQ(ja, jb);
}

TEST(Cli, VerifyListAndUnknownCheck) {
  const CliRun r = cli("verify --list");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("block-skein"), std::string::npos);
  EXPECT_EQ(cli("verify bogus").status, 1);
}

TEST(Cli, Recheck) {
  const CliRun r = cli("recheck cor-det O1+U2+O3+U1+O2+U3+");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("passes"), std::string::npos);
  EXPECT_EQ(cli("recheck cor-det O1+O2+U1+U2+").status, 2);
  EXPECT_EQ(cli("recheck block-skein 'sample 7'").status, 0);
}

TEST(Cli, EnumerateCounts) {
  const CliRun r = cli("enumerate 2 --count");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, std::to_string(raw_diagram_count(2)) + "\n");
  std::uint64_t warp0 = 0;
  for_each_diagram(3, [&](const GaussDiagram& g) { warp0 += warping_degree(g) == 0; });
  EXPECT_EQ(cli("enumerate 3 --warping 0 --count").out, std::to_string(warp0) + "\n");
}

TEST(Cli, ConwayMembers) {
  EXPECT_EQ(cli("conway --degree 2").out, "U1O2O1U2\n");
  EXPECT_EQ(cli("conway --degree 2 --descending").out, "O1U2U1O2\n");
  const auto j = nlohmann::json::parse(cli("conway --degree 3 --json").out);
  EXPECT_EQ(j["circles"], 2);
  EXPECT_EQ(j["members"].size(), conway_set(3, 2, Variant::ascending).members.size());
}

TEST(Cli, DetMatrixOnDataFiles) {
  const CliRun r = cli(std::string("det-matrix ") + VKNOT_DATA_DIR + "/mock_seifert_6.87548.txt");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("|det|: 1"), std::string::npos) << r.out;
  EXPECT_EQ(cli("det-matrix /nonexistent/file").status, 1);
}

TEST(Cli, ColoringMatrix) {
  const CliRun r = cli("coloring-matrix 4.90");
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  EXPECT_TRUE(support::equal_up_to_permutation(read_int_matrix(in), support::printed_4_90_matrix()));
  EXPECT_EQ(cli("coloring-matrix O1+O2+U1+U2+").status, 2);
}

TEST(Cli, CatalogCheck) {
  const CliRun r = cli("catalog --check");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(cli(std::string("catalog --check --file ") + VKNOT_DATA_DIR + "/catalog.tsv").status, 0);
}

}  // namespace
