// vknot: invariants of virtual knots from signed Gauss codes.
//
// Exit status: 0 success, 1 parse/usage error, 2 precondition violation,
// 3 verification found counterexamples or a catalog mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vknot/vknot.hpp"

namespace {

using nlohmann::json;
using namespace vknot;

constexpr int kParseError = 1;
constexpr int kPrecondition = 2;
constexpr int kFailures = 3;

struct Resolved {
  std::string name;
  std::string code;
  GaussDiagram diagram;
};

std::vector<CatalogEntry> catalog_for(const std::string& path) {
  return path.empty() ? builtin_catalog() : load_catalog(path);
}

// A catalog name wins over a code; anything else must parse as a code.
Resolved resolve(const std::string& arg, const std::string& catalog_path) {
  const auto catalog = catalog_for(catalog_path);
  if (const CatalogEntry* e = find_entry(catalog, arg)) return {e->name, e->code, e->diagram()};
  GaussDiagram g = parse_gauss_code(arg);
  return {"", serialize_gauss_code(g), g};
}

std::string residue_class(long long det) {
  const long long r = ((det % 8) + 8) % 8;
  if (r == 1 || r == 7) return "+-1 mod 8";
  if (r == 3 || r == 5) return "+-3 mod 8";
  return "even (" + std::to_string(r) + " mod 8)";
}

json poly_json(const IntPolynomial& p) {
  json out = json::object();
  for (const auto& [deg, c] : p.coefficients()) out[std::to_string(deg)] = c;
  return out;
}

struct InvariantsOptions {
  std::string target;
  std::vector<long long> moduli{2};
  int degree = -1;
  bool json = false;
  std::string catalog;
};

int run_invariants(const InvariantsOptions& o) {
  const Resolved r = resolve(o.target, o.catalog);
  const GaussDiagram& g = r.diagram;
  json out;
  std::vector<std::string> refusals;
  out["code"] = r.code;
  if (!r.name.empty()) out["name"] = r.name;
  out["circles"] = g.circle_count();
  out["chords"] = g.chord_count();

  if (g.is_knot()) {
    out["index"] = index_vector(g);
    json numberable = json::object();
    for (long long p : o.moduli) numberable[std::to_string(p)] = is_mod_p_numberable(g, p);
    out["numberable"] = numberable;
    out["warping_degree"] = warping_degree(g);
  }
  if (g.circle_count() <= 2) {
    out["ascending"] = poly_json(ascending_polynomial(g, o.degree));
    out["descending"] = poly_json(descending_polynomial(g, o.degree));
  }
  std::optional<long long> v2_mod2;
  if (g.is_knot()) {
    out["c2"] = conway_pairing(2, Variant::ascending, g);
    v2_mod2 = v2(g, 2);
    out["v2"] = *v2_mod2;
    json certified = json::object();
    for (long long p : o.moduli) {
      if (!is_mod_p_numberable(g, p)) continue;
      certified[std::to_string(p)] = certify_v2(g, p).consistent;
    }
    out["v2_basepoint_independent"] = certified;
  }
  try {
    const long long det = determinant(g);
    out["determinant"] = det;
    out["det_class"] = residue_class(det);
    if (v2_mod2) {
      const bool expected_one = *v2_mod2 == 0;
      const std::string cls = residue_class(det);
      out["det_v2_consistent"] = expected_one ? cls == "+-1 mod 8" : cls == "+-3 mod 8";
    }
  } catch (const PreconditionError& e) {
    out["determinant"] = nullptr;
    refusals.push_back(std::string("determinant refused: ") + e.what());
  }
  if (!refusals.empty()) out["refused"] = refusals;

  if (o.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    if (!r.name.empty()) std::cout << "name: " << r.name << '\n';
    std::cout << "code: " << r.code << '\n'
              << "circles: " << g.circle_count() << ", chords: " << g.chord_count() << '\n';
    if (g.is_knot()) {
      std::cout << "index:";
      for (long long x : index_vector(g)) std::cout << ' ' << x;
      std::cout << '\n';
      for (long long p : o.moduli)
        std::cout << "mod " << p << " numberable: " << (is_mod_p_numberable(g, p) ? "yes" : "no") << '\n';
      std::cout << "checkerboard colorable: " << (is_mod_p_numberable(g, 2) ? "yes" : "no") << '\n'
                << "warping degree: " << warping_degree(g) << '\n';
    }
    if (g.circle_count() <= 2)
      std::cout << "ascending: " << ascending_polynomial(g, o.degree).to_string() << '\n'
                << "descending: " << descending_polynomial(g, o.degree).to_string() << '\n';
    if (g.is_knot()) {
      std::cout << "v2: " << out["v2"].get<long long>() << " (z^2 coefficient " << out["c2"].get<long long>() << ")\n";
      for (auto it = out["v2_basepoint_independent"].begin(); it != out["v2_basepoint_independent"].end(); ++it)
        std::cout << "v2 mod " << it.key() << " basepoint independent: " << (it.value().get<bool>() ? "yes" : "NO") << '\n';
    }
    if (out["determinant"].is_null()) {
      for (const auto& msg : refusals) std::cout << msg << '\n';
    } else {
      std::cout << "determinant: " << out["determinant"].get<long long>() << " (" << out["det_class"].get<std::string>() << ")\n";
      if (out.contains("det_v2_consistent"))
        std::cout << "consistent with v2 classification: " << (out["det_v2_consistent"].get<bool>() ? "yes" : "NO") << '\n';
    }
  }
  return refusals.empty() ? 0 : kPrecondition;
}

struct VerifyOptions {
  std::vector<std::string> checks;
  SweepConfig config;
  bool json = false;
  bool list = false;
};

int run_verify(VerifyOptions o) {
  if (o.list) {
    for (const auto& n : check_names()) std::cout << n << "\t" << check_summary(n) << '\n';
    return 0;
  }
  if (o.checks.empty() || (o.checks.size() == 1 && o.checks[0] == "all")) o.checks = check_names();
  const auto reports = run_checks(o.checks, o.config);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    arr.push_back(to_json(r));
    if (!o.json) write_report_text(std::cout, r);
  }
  if (o.json) std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return ok ? 0 : kFailures;
}

struct EnumerateOptions {
  int chords = 0;
  bool canonical = false;
  std::vector<long long> numberable;
  int warping = -1;
  bool count = false;
};

int run_enumerate(const EnumerateOptions& o) {
  std::uint64_t n = 0;
  for_each_diagram(o.chords, [&](const GaussDiagram& g) {
    if (o.canonical && !detail::rotation_canonical(g)) return;
    for (long long p : o.numberable)
      if (!is_mod_p_numberable(g, p)) return;
    if (o.warping >= 0 && warping_degree(g) != o.warping) return;
    ++n;
    if (!o.count) std::cout << serialize_gauss_code(g) << '\n';
  });
  if (o.count) std::cout << n << '\n';
  return 0;
}

int run_conway(int degree, bool descending, bool json_out) {
  const ConwaySet set = conway_set(degree, conway_circles(degree), descending ? Variant::descending : Variant::ascending);
  if (json_out) {
    json members = json::array();
    for (const auto& a : set.members) members.push_back(serialize_arrow_code(a));
    std::cout << json{{"degree", degree}, {"variant", to_string(set.variant)}, {"circles", set.circles}, {"members", members}}.dump(2)
              << '\n';
  } else {
    for (const auto& a : set.members) std::cout << serialize_arrow_code(a) << '\n';
  }
  return 0;
}

int run_det_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const IntMatrix m = read_int_matrix(in);
  const long long d = int_det(m);
  std::cout << "det: " << d << "\n|det|: " << (d < 0 ? -d : d) << '\n';
  return 0;
}

int run_catalog(const std::string& path, bool check) {
  const auto catalog = catalog_for(path);
  int bad = 0;
  for (const auto& e : catalog) {
    std::cout << e.name << '\t' << (e.code.empty() ? "(no chords)" : e.code) << '\t' << (e.status.empty() ? "-" : e.status) << '\n';
    if (!check) continue;
    for (const auto& msg : verify_entry(e)) {
      std::cout << "  MISMATCH " << msg << '\n';
      ++bad;
    }
  }
  return bad ? kFailures : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of virtual knots and links from signed Gauss codes"};
  app.require_subcommand(1);

  InvariantsOptions inv;
  auto* c_inv = app.add_subcommand("invariants", "index, colorability, polynomials, v2 and determinant");
  c_inv->add_option("target", inv.target, "signed Gauss code or catalog name")->required();
  c_inv->add_option("-p,--modulus", inv.moduli, "moduli for numberability and v2 certification")->check(CLI::NonNegativeNumber);
  c_inv->add_option("--degree", inv.degree, "highest polynomial degree");
  c_inv->add_flag("--json", inv.json, "JSON output");
  c_inv->add_option("--catalog", inv.catalog, "catalog file used to resolve names");

  VerifyOptions ver;
  auto* c_ver = app.add_subcommand("verify", "sweep identities over generated diagrams");
  c_ver->add_option("checks", ver.checks, "check names (default: all)");
  c_ver->add_option("--max-chords", ver.config.max_chords, "exhaustive sweep bound")->check(CLI::Range(0, 8));
  c_ver->add_option("-p,--modulus", ver.config.moduli, "moduli for v2-basepoint and smoothing");
  c_ver->add_option("--seed", ver.config.seed, "sampling seed");
  c_ver->add_option("--samples", ver.config.samples, "random samples per population kind");
  c_ver->add_option("--max-random-chords", ver.config.max_random_chords, "chord bound for random diagrams");
  c_ver->add_option("--workers", ver.config.workers, "worker threads (0: all cores)");
  c_ver->add_flag("--canonical", ver.config.canonicalize, "one diagram per rotation class");
  c_ver->add_flag("--json", ver.json, "JSON output");
  c_ver->add_flag("--list", ver.list, "list available checks");

  std::string re_check, re_item;
  SweepConfig re_config;
  auto* c_re = app.add_subcommand("recheck", "re-run one check on a recorded counterexample");
  c_re->add_option("check", re_check)->required();
  c_re->add_option("item", re_item, "Gauss code, or 'sample N' for block-skein")->required();
  c_re->add_option("-p,--modulus", re_config.moduli);
  c_re->add_option("--seed", re_config.seed);

  EnumerateOptions en;
  auto* c_en = app.add_subcommand("enumerate", "list one-circle diagrams with k chords");
  c_en->add_option("k", en.chords)->required()->check(CLI::Range(0, 12));
  c_en->add_flag("--canonical", en.canonical, "one diagram per rotation class");
  c_en->add_option("--numberable", en.numberable, "keep mod p numberable diagrams");
  c_en->add_option("--warping", en.warping, "keep diagrams with this warping degree");
  c_en->add_flag("--count", en.count, "print only the count");

  int cw_degree = 2;
  bool cw_desc = false, cw_json = false;
  auto* c_cw = app.add_subcommand("conway", "members of a Conway combination");
  c_cw->add_option("--degree", cw_degree, "number of arrows")->check(CLI::Range(0, 16));
  c_cw->add_flag("--descending", cw_desc);
  c_cw->add_flag("--json", cw_json);

  std::string dm_path;
  auto* c_dm = app.add_subcommand("det-matrix", "exact determinant of an integer matrix file");
  c_dm->add_option("file", dm_path)->required();

  std::string cm_target, cm_catalog;
  auto* c_cm = app.add_subcommand("coloring-matrix", "print the coloring matrix of a diagram");
  c_cm->add_option("target", cm_target, "signed Gauss code or catalog name")->required();
  c_cm->add_option("--catalog", cm_catalog);

  std::string cat_path;
  bool cat_check = false;
  auto* c_cat = app.add_subcommand("catalog", "list catalog entries");
  c_cat->add_option("--file", cat_path, "catalog file (default: built-in)");
  c_cat->add_flag("--check", cat_check, "recompute expected values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  try {
    if (*c_inv) return run_invariants(inv);
    if (*c_ver) return run_verify(ver);
    if (*c_re) {
      const bool reproduced = recheck(re_check, re_item, re_config);
      std::cout << re_check << ' ' << re_item << ": " << (reproduced ? "fails" : "passes") << '\n';
      return reproduced ? kFailures : 0;
    }
    if (*c_en) return run_enumerate(en);
    if (*c_cw) return run_conway(cw_degree, cw_desc, cw_json);
    if (*c_dm) return run_det_matrix(dm_path);
    if (*c_cm) {
      write_coloring_matrix(std::cout, coloring_matrix(resolve(cm_target, cm_catalog).diagram));
      return 0;
    }
    if (*c_cat) return run_catalog(cat_path, cat_check);
  } catch (const GaussCodeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
  return 0;
}
