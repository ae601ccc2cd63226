#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknot/coloring.hpp"
#include "vknot/conway.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/int_matrix.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

/// One named diagram with the values it is expected to reproduce.
struct CatalogEntry {
  std::string name;
  std::string code;
  std::optional<long long> det;
  std::optional<long long> c2;        // z^2 coefficient of both polynomials at every basepoint
  std::optional<long long> v2;        // mod 2
  std::optional<long long> mock_det;  // |det| of the stored mock Seifert matrix
  std::vector<long long> numberable;
  std::vector<long long> not_numberable;
  std::string status;      // derived | published | reconstructed
  std::string provenance;  // where the expected values come from

  GaussDiagram diagram() const { return parse_gauss_code(code); }
};

class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline long long parse_catalog_int(const std::string& v, std::size_t line, const std::string& key) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (v.empty() || used != v.size()) throw CatalogError(line, "value of '" + key + "' is not an integer: '" + v + "'");
  return x;
}

inline std::vector<long long> parse_moduli(const std::string& v, std::size_t line, const std::string& key) {
  std::vector<long long> out;
  for (const auto& part : split(v, '/')) out.push_back(parse_catalog_int(part, line, key));
  return out;
}

}  // namespace detail

/// Catalog text: `name<TAB>code<TAB>key=value,...` per line, '#' comments, blank lines
/// ignored. Keys: det, c2, v2, mock_det, numberable, not_numberable (moduli joined by '/'),
/// status, provenance. Unknown keys and unparsable codes are rejected with the line number.
inline std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) throw CatalogError(line_no, "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    CatalogEntry e;
    e.name = fields[0];
    e.code = fields[1];
    if (e.name.empty()) throw CatalogError(line_no, "empty name");
    for (const auto& prev : out)
      if (prev.name == e.name) throw CatalogError(line_no, "duplicate name '" + e.name + "'");
    try {
      (void)parse_gauss_code(e.code);
    } catch (const GaussCodeError& err) {
      throw CatalogError(line_no, std::string("bad code: ") + err.what());
    }
    for (const auto& kv : detail::split(fields[2], ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw CatalogError(line_no, "expected key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "det") e.det = detail::parse_catalog_int(value, line_no, key);
      else if (key == "c2") e.c2 = detail::parse_catalog_int(value, line_no, key);
      else if (key == "v2") e.v2 = detail::parse_catalog_int(value, line_no, key);
      else if (key == "mock_det") e.mock_det = detail::parse_catalog_int(value, line_no, key);
      else if (key == "numberable") e.numberable = detail::parse_moduli(value, line_no, key);
      else if (key == "not_numberable") e.not_numberable = detail::parse_moduli(value, line_no, key);
      else if (key == "status") e.status = value;
      else if (key == "provenance") e.provenance = value;
      else throw CatalogError(line_no, "unknown key '" + key + "'");
    }
    if (e.provenance.empty() && (e.det || e.c2 || e.v2 || e.mock_det || !e.numberable.empty() || !e.not_numberable.empty()))
      throw CatalogError(line_no, "expected values need a provenance");
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog '" + path + "'");
  return parse_catalog(in);
}

/// Same content as data/catalog.tsv.
inline const char* builtin_catalog_text() {
  return "# name\tcode\texpected values\n"
         "unknot\t\tdet=1,c2=0,v2=0,numberable=0/2/3,status=derived,provenance=no crossings\n"
         "trefoil\tU1+O2+U3+O1+U2+O3+\tdet=3,c2=1,v2=1,numberable=0,status=derived,"
         "provenance=closure of sigma1^3; classical Conway polynomial 1+z^2 by skein recursion\n"
         "figure-eight\tU1+O2-U4-O1+U3+O4-U2-O3+\tdet=5,c2=-1,v2=1,numberable=0,status=derived,"
         "provenance=closure of (sigma1 sigma2^-1)^2; classical Conway polynomial 1-z^2 by skein recursion\n"
         "virtual-trefoil\tO1+O2+U1+U2+\tnot_numberable=0/2,status=published,"
         "provenance=two interleaved positive chords; not mod 2 Alexander numberable hence not checkerboard colorable\n"
         "4.90\tU1+O2+O3+O1+O4+U3+U2+U4+\tdet=1,v2=0,numberable=2,not_numberable=0,status=reconstructed,"
         "provenance=det 1 from the printed coloring matrix; checkerboard colorable but not almost classical; "
         "code recovered by search for a diagram with that coloring matrix\n"
         "6.87548\tO1+U2-O3-U1+U4+O5+O6+U3-O2-U6+U5+O4+\tdet=1,c2=-2,v2=0,mock_det=1,numberable=0/2/3,"
         "status=reconstructed,provenance=z^2 coefficients -2 and mock Seifert determinant 1 as published; "
         "almost classical; code recovered by search and matched to the published Seifert pair by Alexander polynomial\n";
}

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::istringstream in(builtin_catalog_text());
    return parse_catalog(in);
  }();
  return entries;
}

/// Published mock Seifert matrix of 6.87548.
inline IntMatrix mock_seifert_6_87548() { return IntMatrix{{-2, -1, 0, 0}, {-1, 2, 1, 0}, {0, -1, 0, 1}, {0, 0, 1, 2}}; }

inline std::optional<IntMatrix> builtin_mock_seifert(const std::string& name) {
  if (name == "6.87548") return mock_seifert_6_87548();
  return std::nullopt;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

/// Recomputes every expected value of an entry; returns one message per mismatch, each naming
/// the entry's provenance.
inline std::vector<std::string> verify_entry(const CatalogEntry& e) {
  std::vector<std::string> problems;
  auto fail = [&](const std::string& what) { problems.push_back(e.name + ": " + what + " [" + e.provenance + "]"); };
  const GaussDiagram g = e.diagram();
  for (long long p : e.numberable)
    if (!is_mod_p_numberable(g, p)) fail("expected mod " + std::to_string(p) + " numberable");
  for (long long p : e.not_numberable)
    if (is_mod_p_numberable(g, p)) fail("expected not mod " + std::to_string(p) + " numberable");
  if (e.det) {
    const long long d = determinant(g);
    if (d != *e.det) fail("determinant " + std::to_string(d) + ", expected " + std::to_string(*e.det));
  }
  if (e.c2) {
    for (const GaussDiagram& b : all_basepoints(g)) {
      const long long a = conway_pairing(2, Variant::ascending, b), d = conway_pairing(2, Variant::descending, b);
      if (a != *e.c2 || d != *e.c2) {
        fail("z^2 coefficients " + std::to_string(a) + "/" + std::to_string(d) + " at basepoint " + serialize_gauss_code(b) +
             ", expected " + std::to_string(*e.c2));
        break;
      }
    }
  }
  if (e.v2) {
    const long long v = v2(g, 2);
    if (v != *e.v2) fail("v2 " + std::to_string(v) + ", expected " + std::to_string(*e.v2));
  }
  if (e.mock_det) {
    const auto s = builtin_mock_seifert(e.name);
    if (!s) fail("no stored mock Seifert matrix");
    else if (mock_det(*s) != *e.mock_det) fail("mock Seifert |det| " + std::to_string(mock_det(*s)));
  }
  return problems;
}

}  // namespace vknot
