#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "vknot/coloring.hpp"
#include "vknot/conway.hpp"
#include "vknot/enumerate.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/int_matrix.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

struct SweepConfig {
  int max_chords = 4;                  // exhaustive sweeps cover 0..max_chords chords
  std::vector<long long> moduli{2, 3};  // used by v2-basepoint and smoothing
  std::uint64_t seed = 20240601;
  int samples = 1000;                  // random draws per population kind
  int max_random_chords = 8;
  int max_matrix_size = 6;
  int workers = 0;                     // 0: hardware concurrency
  bool canonicalize = false;           // one diagram per rotation class in exhaustive sweeps
  std::size_t max_counterexamples = 100;

  void validate() const {
    if (max_chords < 0) throw std::invalid_argument("max chords must be non-negative");
    for (long long p : moduli)
      if (p < 0) throw std::invalid_argument("moduli must be non-negative");
    if (samples < 0 || max_random_chords < 1 || max_random_chords > 16 || max_matrix_size < 0)
      throw std::invalid_argument("bad sampling parameters");
  }
};

struct CheckReport {
  std::string check;
  std::uint64_t population = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // sorted; capped at max_counterexamples
  std::uint64_t seed = 0;
  long long elapsed_ms = 0;

  bool ok() const noexcept { return failures == 0; }
};

inline nlohmann::json to_json(const CheckReport& r) {
  return {{"check", r.check},       {"population", r.population}, {"passes", r.passes},
          {"failures", r.failures}, {"counterexamples", r.counterexamples}, {"seed", r.seed},
          {"elapsed_ms", r.elapsed_ms}};
}

inline void write_report_text(std::ostream& out, const CheckReport& r) {
  out << "check: " << r.check << '\n'
      << "  population: " << r.population << '\n'
      << "  passes: " << r.passes << '\n'
      << "  failures: " << r.failures << '\n'
      << "  seed: " << r.seed << '\n'
      << "  elapsed_ms: " << r.elapsed_ms << '\n';
  if (r.counterexamples.empty()) {
    out << "  counterexamples: none\n";
  } else {
    out << "  counterexamples:\n";
    for (const auto& c : r.counterexamples) out << "    " << c << '\n';
  }
}

namespace detail {

// nullopt: the item is outside the check's population.
using DiagramPredicate = std::function<std::optional<bool>(const GaussDiagram&, const SweepConfig&)>;

enum class Source { one_circle, two_circle, random_mixed, matrices };

struct CheckSpec {
  const char* name;
  const char* summary;
  Source source;
  DiagramPredicate predicate;
};

inline long long mod8(long long v) { return ((v % 8) + 8) % 8; }

inline long long term(const std::vector<long long>& coeffs, std::size_t k) { return k < coeffs.size() ? coeffs[k] : 0; }

inline bool rotation_canonical(const GaussDiagram& g) {
  if (g.circle(0).empty()) return true;
  std::vector<int> order(g.chord_count(), -1), word;
  int next = 0;
  for (const auto& e : g.circle(0)) {
    int& o = order[static_cast<std::size_t>(e.chord)];
    if (o < 0) o = next++;
    word.push_back(o * 4 + (e.end == End::head ? 2 : 0) + (g.sign(e.chord) > 0 ? 1 : 0));
  }
  return word == rotation_key(g);
}

// Every two-circle based diagram with k chords, obtained by cutting each one-circle word.
template <class F>
void for_each_two_circle_diagram(int k, F&& f, int shard, int shards) {
  for_each_diagram(
      k,
      [&](const GaussDiagram& g) {
        const Circle& w = g.circle(0);
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          std::vector<Circle> cs{Circle(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)),
                                 Circle(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end())};
          f(GaussDiagram(ChordLayout(std::move(cs)), g.signs()));
        }
      },
      shard, shards);
}

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Sample i < samples is a knot diagram, the rest have two circles.
inline GaussDiagram random_sample(const SweepConfig& cfg, std::uint64_t index) {
  auto rng = sample_rng(cfg.seed, index);
  const int chords = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.max_random_chords)));
  const std::size_t circles = index < static_cast<std::uint64_t>(cfg.samples) ? 1 : 2;
  return random_diagram(rng, chords, circles);
}

struct MatrixSample {
  IntMatrix s0;
  std::vector<long long> x, y;
  long long a = 0;
};

inline MatrixSample random_matrix_sample(const SweepConfig& cfg, std::uint64_t index) {
  auto rng = sample_rng(cfg.seed, index);
  auto entry = [&] { return static_cast<long long>(draw(rng, 19)) - 9; };
  MatrixSample m;
  const auto n = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(cfg.max_matrix_size) + 1));
  m.s0 = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.s0(i, j) = entry();
  for (std::size_t i = 0; i < n; ++i) m.x.push_back(entry());
  for (std::size_t i = 0; i < n; ++i) m.y.push_back(entry());
  m.a = entry();
  return m;
}

// --- predicates ------------------------------------------------------------------------------

inline std::optional<bool> det_residue(const GaussDiagram& g, const SweepConfig&) {
  if (!g.is_knot() || !is_mod_p_numberable(g, 2)) return std::nullopt;
  const long long r = mod8(determinant(g));
  return v2(g, 2) == 0 ? (r == 1 || r == 7) : (r == 3 || r == 5);
}

inline std::optional<bool> det_vs_ascending(const GaussDiagram& g, const SweepConfig&) {
  if (!g.is_knot() || !is_mod_p_numberable(g, 2)) return std::nullopt;
  const long long r = mod8(determinant(g));
  const long long a = mod8(ascending_polynomial(g).evaluate(2));
  return r == a || r == mod8(-a);
}

inline std::optional<bool> v2_basepoint(const GaussDiagram& g, const SweepConfig& cfg) {
  if (!g.is_knot()) return std::nullopt;
  bool tested = false;
  for (long long p : cfg.moduli) {
    if (!is_mod_p_numberable(g, p)) continue;
    tested = true;
    if (!certify_v2(g, p).consistent) return false;
  }
  return tested ? std::optional<bool>(true) : std::nullopt;
}

// Skein identities: on a knot diagram every chord, on a two-circle diagram every
// chord joining the circles.
inline std::optional<bool> skein_identities(const GaussDiagram& g, const SweepConfig&) {
  if (g.circle_count() > 2) return std::nullopt;
  const int n = static_cast<int>(g.chord_count());
  for (int c = 0; c < n; ++c) {
    if (!g.is_knot() && g.layout().self_chord(c)) continue;
    const int id = g.id(c);
    const GaussDiagram flipped = crossing_change(g, id);
    const GaussDiagram& plus = g.sign(c) > 0 ? g : flipped;
    const GaussDiagram& minus = g.sign(c) > 0 ? flipped : g;
    const ConwayProfile pp = conway_profile(plus), pm = conway_profile(minus), p0 = conway_profile(smooth(g, id));
    for (int k = g.is_knot() ? 2 : 1; k <= n; k += 2) {
      const auto ku = static_cast<std::size_t>(k);
      if (pp.ascending[ku] - pm.ascending[ku] != p0.ascending[ku - 1]) return false;
      if (pp.descending[ku] - pm.descending[ku] != p0.descending[ku - 1]) return false;
    }
  }
  return true;
}

inline std::optional<bool> warp_zero(const GaussDiagram& g, const SweepConfig&) {
  if (!g.is_knot() || warping_degree(g) != 0) return std::nullopt;
  const ConwayProfile p = conway_profile(g);
  for (std::size_t k = 2; k < p.ascending.size(); k += 2)
    if (p.ascending[k] != 0 || p.descending[k] != 0) return false;
  if (is_mod_p_numberable(g, 2) && determinant(g) != 1) return false;
  return true;
}

// Every interleaving chord has its tail on the arc of `a` that carries the basepoint.
inline bool tails_on_base_side(const GaussDiagram& g, int a) {
  const int lo = std::min(g.tail(a).pos, g.head(a).pos);
  const int hi = std::max(g.tail(a).pos, g.head(a).pos);
  for (int d = 0; d < static_cast<int>(g.chord_count()); ++d) {
    if (!g.layout().interleaved(a, d)) continue;
    const int t = g.tail(d).pos;
    if (lo < t && t < hi) return false;
  }
  return true;
}

inline std::optional<bool> smoothing(const GaussDiagram& g, const SweepConfig& cfg) {
  if (!g.is_knot() || g.chord_count() == 0) return std::nullopt;
  for (int a = 0; a < static_cast<int>(g.chord_count()); ++a) {
    const ConwayProfile h = conway_profile(smooth(g, g.id(a)));
    // <C_1, H> - <C'_1, H> = +-I(a) on every knot diagram
    if (std::llabs(term(h.ascending, 1) - term(h.descending, 1)) != std::llabs(index(g, g.id(a)))) return false;
    if (!tails_on_base_side(g, a)) continue;
    for (long long p : cfg.moduli) {
      if (!is_mod_p_numberable(g, p)) continue;
      if (term(h.ascending, 1) != 0 || !congruent(term(h.descending, 1), 0, p)) return false;
      for (std::size_t k = 3; k < h.ascending.size(); k += 2)
        if (h.ascending[k] != 0) return false;
    }
  }
  return true;
}

// Two-circle colorable diagrams whose first circle passes over the second at every shared
// crossing and crosses itself at least once have determinant 0.
inline std::optional<bool> split_over(const GaussDiagram& g, const SweepConfig&) {
  if (g.circle_count() != 2) return std::nullopt;
  bool self = false;
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c) {
    const Slot t = g.tail(c), h = g.head(c);
    if (t.circle != h.circle) {
      if (t.circle != 0) return std::nullopt;
    } else if (t.circle == 0) {
      self = true;
    }
  }
  if (!self) return std::nullopt;
  for (std::size_t k = 0; k < 2; ++k) {
    bool head = false;
    for (const auto& e : g.circle(k)) head = head || e.end == End::head;
    if (!head) return std::nullopt;
  }
  if (!alexander_numbering(g, 2)) return std::nullopt;
  return determinant(g) == 0;
}

inline std::optional<bool> minors(const GaussDiagram& g, const SweepConfig&) {
  if (!g.is_knot() || !is_mod_p_numberable(g, 2)) return std::nullopt;
  return minor_independence_check(g);
}

inline const std::vector<CheckSpec>& check_specs() {
  static const std::vector<CheckSpec> specs{
      {"cor-det", "det = +-(1 + 4 v2) mod 8 on mod 2 numberable knot diagrams", Source::one_circle, det_residue},
      {"det-asc", "det = +-asc(2) mod 8 on mod 2 numberable knot diagrams", Source::one_circle, det_vs_ascending},
      {"v2-basepoint", "<C2> mod p is basepoint independent and equals <C'2> mod p", Source::one_circle, v2_basepoint},
      {"skein", "skein identities for ascending/descending pairings, random diagrams", Source::random_mixed,
       skein_identities},
      {"warp-zero", "warping degree 0: all pairings of degree >= 2 vanish, det 1 when colorable", Source::one_circle,
       warp_zero},
      {"smoothing", "pairings of a smoothed knot diagram", Source::one_circle, smoothing},
      {"split-over", "two-circle diagram with one circle above the other has det 0", Source::two_circle, split_over},
      {"minors", "all (n-1)-minors of the coloring matrix agree in absolute value", Source::one_circle, minors},
      {"block-skein", "det S+ - det S- = 2 det S0 for bordered matrices", Source::matrices, nullptr},
  };
  return specs;
}

inline const CheckSpec& find_check(const std::string& name) {
  for (const auto& s : check_specs())
    if (name == s.name) return s;
  throw std::invalid_argument("unknown check '" + name + "'");
}

inline bool block_sample_holds(const SweepConfig& cfg, std::uint64_t index) {
  const MatrixSample m = random_matrix_sample(cfg, index);
  return skein_block_check(m.s0, m.x, m.y, m.a);
}

}  // namespace detail

/// Names of all checks in run order.
inline std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& s : detail::check_specs()) out.emplace_back(s.name);
  return out;
}

inline std::string check_summary(const std::string& name) { return detail::find_check(name).summary; }

/// Runs one named check over its population, sharded across workers. Reports are independent
/// of the worker count apart from elapsed_ms.
inline CheckReport run_check(const std::string& name, const SweepConfig& cfg) {
  cfg.validate();
  const detail::CheckSpec& spec = detail::find_check(name);
  const auto start = std::chrono::steady_clock::now();
  int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(workers, 1);

  std::mutex mu;
  CheckReport total;
  total.check = name;
  total.seed = cfg.seed;

  auto worker = [&](int shard) {
    CheckReport local;
    auto record = [&](std::optional<bool> outcome, auto&& label) {
      if (!outcome) return;
      ++local.population;
      if (*outcome) {
        ++local.passes;
      } else {
        ++local.failures;
        local.counterexamples.push_back(label());
      }
    };
    auto visit = [&](const GaussDiagram& g) {
      if (cfg.canonicalize && g.is_knot() && !detail::rotation_canonical(g)) return;
      record(spec.predicate(g, cfg), [&] { return serialize_gauss_code(g); });
    };
    switch (spec.source) {
      case detail::Source::one_circle:
        for (int k = 0; k <= cfg.max_chords; ++k) for_each_diagram(k, visit, shard, workers);
        break;
      case detail::Source::two_circle:
        for (int k = 0; k <= cfg.max_chords; ++k) detail::for_each_two_circle_diagram(k, visit, shard, workers);
        break;
      case detail::Source::random_mixed:
        for (auto i = static_cast<std::uint64_t>(shard); i < 2 * static_cast<std::uint64_t>(cfg.samples);
             i += static_cast<std::uint64_t>(workers)) {
          const GaussDiagram g = detail::random_sample(cfg, i);
          record(spec.predicate(g, cfg), [&] { return serialize_gauss_code(g); });
        }
        break;
      case detail::Source::matrices:
        for (auto i = static_cast<std::uint64_t>(shard); i < static_cast<std::uint64_t>(cfg.samples);
             i += static_cast<std::uint64_t>(workers))
          record(detail::block_sample_holds(cfg, i), [&] { return "sample " + std::to_string(i); });
        break;
    }
    std::lock_guard lock(mu);
    total.population += local.population;
    total.passes += local.passes;
    total.failures += local.failures;
    total.counterexamples.insert(total.counterexamples.end(), local.counterexamples.begin(), local.counterexamples.end());
  };

  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < workers; ++s) pool.emplace_back(worker, s);
    for (auto& t : pool) t.join();
  }
  std::sort(total.counterexamples.begin(), total.counterexamples.end());
  if (total.counterexamples.size() > cfg.max_counterexamples) total.counterexamples.resize(cfg.max_counterexamples);
  total.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return total;
}

inline std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const SweepConfig& cfg) {
  std::vector<CheckReport> out;
  for (const auto& n : names) out.push_back(run_check(n, cfg));
  return out;
}

/// Re-runs a single check on one recorded counterexample (a Gauss code, or "sample N" for
/// block-skein). Returns true when the failure reproduces; throws if the item is outside the
/// check's population.
inline bool recheck(const std::string& name, const std::string& item, const SweepConfig& cfg) {
  const detail::CheckSpec& spec = detail::find_check(name);
  if (spec.source == detail::Source::matrices) {
    if (item.rfind("sample ", 0) != 0) throw std::invalid_argument("block-skein items look like 'sample N'");
    return !detail::block_sample_holds(cfg, std::stoull(item.substr(7)));
  }
  const auto outcome = spec.predicate(parse_gauss_code(item), cfg);
  if (!outcome) throw PreconditionError("'" + item + "' is outside the population of " + name);
  return !*outcome;
}

inline CheckReport check_corollary_det(const SweepConfig& cfg) { return run_check("cor-det", cfg); }
inline CheckReport check_det_vs_ascending(const SweepConfig& cfg) { return run_check("det-asc", cfg); }
inline CheckReport check_main_theorem(const SweepConfig& cfg) { return run_check("v2-basepoint", cfg); }
inline CheckReport check_skein_lemmas(const SweepConfig& cfg) { return run_check("skein", cfg); }

inline std::vector<CheckReport> check_warp_and_smoothing(const SweepConfig& cfg) {
  return run_checks({"warp-zero", "smoothing", "split-over"}, cfg);
}

}  // namespace vknot
