#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vknot/errors.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/int_matrix.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

/// A long arc runs from one head (under-passage) to the next head on the same circle. A circle
/// without heads is a single closed arc (start = -1).
struct LongArc {
  int circle = 0;
  int start = -1;  // position of the head the arc leaves from
  int end = -1;    // position of the head the arc runs into

  bool closed() const noexcept { return start < 0; }
  friend bool operator==(const LongArc&, const LongArc&) = default;
};

/// Long arcs circle by circle, each circle's arcs ordered by their starting head.
inline std::vector<LongArc> long_arcs(const GaussDiagram& g) {
  std::vector<LongArc> out;
  for (std::size_t k = 0; k < g.circle_count(); ++k) {
    std::vector<int> heads;
    const Circle& circle = g.circle(k);
    for (std::size_t p = 0; p < circle.size(); ++p)
      if (circle[p].end == End::head) heads.push_back(static_cast<int>(p));
    if (heads.empty()) {
      out.push_back(LongArc{static_cast<int>(k), -1, -1});
      continue;
    }
    for (std::size_t i = 0; i < heads.size(); ++i)
      out.push_back(LongArc{static_cast<int>(k), heads[i], heads[(i + 1) % heads.size()]});
  }
  return out;
}

/// Crossing-by-long-arc matrix with row provenance (chord ids) and column provenance (arcs).
struct ColoringMatrix {
  IntMatrix entries;
  std::vector<int> row_chords;
  std::vector<LongArc> arcs;
};

namespace detail {

// Column of the long arc containing position `pos` of circle `k` (a head position belongs to
// the arc it starts).
inline std::size_t arc_containing(const std::vector<LongArc>& arcs, int k, int pos) {
  std::optional<std::size_t> last_on_circle;
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    if (arcs[j].circle != k) continue;
    if (arcs[j].closed()) return j;
    last_on_circle = j;
    if (arcs[j].start <= pos) best = j;
  }
  // before the first head: still on the arc that wraps through the basepoint
  return best ? *best : *last_on_circle;
}

inline void require_colorable(const GaussDiagram& g) {
  if (g.is_knot()) {
    if (!is_mod_p_numberable(g, 2)) throw NotCheckerboardColorable();
    return;
  }
  for (std::size_t k = 0; k < g.circle_count(); ++k) {
    bool has_head = false;
    for (const auto& e : g.circle(k)) has_head = has_head || e.end == End::head;
    if (!has_head) throw UnderPassageFreeComponent(k);
  }
  if (!alexander_numbering(g, 2)) throw NotCheckerboardColorable();
}

}  // namespace detail

/// Coloring matrix: +2 where an arc is the over-arc of a crossing and -1 for each under-arc
/// incidence, accumulated (so over-and-under gives 1 and a kink's row is zero).
inline ColoringMatrix coloring_matrix(const GaussDiagram& g) {
  detail::require_colorable(g);
  ColoringMatrix cm;
  cm.arcs = long_arcs(g);
  cm.entries = IntMatrix(g.chord_count(), cm.arcs.size());
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c) {
    const auto row = static_cast<std::size_t>(c);
    cm.row_chords.push_back(g.id(c));
    const Slot t = g.tail(c), h = g.head(c);
    cm.entries(row, detail::arc_containing(cm.arcs, t.circle, t.pos)) += 2;
    // outgoing under-arc starts at the head; incoming under-arc ends there
    for (std::size_t j = 0; j < cm.arcs.size(); ++j) {
      if (cm.arcs[j].circle != h.circle || cm.arcs[j].closed()) continue;
      if (cm.arcs[j].start == h.pos) cm.entries(row, j) -= 1;
      if (cm.arcs[j].end == h.pos) cm.entries(row, j) -= 1;
    }
  }
  return cm;
}

/// Determinant of a checkerboard colorable diagram: |det| of the minor deleting the last row
/// and last column of the coloring matrix; 1 when there is at most one crossing.
inline long long determinant(const GaussDiagram& g) {
  const ColoringMatrix cm = coloring_matrix(g);
  const IntMatrix& b = cm.entries;
  if (b.rows() <= 1) return 1;
  if (!b.square())
    throw PreconditionError("coloring matrix is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                            "; determinant needs as many long arcs as crossings");
  return std::llabs(int_det(b.without(b.rows() - 1, b.cols() - 1)));
}

/// |det| of every (n-1)x(n-1) minor of a square matrix, row-major by deleted (row, column).
inline std::vector<long long> all_minor_dets(const IntMatrix& b) {
  if (!b.square()) throw DimensionMismatch("minors of a non-square matrix");
  std::vector<long long> out;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(std::llabs(int_det(b.without(i, j))));
  return out;
}

/// True iff all (n-1)x(n-1) minors have the same absolute determinant.
inline bool minor_independence_check(const IntMatrix& b) {
  if (b.rows() <= 1) return true;
  const auto dets = all_minor_dets(b);
  for (long long d : dets)
    if (d != dets.front()) return false;
  return true;
}

inline bool minor_independence_check(const GaussDiagram& g) { return minor_independence_check(coloring_matrix(g).entries); }

/// Writes the matrix in IntMatrix text form behind a '#' header naming row chords and arcs.
inline void write_coloring_matrix(std::ostream& out, const ColoringMatrix& cm) {
  out << "# rows: chords";
  for (int id : cm.row_chords) out << ' ' << id;
  out << "\n# columns: long arcs (circle:start->end)";
  for (const auto& a : cm.arcs) {
    out << ' ' << a.circle << ':';
    if (a.closed())
      out << "closed";
    else
      out << a.start << "->" << a.end;
  }
  out << '\n';
  write_int_matrix(out, cm.entries);
}

}  // namespace vknot
