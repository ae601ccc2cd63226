#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

namespace detail {

// Rebuilds a diagram from circles that still reference the old dense indices, dropping the
// chords flagged in `removed` and renumbering the survivors in order.
inline GaussDiagram rebuild_without(const GaussDiagram& g, std::vector<Circle> circles, const std::vector<bool>& removed) {
  std::vector<int> remap(g.chord_count(), -1);
  std::vector<int> signs, ids;
  for (std::size_t c = 0; c < g.chord_count(); ++c) {
    if (removed[c]) continue;
    remap[c] = static_cast<int>(signs.size());
    signs.push_back(g.sign(static_cast<int>(c)));
    ids.push_back(g.id(static_cast<int>(c)));
  }
  for (auto& circle : circles) {
    std::erase_if(circle, [&](const Endpoint& e) { return removed[static_cast<std::size_t>(e.chord)]; });
    for (auto& e : circle) e.chord = remap[static_cast<std::size_t>(e.chord)];
  }
  return GaussDiagram(ChordLayout(std::move(circles)), std::move(signs), std::move(ids));
}

inline bool cyclically_adjacent(const ChordLayout& layout, Slot a, Slot b) {
  if (a.circle != b.circle) return false;
  const int len = static_cast<int>(layout.circle(static_cast<std::size_t>(a.circle)).size());
  return (a.pos + 1) % len == b.pos || (b.pos + 1) % len == a.pos;
}

// a immediately precedes b in orientation; undefined (false) on 2-endpoint circles.
inline bool immediately_precedes(const ChordLayout& layout, Slot a, Slot b) {
  if (a.circle != b.circle) return false;
  const int len = static_cast<int>(layout.circle(static_cast<std::size_t>(a.circle)).size());
  return len > 2 && (a.pos + 1) % len == b.pos;
}

}  // namespace detail

/// Oriented smoothing along chord `id`. A self-chord splits its circle: the part through the
/// basepoint keeps the circle's place and the other part is inserted right after it, based
/// just after the reconnection point. A chord joining two circles merges them into the
/// lower-indexed circle, whose basepoint survives.
inline GaussDiagram smooth(const GaussDiagram& g, int id) {
  const int c = g.index_of(id);
  std::vector<Circle> circles = g.circles();
  const Slot t = g.tail(c), h = g.head(c);
  if (t.circle == h.circle) {
    const auto k = static_cast<std::size_t>(t.circle);
    const int x = std::min(t.pos, h.pos);
    const int y = std::max(t.pos, h.pos);
    const Circle& src = circles[k];
    Circle outer(src.begin(), src.begin() + x);
    outer.insert(outer.end(), src.begin() + y + 1, src.end());
    Circle inner(src.begin() + x + 1, src.begin() + y);
    circles[k] = std::move(outer);
    circles.insert(circles.begin() + static_cast<std::ptrdiff_t>(k) + 1, std::move(inner));
  } else {
    const Slot s1 = t.circle < h.circle ? t : h;
    const Slot s2 = t.circle < h.circle ? h : t;
    const Circle& c1 = circles[static_cast<std::size_t>(s1.circle)];
    const Circle& c2 = circles[static_cast<std::size_t>(s2.circle)];
    Circle merged(c1.begin(), c1.begin() + s1.pos);
    merged.insert(merged.end(), c2.begin() + s2.pos + 1, c2.end());
    merged.insert(merged.end(), c2.begin(), c2.begin() + s2.pos);
    merged.insert(merged.end(), c1.begin() + s1.pos + 1, c1.end());
    circles[static_cast<std::size_t>(s1.circle)] = std::move(merged);
    circles.erase(circles.begin() + s2.circle);
  }
  std::vector<bool> removed(g.chord_count(), false);
  removed[static_cast<std::size_t>(c)] = true;
  return detail::rebuild_without(g, std::move(circles), removed);
}

/// Swaps head and tail of chord `id` and negates its sign (L+ <-> L-).
inline GaussDiagram crossing_change(const GaussDiagram& g, int id) {
  const int c = g.index_of(id);
  std::vector<Circle> circles = g.circles();
  for (auto& circle : circles)
    for (auto& e : circle)
      if (e.chord == c) e.end = opposite(e.end);
  std::vector<int> signs = g.signs();
  signs[static_cast<std::size_t>(c)] = -signs[static_cast<std::size_t>(c)];
  return GaussDiagram(ChordLayout(std::move(circles)), std::move(signs), g.ids());
}

inline GaussDiagram remove_chords(const GaussDiagram& g, const std::vector<int>& ids) {
  std::vector<bool> removed(g.chord_count(), false);
  for (int id : ids) removed[static_cast<std::size_t>(g.index_of(id))] = true;
  return detail::rebuild_without(g, g.circles(), removed);
}

/// Moves the basepoint of `circle` forward across `steps` endpoints (negative: backward).
inline GaussDiagram shift_basepoint(const GaussDiagram& g, std::size_t circle, int steps) {
  std::vector<Circle> circles = g.circles();
  Circle& c = circles.at(circle);
  if (!c.empty()) {
    const int len = static_cast<int>(c.size());
    const int r = ((steps % len) + len) % len;
    std::rotate(c.begin(), c.begin() + r, c.end());
  }
  return GaussDiagram(ChordLayout(std::move(circles)), g.signs(), g.ids());
}

/// Every basepoint position of a knot diagram, starting with the current one.
inline std::vector<GaussDiagram> all_basepoints(const GaussDiagram& g) {
  std::vector<GaussDiagram> out{g};
  const int len = static_cast<int>(g.circle(0).size());
  for (int s = 1; s < len; ++s) out.push_back(shift_basepoint(g, 0, s));
  return out;
}

/// Renumbers chords by first appearance (circles in order, from basepoints) with ids 1..n, so
/// diagrams that differ only in chord labelling compare equal.
inline GaussDiagram relabel_canonical(const GaussDiagram& g) {
  std::vector<int> order(g.chord_count(), -1);
  int next = 0;
  for (const auto& circle : g.circles())
    for (const auto& e : circle)
      if (order[static_cast<std::size_t>(e.chord)] < 0) order[static_cast<std::size_t>(e.chord)] = next++;
  std::vector<Circle> circles = g.circles();
  for (auto& circle : circles)
    for (auto& e : circle) e.chord = order[static_cast<std::size_t>(e.chord)];
  std::vector<int> signs(g.chord_count());
  for (std::size_t c = 0; c < g.chord_count(); ++c) signs[static_cast<std::size_t>(order[c])] = g.sign(static_cast<int>(c));
  return GaussDiagram(ChordLayout(std::move(circles)), std::move(signs));
}

// ---------------------------------------------------------------------------------------------
// Reidemeister moves on Gauss diagrams.

/// R1: a new chord with adjacent endpoints inserted at gap `gap` (0..L) of `circle`.
inline GaussDiagram r1_insert(const GaussDiagram& g, std::size_t circle, std::size_t gap, End first, int sign) {
  std::vector<Circle> circles = g.circles();
  const int c = static_cast<int>(g.chord_count());
  Circle& target = circles.at(circle);
  const Endpoint block[2] = {{c, first}, {c, opposite(first)}};
  target.insert(target.begin() + static_cast<std::ptrdiff_t>(gap), std::begin(block), std::end(block));
  std::vector<int> signs = g.signs(), ids = g.ids();
  signs.push_back(sign);
  ids.push_back(g.next_id());
  return GaussDiagram(ChordLayout(std::move(circles)), std::move(signs), std::move(ids));
}

inline std::vector<GaussDiagram> r1_insertions(const GaussDiagram& g) {
  std::vector<GaussDiagram> out;
  for (std::size_t k = 0; k < g.circle_count(); ++k) {
    const std::size_t len = g.circle(k).size();
    for (std::size_t gap = 0; gap <= len; ++gap)
      for (End first : {End::tail, End::head})
        for (int sign : {1, -1}) out.push_back(r1_insert(g, k, gap, first, sign));
  }
  return out;
}

inline std::vector<GaussDiagram> r1_deletions(const GaussDiagram& g) {
  std::vector<GaussDiagram> out;
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c)
    if (detail::cyclically_adjacent(g.layout(), g.tail(c), g.head(c))) out.push_back(remove_chords(g, {g.id(c)}));
  return out;
}

/// R2: two parallel chords of opposite signs (`first_sign` for the first), tails inserted side
/// by side at (tail_circle, tail_gap) and heads at (head_circle, head_gap). `heads_reversed`
/// selects whether the heads appear in the opposite order to the tails (anti-parallel strands).
/// When both pairs go into the same gap, `tails_first` decides which pair comes first.
inline GaussDiagram r2_insert(const GaussDiagram& g, std::size_t tail_circle, std::size_t tail_gap, std::size_t head_circle,
                              std::size_t head_gap, bool heads_reversed, int first_sign, bool tails_first = true) {
  std::vector<Circle> circles = g.circles();
  const int a = static_cast<int>(g.chord_count());
  const int b = a + 1;
  const Circle tails{{a, End::tail}, {b, End::tail}};
  const Circle heads = heads_reversed ? Circle{{b, End::head}, {a, End::head}} : Circle{{a, End::head}, {b, End::head}};
  if (tail_circle == head_circle && tail_gap == head_gap) {
    Circle block = tails_first ? tails : heads;
    const Circle& second = tails_first ? heads : tails;
    block.insert(block.end(), second.begin(), second.end());
    Circle& target = circles.at(tail_circle);
    target.insert(target.begin() + static_cast<std::ptrdiff_t>(tail_gap), block.begin(), block.end());
  } else {
    // insert at the later position first so the earlier gap index stays valid
    const bool tails_later = tail_circle == head_circle && tail_gap > head_gap;
    auto put = [&](std::size_t k, std::size_t gap, const Circle& block) {
      Circle& target = circles.at(k);
      target.insert(target.begin() + static_cast<std::ptrdiff_t>(gap), block.begin(), block.end());
    };
    if (tails_later || tail_circle != head_circle) {
      put(tail_circle, tail_gap, tails);
      put(head_circle, head_gap, heads);
    } else {
      put(head_circle, head_gap, heads);
      put(tail_circle, tail_gap, tails);
    }
  }
  std::vector<int> signs = g.signs(), ids = g.ids();
  signs.push_back(first_sign);
  signs.push_back(-first_sign);
  ids.push_back(g.next_id());
  ids.push_back(g.next_id() + 1);
  return GaussDiagram(ChordLayout(std::move(circles)), std::move(signs), std::move(ids));
}

inline std::vector<GaussDiagram> r2_insertions(const GaussDiagram& g) {
  std::vector<GaussDiagram> out;
  for (std::size_t kt = 0; kt < g.circle_count(); ++kt)
    for (std::size_t gt = 0; gt <= g.circle(kt).size(); ++gt)
      for (std::size_t kh = 0; kh < g.circle_count(); ++kh)
        for (std::size_t gh = 0; gh <= g.circle(kh).size(); ++gh)
          for (bool reversed : {false, true})
            for (int sign : {1, -1}) {
              out.push_back(r2_insert(g, kt, gt, kh, gh, reversed, sign, true));
              if (kt == kh && gt == gh) out.push_back(r2_insert(g, kt, gt, kh, gh, reversed, sign, false));
            }
  return out;
}

inline std::vector<GaussDiagram> r2_deletions(const GaussDiagram& g) {
  std::vector<GaussDiagram> out;
  const auto n = static_cast<int>(g.chord_count());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.sign(a) == g.sign(b)) continue;
      if (detail::cyclically_adjacent(g.layout(), g.tail(a), g.tail(b)) &&
          detail::cyclically_adjacent(g.layout(), g.head(a), g.head(b)))
        out.push_back(remove_chords(g, {g.id(a), g.id(b)}));
    }
  return out;
}

/// R3: three chords forming a triangle of adjacent endpoint pairs. With strands top/middle/
/// bottom and chords tm, tb, mb (over strand first), the configuration is realizable iff
/// o_t*o_m = sign(tb)*sign(mb) and o_t*o_b = sign(tm)*sign(mb), where o_s = +1 when strand s
/// meets its chords in the order (tm, tb), (tm, mb), (tb, mb) respectively. The move swaps all
/// three adjacent pairs, which preserves the condition.
inline std::vector<GaussDiagram> r3_moves(const GaussDiagram& g) {
  std::vector<GaussDiagram> out;
  const auto n = static_cast<int>(g.chord_count());
  const ChordLayout& lay = g.layout();
  auto order = [&](Slot first, Slot second) -> int {
    if (detail::immediately_precedes(lay, first, second)) return 1;
    if (detail::immediately_precedes(lay, second, first)) return -1;
    return 0;
  };
  for (int tm = 0; tm < n; ++tm)
    for (int tb = 0; tb < n; ++tb)
      for (int mb = 0; mb < n; ++mb) {
        if (tm == tb || tm == mb || tb == mb) continue;
        const int ot = order(g.tail(tm), g.tail(tb));
        const int om = order(g.head(tm), g.tail(mb));
        const int ob = order(g.head(tb), g.head(mb));
        if (ot == 0 || om == 0 || ob == 0) continue;
        if (ot * om != g.sign(tb) * g.sign(mb) || ot * ob != g.sign(tm) * g.sign(mb)) continue;
        std::vector<Circle> circles = g.circles();
        auto swap_slots = [&](Slot a, Slot b) {
          std::swap(circles[static_cast<std::size_t>(a.circle)][static_cast<std::size_t>(a.pos)],
                    circles[static_cast<std::size_t>(b.circle)][static_cast<std::size_t>(b.pos)]);
        };
        swap_slots(g.tail(tm), g.tail(tb));
        swap_slots(g.head(tm), g.tail(mb));
        swap_slots(g.head(tb), g.head(mb));
        out.emplace_back(ChordLayout(std::move(circles)), g.signs(), g.ids());
      }
  return out;
}

inline std::vector<GaussDiagram> basepoint_shifts(const GaussDiagram& g) {
  std::vector<GaussDiagram> out;
  for (std::size_t k = 0; k < g.circle_count(); ++k)
    if (!g.circle(k).empty()) {
      out.push_back(shift_basepoint(g, k, 1));
      out.push_back(shift_basepoint(g, k, -1));
    }
  return out;
}

struct MoveSet {
  bool r1 = true;
  bool r2 = true;
  bool r3 = true;
  bool basepoint = true;
  bool insertions = true;
};

/// All diagrams one move away: R1/R2 insertions and deletions, R3 slides, basepoint shifts
/// across one endpoint. Sorted and duplicate-free.
inline std::vector<GaussDiagram> reidemeister_moves(const GaussDiagram& g, MoveSet moves = {}) {
  std::vector<GaussDiagram> out;
  auto append = [&](std::vector<GaussDiagram> v) { std::move(v.begin(), v.end(), std::back_inserter(out)); };
  if (moves.r1) {
    if (moves.insertions) append(r1_insertions(g));
    append(r1_deletions(g));
  }
  if (moves.r2) {
    if (moves.insertions) append(r2_insertions(g));
    append(r2_deletions(g));
  }
  if (moves.r3) append(r3_moves(g));
  if (moves.basepoint) append(basepoint_shifts(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vknot
