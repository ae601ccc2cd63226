#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

/// Chord subsets are bit masks over dense chord indices.
using ChordMask = std::uint64_t;

constexpr ChordMask all_chords(std::size_t n) {
  if (n > 64) throw std::length_error("at most 64 chords supported in subset enumeration");
  return n == 64 ? ~ChordMask{0} : (ChordMask{1} << n) - 1;
}

/// Result of the jump traversal: start at the first circle's basepoint, travel with the
/// orientation, and at every endpoint reached by travel jump to the other end of its arrow and
/// keep travelling from there, until the basepoint is reached again.
struct Traversal {
  std::vector<Slot> reached;                // endpoints reached by travel, in order
  std::vector<std::vector<bool>> visited;   // visited[k][g]: gap g of circle k was travelled
  std::vector<int> first_end;               // per chord: 0 tail, 1 head, -1 never reached

  bool one_component() const {
    for (const auto& circle : visited)
      for (bool v : circle)
        if (!v) return false;
    return true;
  }
};

struct TraversalSummary {
  bool one_component = false;
  bool ascending = false;   // every arrow first reached at its head
  bool descending = false;  // every arrow first reached at its tail
};

namespace detail {

// Jump traversal restricted to the chords in `mask`. Positions in `reached` refer to the full
// layout. Kept allocation-light since pairings run it once per chord subset.
class MaskedTraversal {
 public:
  void run(const ChordLayout& layout, ChordMask mask, bool record) {
    const std::size_t k = layout.circle_count();
    const std::size_t n = layout.chord_count();
    offsets_.assign(k + 1, 0);
    flat_.clear();
    orig_pos_.clear();
    for (std::size_t ci = 0; ci < k; ++ci) {
      offsets_[ci] = flat_.size();
      const Circle& circle = layout.circle(ci);
      for (std::size_t p = 0; p < circle.size(); ++p)
        if (mask >> circle[p].chord & 1U) {
          flat_.push_back(circle[p]);
          orig_pos_.push_back(static_cast<int>(p));
        }
    }
    offsets_[k] = flat_.size();
    where_.assign(2 * n, 0);
    for (std::size_t ci = 0; ci < k; ++ci)
      for (std::size_t i = offsets_[ci]; i < offsets_[ci + 1]; ++i)
        where_[2 * static_cast<std::size_t>(flat_[i].chord) + static_cast<std::size_t>(flat_[i].end)] = i;
    circle_of_.assign(flat_.size(), 0);
    for (std::size_t ci = 0; ci < k; ++ci)
      for (std::size_t i = offsets_[ci]; i < offsets_[ci + 1]; ++i) circle_of_[i] = ci;

    // gaps: one per endpoint (the gap before it); an empty circle has one extra gap
    visited_.assign(flat_.size(), false);
    empty_gap_visited_.assign(k, false);
    first_end_.assign(n, -1);
    reached_.clear();

    auto len = [&](std::size_t ci) { return offsets_[ci + 1] - offsets_[ci]; };
    if (len(0) == 0) {
      empty_gap_visited_[0] = true;
      return;
    }
    visited_[offsets_[0]] = true;
    std::size_t at = offsets_[0];
    for (;;) {
      const Endpoint e = flat_[at];
      int& first = first_end_[static_cast<std::size_t>(e.chord)];
      if (first < 0) first = static_cast<int>(e.end);
      if (record) reached_.push_back(Slot{static_cast<int>(circle_of_[at]), orig_pos_[at]});
      const std::size_t partner = where_[2 * static_cast<std::size_t>(e.chord) + (e.end == End::tail ? 1 : 0)];
      const std::size_t ci = circle_of_[partner];
      const std::size_t local = partner - offsets_[ci] + 1;
      if (ci == 0 && local == len(0)) break;  // back at the basepoint
      at = offsets_[ci] + local % len(ci);
      visited_[at] = true;
    }
  }

  TraversalSummary summary(const ChordLayout& layout, ChordMask mask) const {
    TraversalSummary s;
    s.one_component = true;
    for (std::size_t ci = 0; ci < layout.circle_count(); ++ci)
      if (offsets_[ci + 1] == offsets_[ci] && !empty_gap_visited_[ci]) s.one_component = false;
    for (bool v : visited_)
      if (!v) s.one_component = false;
    s.ascending = s.descending = true;
    for (std::size_t c = 0; c < layout.chord_count(); ++c) {
      if (!(mask >> c & 1U)) continue;
      if (first_end_[c] != 1) s.ascending = false;
      if (first_end_[c] != 0) s.descending = false;
    }
    return s;
  }

  Traversal traversal(const ChordLayout& layout) const {
    Traversal t;
    t.reached = reached_;
    t.first_end = first_end_;
    t.visited.resize(layout.circle_count());
    for (std::size_t ci = 0; ci < layout.circle_count(); ++ci) {
      if (offsets_[ci + 1] == offsets_[ci]) {
        t.visited[ci] = {empty_gap_visited_[ci]};
        continue;
      }
      for (std::size_t i = offsets_[ci]; i < offsets_[ci + 1]; ++i) t.visited[ci].push_back(visited_[i]);
    }
    return t;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Endpoint> flat_;
  std::vector<int> orig_pos_;
  std::vector<std::size_t> where_;
  std::vector<std::size_t> circle_of_;
  std::vector<bool> visited_;
  std::vector<bool> empty_gap_visited_;
  std::vector<int> first_end_;
  std::vector<Slot> reached_;
};

}  // namespace detail

/// Traversal of the sub-diagram formed by the chords in `mask`. For a full layout the gaps in
/// `visited` are those of the full layout.
inline Traversal jump_traversal(const ChordLayout& layout, ChordMask mask) {
  detail::MaskedTraversal t;
  t.run(layout, mask, true);
  return t.traversal(layout);
}

inline Traversal jump_traversal(const ChordLayout& layout) { return jump_traversal(layout, all_chords(layout.chord_count())); }

inline TraversalSummary classify(const ChordLayout& layout, ChordMask mask) {
  thread_local detail::MaskedTraversal scratch;
  scratch.run(layout, mask, false);
  return scratch.summary(layout, mask);
}

inline TraversalSummary classify(const ChordLayout& layout) { return classify(layout, all_chords(layout.chord_count())); }

/// Based arrow diagram: unsigned directed chords on ordered based circles. Chords are kept
/// numbered by first appearance, so two arrow diagrams are isomorphic iff they compare equal.
class ArrowDiagram {
 public:
  ArrowDiagram() = default;
  explicit ArrowDiagram(const ChordLayout& layout) : layout_(normalize(layout, all_chords(layout.chord_count()))) {}

  /// The sub-diagram of `layout` spanned by the chords in `mask`, on all of its circles.
  static ArrowDiagram induced(const ChordLayout& layout, ChordMask mask) {
    ArrowDiagram a;
    a.layout_ = normalize(layout, mask);
    return a;
  }

  const ChordLayout& layout() const noexcept { return layout_; }
  std::size_t arrow_count() const noexcept { return layout_.chord_count(); }
  std::size_t circle_count() const noexcept { return layout_.circle_count(); }

  bool is_one_component() const { return classify(layout_).one_component; }
  bool is_ascending() const { return classify(layout_).ascending; }
  bool is_descending() const { return classify(layout_).descending; }

  friend bool operator==(const ArrowDiagram&, const ArrowDiagram&) = default;
  friend auto operator<=>(const ArrowDiagram& a, const ArrowDiagram& b) { return a.layout_ <=> b.layout_; }

 private:
  static ChordLayout normalize(const ChordLayout& layout, ChordMask mask) {
    std::vector<int> order(layout.chord_count(), -1);
    int next = 0;
    std::vector<Circle> circles;
    for (const auto& circle : layout.circles()) {
      Circle c;
      for (const auto& e : circle) {
        if (!(mask >> e.chord & 1U)) continue;
        int& o = order[static_cast<std::size_t>(e.chord)];
        if (o < 0) o = next++;
        c.push_back(Endpoint{o, e.end});
      }
      circles.push_back(std::move(c));
    }
    return ChordLayout(std::move(circles));
  }

  ChordLayout layout_;
};

/// Unsigned code for an arrow diagram: the signed grammar with signs omitted, arrows numbered
/// 1..n by first appearance.
inline std::string serialize_arrow_code(const ArrowDiagram& a) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < a.arrow_count(); ++i) ids.push_back(static_cast<int>(i) + 1);
  return detail::serialize_code(a.layout(), ids, nullptr);
}

inline ArrowDiagram parse_arrow_code(std::string_view text) { return ArrowDiagram(detail::parse_code(text, false).layout); }

}  // namespace vknot
