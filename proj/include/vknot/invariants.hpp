#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "vknot/errors.hpp"
#include "vknot/gauss_diagram.hpp"

namespace vknot {

inline void require_knot(const GaussDiagram& g, const char* what) {
  if (!g.is_knot()) throw PreconditionError(std::string(what) + " is defined for one-circle (knot) diagrams");
}

/// Which interleaved chords count as crossing "left to right". The default counts a chord d
/// as left-to-right when its tail lies on the arc running from head(c) to tail(c). Only the
/// sign of the index depends on this choice.
enum class IndexConvention { tail_on_head_to_tail_arc, tail_on_tail_to_head_arc };

/// Index I(c) = sign(c) * (r+ - r- + l- - l+) of chord `id` in a knot diagram.
inline long long index(const GaussDiagram& g, int id, IndexConvention convention = IndexConvention::tail_on_head_to_tail_arc) {
  require_knot(g, "the chord index");
  const int c = g.index_of(id);
  const int len = static_cast<int>(g.circle(0).size());
  const int h = g.head(c).pos;
  // position p lies strictly on the arc from head(c) forward to tail(c)
  auto on_head_to_tail = [&](int p) {
    const int from_head = ((p - h) % len + len) % len;
    const int tail_from_head = ((g.tail(c).pos - h) % len + len) % len;
    return from_head > 0 && from_head < tail_from_head;
  };
  long long sum = 0;
  for (int d = 0; d < static_cast<int>(g.chord_count()); ++d) {
    if (!g.layout().interleaved(c, d)) continue;
    const bool right = on_head_to_tail(g.tail(d).pos) == (convention == IndexConvention::tail_on_head_to_tail_arc);
    sum += g.sign(d) * (right ? 1 : -1);
  }
  return g.sign(c) * sum;
}

/// Indices of all chords, in dense chord order.
inline std::vector<long long> index_vector(const GaussDiagram& g) {
  std::vector<long long> out;
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c) out.push_back(index(g, g.id(c)));
  return out;
}

/// Residue test: a == b mod p, with p == 0 meaning exact equality.
constexpr bool congruent(long long a, long long b, long long p) noexcept {
  if (p == 0) return a == b;
  return ((a - b) % p) == 0;
}

constexpr long long reduce(long long a, long long p) noexcept {
  if (p == 0) return a;
  return ((a % p) + p) % p;
}

/// A knot diagram is mod-p Alexander numberable iff every chord index vanishes mod p.
inline bool is_mod_p_numberable(const GaussDiagram& g, long long p) {
  require_knot(g, "mod p numberability");
  if (p < 0) throw std::invalid_argument("modulus must be non-negative");
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c)
    if (!congruent(index(g, g.id(c)), 0, p)) return false;
  return true;
}

/// Labels of short arcs. `labels[k][g]` labels gap g of circle k (the arc ending at endpoint g;
/// gap 0 contains the basepoint). Residues lie in [0, p) for p > 0.
struct Numbering {
  long long modulus = 0;
  std::vector<std::vector<long long>> labels;
};

namespace detail {

// Label increment when travel passes an endpoint: +sign at a head, -sign at a tail.
inline long long increment(const GaussDiagram& g, Endpoint e) {
  return e.end == End::head ? g.sign(e.chord) : -g.sign(e.chord);
}

inline std::size_t gap_after(const GaussDiagram& g, Slot s) {
  return (static_cast<std::size_t>(s.pos) + 1) % g.circle(static_cast<std::size_t>(s.circle)).size();
}

}  // namespace detail

/// Checks the crossing constraints of a numbering: at every chord the arc entering the tail
/// equals the arc leaving the head, and passing a head (tail) raises the label by +sign (-sign).
inline bool is_valid_numbering(const GaussDiagram& g, const Numbering& n) {
  const long long p = n.modulus;
  if (n.labels.size() != g.circle_count()) return false;
  for (std::size_t k = 0; k < g.circle_count(); ++k) {
    const std::size_t len = g.circle(k).size();
    if (n.labels[k].size() != std::max<std::size_t>(len, 1)) return false;
    for (std::size_t i = 0; i < len; ++i) {
      const long long before = n.labels[k][i];
      const long long after = n.labels[k][(i + 1) % len];
      if (!congruent(after - before, detail::increment(g, g.circle(k)[i]), p)) return false;
    }
  }
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c) {
    const Slot t = g.tail(c), h = g.head(c);
    const long long before_tail = n.labels[static_cast<std::size_t>(t.circle)][static_cast<std::size_t>(t.pos)];
    const long long after_head = n.labels[static_cast<std::size_t>(h.circle)][detail::gap_after(g, h)];
    if (!congruent(before_tail, after_head, p)) return false;
  }
  return true;
}

/// Solves the numbering constraints over Z/p (Z for p == 0). Within a circle labels follow
/// from the increments; the per-circle offsets are tied together by the chord equations,
/// which a weighted union-find resolves. Returns nullopt when no numbering exists.
inline std::optional<Numbering> alexander_numbering(const GaussDiagram& g, long long p) {
  if (p < 0) throw std::invalid_argument("modulus must be non-negative");
  const std::size_t k = g.circle_count();
  std::vector<std::vector<long long>> rel(k);
  for (std::size_t ci = 0; ci < k; ++ci) {
    const Circle& circle = g.circle(ci);
    rel[ci].assign(std::max<std::size_t>(circle.size(), 1), 0);
    long long acc = 0;
    for (std::size_t i = 0; i < circle.size(); ++i) {
      acc += detail::increment(g, circle[i]);
      if (i + 1 < circle.size()) rel[ci][i + 1] = acc;
    }
    if (!congruent(acc, 0, p)) return std::nullopt;
  }
  // offset[x] relative to parent: value(x) = value(parent[x]) + weight[x]
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<long long> weight(k, 0);
  auto find = [&](auto&& self, std::size_t x) -> std::size_t {
    if (parent[x] == x) return x;
    const std::size_t root = self(self, parent[x]);
    weight[x] += weight[parent[x]];
    parent[x] = root;
    return root;
  };
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c) {
    const Slot t = g.tail(c), h = g.head(c);
    const auto kt = static_cast<std::size_t>(t.circle), kh = static_cast<std::size_t>(h.circle);
    // base[kt] + rel[kt][tail gap] == base[kh] + rel[kh][gap after head]
    const long long diff = rel[kh][detail::gap_after(g, h)] - rel[kt][static_cast<std::size_t>(t.pos)];  // base[kt] - base[kh]
    const std::size_t rt = find(find, kt), rh = find(find, kh);
    if (rt == rh) {
      if (!congruent(weight[kt] - weight[kh], diff, p)) return std::nullopt;
    } else {
      parent[rt] = rh;
      weight[rt] = diff + weight[kh] - weight[kt];
    }
  }
  Numbering out;
  out.modulus = p;
  out.labels.resize(k);
  for (std::size_t ci = 0; ci < k; ++ci) {
    find(find, ci);
    const long long base = weight[ci];
    for (long long r : rel[ci]) out.labels[ci].push_back(reduce(base + r, p));
  }
  return out;
}

/// Number of chords whose head is met before their tail when travelling from the basepoint.
inline int warping_degree(const GaussDiagram& g) {
  require_knot(g, "the warping degree");
  int count = 0;
  for (int c = 0; c < static_cast<int>(g.chord_count()); ++c)
    if (g.head(c).pos < g.tail(c).pos) ++count;
  return count;
}

}  // namespace vknot
