#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "vknot/combinatorics.hpp"
#include "vknot/gauss_diagram.hpp"

namespace vknot {

/// (2k-1)!! * 4^k one-circle based diagrams with k chords, before any deduplication.
constexpr std::uint64_t raw_diagram_count(int k) { return double_factorial_odd(k) << (2 * k); }

/// Visits every one-circle based Gauss diagram with k chords: each endpoint pairing, each
/// orientation of each chord, each sign pattern. Pairings are dealt round-robin to `shards`
/// workers; shard `shard` sees only its share.
template <class F>
void for_each_diagram(int k, F&& f, int shard = 0, int shards = 1) {
  if (k < 0) throw std::invalid_argument("negative chord count");
  if (k > 12) throw std::length_error("exhaustive enumeration is limited to 12 chords");
  std::uint64_t pairing_index = 0;
  const int points = 2 * k;
  for_each_matching(points, [&](const std::vector<std::pair<int, int>>& pairs) {
    if (static_cast<int>(pairing_index++ % static_cast<std::uint64_t>(shards)) != shard) return;
    for (std::uint32_t orient = 0; orient < (1U << k); ++orient) {
      Circle circle(static_cast<std::size_t>(points));
      for (int c = 0; c < k; ++c) {
        const bool flip = orient >> c & 1U;
        circle[static_cast<std::size_t>(pairs[static_cast<std::size_t>(c)].first)] = {c, flip ? End::head : End::tail};
        circle[static_cast<std::size_t>(pairs[static_cast<std::size_t>(c)].second)] = {c, flip ? End::tail : End::head};
      }
      const ChordLayout layout(std::vector<Circle>{circle});
      for (std::uint32_t signs = 0; signs < (1U << k); ++signs) {
        std::vector<int> s(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) s[static_cast<std::size_t>(c)] = (signs >> c & 1U) ? -1 : 1;
        f(GaussDiagram(layout, std::move(s)));
      }
    }
  });
}

/// Key identifying a one-circle diagram up to rotation (basepoint position) and relabelling:
/// the lexicographically least signed endpoint word over all rotations.
inline std::vector<int> rotation_key(const GaussDiagram& g) {
  const Circle& c = g.circle(0);
  const std::size_t len = c.size();
  std::vector<int> best;
  for (std::size_t r = 0; r < std::max<std::size_t>(len, 1); ++r) {
    std::vector<int> order(g.chord_count(), -1);
    int next = 0;
    std::vector<int> word;
    word.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      const Endpoint e = c[(i + r) % len];
      int& o = order[static_cast<std::size_t>(e.chord)];
      if (o < 0) o = next++;
      word.push_back(o * 4 + (e.end == End::head ? 2 : 0) + (g.sign(e.chord) > 0 ? 1 : 0));
    }
    if (best.empty() || word < best) best = std::move(word);
  }
  return best;
}

/// All one-circle diagrams with k chords; with `canonical`, one representative per rotation
/// class (the first one met in enumeration order).
inline std::vector<GaussDiagram> enumerate_diagrams(int k, bool canonical = false) {
  std::vector<GaussDiagram> out;
  std::set<std::vector<int>> seen;
  for_each_diagram(k, [&](GaussDiagram g) {
    if (canonical && !seen.insert(rotation_key(g)).second) return;
    out.push_back(std::move(g));
  });
  return out;
}

/// Uniform draw in [0, n) from a 64-bit engine (modulo draw; bias is irrelevant here and the
/// result is reproducible across standard libraries).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Random diagram: a uniformly shuffled endpoint word with random signs. With two circles the
/// word is cut at a random interior point so both circles carry endpoints (when chords >= 1).
inline GaussDiagram random_diagram(std::mt19937_64& rng, int chords, std::size_t circles = 1) {
  if (circles < 1 || circles > 2) throw std::invalid_argument("random diagrams have one or two circles");
  std::vector<Endpoint> word;
  for (int c = 0; c < chords; ++c) {
    word.push_back({c, End::tail});
    word.push_back({c, End::head});
  }
  for (std::size_t i = word.size(); i > 1; --i) std::swap(word[i - 1], word[draw(rng, i)]);
  std::vector<int> signs;
  for (int c = 0; c < chords; ++c) signs.push_back(draw(rng, 2) ? 1 : -1);
  std::vector<Circle> cs;
  if (circles == 1 || word.empty()) {
    cs.push_back(std::move(word));
    if (circles == 2) cs.emplace_back();
  } else {
    const auto cut = static_cast<std::ptrdiff_t>(1 + draw(rng, word.size() - 1));
    cs.emplace_back(word.begin(), word.begin() + cut);
    cs.emplace_back(word.begin() + cut, word.end());
  }
  return GaussDiagram(ChordLayout(std::move(cs)), std::move(signs));
}

}  // namespace vknot
