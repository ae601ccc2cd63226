#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknot/arrow_diagram.hpp"
#include "vknot/combinatorics.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/int_polynomial.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

enum class Variant { ascending, descending };

inline const char* to_string(Variant v) { return v == Variant::ascending ? "ascending" : "descending"; }

/// Circle count carrying Conway combinations with n arrows: one circle for even n, two for odd.
constexpr std::size_t conway_circles(int n) { return n % 2 == 0 ? 1 : 2; }

/// All one-component arrow diagrams with `degree` arrows satisfying the variant predicate.
struct ConwaySet {
  int degree = 0;
  Variant variant = Variant::ascending;
  std::size_t circles = 1;
  std::vector<ArrowDiagram> members;
};

/// Exhaustive generation: every distribution of 2n endpoints over the circles, every perfect
/// matching, every orientation; kept when one-component and ascending (resp. descending).
inline ConwaySet conway_set(int n, std::size_t circles, Variant variant) {
  if (n < 0) throw std::invalid_argument("negative arrow count");
  if (circles != conway_circles(n))
    throw std::invalid_argument("Conway combination with " + std::to_string(n) + " arrows lives on " +
                                std::to_string(conway_circles(n)) + " circle(s)");
  if (n > 16) throw std::length_error("Conway set enumeration is limited to 16 arrows");
  std::set<ArrowDiagram> found;
  const int points = 2 * n;
  const int split_max = circles == 1 ? 0 : points;
  for (int split = 0; split <= split_max; ++split) {
    for_each_matching(points, [&](const std::vector<std::pair<int, int>>& pairs) {
      for (std::uint32_t orient = 0; orient < (1U << n); ++orient) {
        std::vector<Endpoint> flat(static_cast<std::size_t>(points));
        for (int a = 0; a < n; ++a) {
          const bool flip = orient >> a & 1U;
          flat[static_cast<std::size_t>(pairs[static_cast<std::size_t>(a)].first)] = {a, flip ? End::head : End::tail};
          flat[static_cast<std::size_t>(pairs[static_cast<std::size_t>(a)].second)] = {a, flip ? End::tail : End::head};
        }
        std::vector<Circle> cs;
        if (circles == 1) {
          cs.push_back(std::move(flat));
        } else {
          cs.emplace_back(flat.begin(), flat.begin() + split);
          cs.emplace_back(flat.begin() + split, flat.end());
        }
        const ChordLayout layout(std::move(cs));
        const TraversalSummary s = classify(layout);
        if (!s.one_component) continue;
        if (variant == Variant::ascending ? !s.ascending : !s.descending) continue;
        found.insert(ArrowDiagram(layout));
      }
    });
  }
  return ConwaySet{n, variant, circles, std::vector<ArrowDiagram>(found.begin(), found.end())};
}

inline long long subset_sign(const GaussDiagram& g, ChordMask mask) {
  long long s = 1;
  for (ChordMask m = mask; m != 0; m &= m - 1) s *= g.sign(std::countr_zero(m));
  return s;
}

/// <A, G>: signed count of basepoint- and order-preserving embeddings of A's arrows onto
/// chords of G, by enumeration of chord subsets of size |A|.
inline long long pairing(const ArrowDiagram& a, const GaussDiagram& g) {
  if (a.circle_count() != g.circle_count())
    throw DimensionMismatch("pairing needs equal circle counts (arrow diagram has " + std::to_string(a.circle_count()) +
                            ", Gauss diagram has " + std::to_string(g.circle_count()) + ")");
  long long total = 0;
  for_each_subset(static_cast<int>(g.chord_count()), static_cast<int>(a.arrow_count()), [&](ChordMask mask) {
    if (ArrowDiagram::induced(g.layout(), mask) == a) total += subset_sign(g, mask);
  });
  return total;
}

inline long long pairing(const ConwaySet& set, const GaussDiagram& g) {
  long long total = 0;
  for (const auto& a : set.members) total += pairing(a, g);
  return total;
}

/// <C_n, G> (ascending) or <C'_n, G> (descending) without materializing the Conway set: each
/// chord subset of size n contributes its sign when its induced diagram qualifies.
inline long long conway_pairing(int n, Variant variant, const GaussDiagram& g) {
  if (g.circle_count() != conway_circles(n))
    throw DimensionMismatch("Conway combination with " + std::to_string(n) + " arrows pairs with " +
                            std::to_string(conway_circles(n)) + "-circle diagrams");
  long long total = 0;
  for_each_subset(static_cast<int>(g.chord_count()), n, [&](ChordMask mask) {
    const TraversalSummary s = classify(g.layout(), mask);
    if (s.one_component && (variant == Variant::ascending ? s.ascending : s.descending)) total += subset_sign(g, mask);
  });
  return total;
}

/// <C_k, G> and <C'_k, G> for every k <= max_arrows, in one pass over chord subsets. Entries of
/// the wrong parity for G's circle count are zero.
struct ConwayProfile {
  std::vector<long long> ascending;
  std::vector<long long> descending;
};

inline ConwayProfile conway_profile(const GaussDiagram& g, int max_arrows = -1) {
  const int n = static_cast<int>(g.chord_count());
  if (max_arrows < 0 || max_arrows > n) max_arrows = n;
  ConwayProfile p{std::vector<long long>(static_cast<std::size_t>(max_arrows) + 1, 0),
                  std::vector<long long>(static_cast<std::size_t>(max_arrows) + 1, 0)};
  for (int k = 0; k <= max_arrows; ++k) {
    if (g.circle_count() != conway_circles(k)) continue;
    for_each_subset(n, k, [&](ChordMask mask) {
      const TraversalSummary s = classify(g.layout(), mask);
      if (!s.one_component) return;
      const long long sign = subset_sign(g, mask);
      if (s.ascending) p.ascending[static_cast<std::size_t>(k)] += sign;
      if (s.descending) p.descending[static_cast<std::size_t>(k)] += sign;
    });
  }
  return p;
}

/// Sum over k of <C_k, G> z^k (resp. C'_k) up to `max_degree` (default: all chords). For a knot
/// diagram only even powers occur; on a two-circle diagram only odd powers.
inline IntPolynomial conway_polynomial(const GaussDiagram& g, Variant variant, int max_degree = -1) {
  if (g.circle_count() > 2) throw PreconditionError("Conway combinations pair with one- or two-circle diagrams");
  const ConwayProfile p = conway_profile(g, max_degree);
  const auto& coeffs = variant == Variant::ascending ? p.ascending : p.descending;
  IntPolynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.set(static_cast<int>(k), coeffs[k]);
  return out;
}

inline IntPolynomial ascending_polynomial(const GaussDiagram& g, int max_degree = -1) {
  return conway_polynomial(g, Variant::ascending, max_degree);
}

inline IntPolynomial descending_polynomial(const GaussDiagram& g, int max_degree = -1) {
  return conway_polynomial(g, Variant::descending, max_degree);
}

/// Basepoint sweep of the z^2 coefficients of a knot diagram.
struct V2Certificate {
  long long modulus = 0;
  long long value = 0;                 // ascending coefficient at the given basepoint, reduced
  std::vector<long long> ascending;    // exact coefficient per basepoint gap
  std::vector<long long> descending;
  bool consistent = false;             // all of the above agree mod p
};

class CertificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline V2Certificate certify_v2(const GaussDiagram& g, long long p) {
  require_knot(g, "v2");
  if (!is_mod_p_numberable(g, p))
    throw PreconditionError("v2 certification requires a mod " + std::to_string(p) + " numberable diagram");
  V2Certificate cert;
  cert.modulus = p;
  for (const GaussDiagram& b : all_basepoints(g)) {
    cert.ascending.push_back(conway_pairing(2, Variant::ascending, b));
    cert.descending.push_back(conway_pairing(2, Variant::descending, b));
  }
  cert.value = reduce(cert.ascending.front(), p);
  cert.consistent = true;
  for (std::size_t i = 0; i < cert.ascending.size(); ++i)
    if (!congruent(cert.ascending[i], cert.ascending.front(), p) || !congruent(cert.descending[i], cert.ascending.front(), p))
      cert.consistent = false;
  return cert;
}

/// Coefficient of z^2 in the ascending polynomial, reduced mod p (exact for p == 0). With
/// `certify`, also checks agreement over every basepoint and with the descending variant.
inline long long v2(const GaussDiagram& g, long long p, bool certify = false) {
  require_knot(g, "v2");
  if (p < 0) throw std::invalid_argument("modulus must be non-negative");
  if (!certify) return reduce(conway_pairing(2, Variant::ascending, g), p);
  const V2Certificate cert = certify_v2(g, p);
  if (!cert.consistent) throw CertificationFailure("v2 differs across basepoints or variants on a numberable diagram");
  return cert.value;
}

}  // namespace vknot
