#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

/// Which end of a chord an endpoint is. The tail is the over-passage (O token), the head
/// (arrowhead) is the under-passage (U token).
enum class End : std::uint8_t { tail = 0, head = 1 };

constexpr End opposite(End e) noexcept { return e == End::tail ? End::head : End::tail; }

struct Endpoint {
  int chord = 0;  // dense chord index
  End end = End::tail;

  friend constexpr auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// Location of an endpoint: circle index and offset from that circle's basepoint.
struct Slot {
  int circle = 0;
  int pos = 0;

  friend constexpr auto operator<=>(const Slot&, const Slot&) = default;
};

/// Endpoints of one circle, listed in orientation order starting at the circle's basepoint.
/// Gap g of a circle with L endpoints lies just before endpoint g; gap 0 carries the basepoint.
using Circle = std::vector<Endpoint>;

/// Unsigned chord structure shared by Gauss diagrams and arrow diagrams: ordered based
/// circles whose endpoints reference chords 0..n-1, each chord having one tail and one head.
class ChordLayout {
 public:
  ChordLayout() : circles_(1) {}

  explicit ChordLayout(std::vector<Circle> circles) : circles_(std::move(circles)) {
    if (circles_.empty()) throw std::invalid_argument("a diagram needs at least one circle");
    build_slots();
  }

  std::size_t circle_count() const noexcept { return circles_.size(); }
  std::size_t chord_count() const noexcept { return slots_.size(); }
  const std::vector<Circle>& circles() const noexcept { return circles_; }
  const Circle& circle(std::size_t i) const { return circles_.at(i); }

  Slot slot(int chord, End end) const { return slots_.at(static_cast<std::size_t>(chord))[static_cast<std::size_t>(end)]; }
  Slot tail(int chord) const { return slot(chord, End::tail); }
  Slot head(int chord) const { return slot(chord, End::head); }

  bool self_chord(int chord) const { return tail(chord).circle == head(chord).circle; }

  /// True when both chords lie on one circle and their endpoints alternate.
  bool interleaved(int a, int b) const {
    if (a == b || !self_chord(a) || !self_chord(b) || tail(a).circle != tail(b).circle) return false;
    const int lo = std::min(tail(a).pos, head(a).pos);
    const int hi = std::max(tail(a).pos, head(a).pos);
    auto inside = [&](int p) { return lo < p && p < hi; };
    return inside(tail(b).pos) != inside(head(b).pos);
  }

  friend bool operator==(const ChordLayout& a, const ChordLayout& b) { return a.circles_ == b.circles_; }
  friend auto operator<=>(const ChordLayout& a, const ChordLayout& b) { return a.circles_ <=> b.circles_; }

 private:
  void build_slots() {
    std::size_t endpoints = 0;
    for (const auto& c : circles_) endpoints += c.size();
    if (endpoints % 2 != 0) throw std::invalid_argument("odd number of chord endpoints");
    const std::size_t n = endpoints / 2;
    slots_.assign(n, {Slot{-1, -1}, Slot{-1, -1}});
    for (std::size_t ci = 0; ci < circles_.size(); ++ci) {
      for (std::size_t p = 0; p < circles_[ci].size(); ++p) {
        const Endpoint e = circles_[ci][p];
        if (e.chord < 0 || static_cast<std::size_t>(e.chord) >= n)
          throw std::invalid_argument("chord index out of range");
        Slot& s = slots_[static_cast<std::size_t>(e.chord)][static_cast<std::size_t>(e.end)];
        if (s.circle >= 0) throw std::invalid_argument("chord end occupies two slots");
        s = Slot{static_cast<int>(ci), static_cast<int>(p)};
      }
    }
  }

  std::vector<Circle> circles_;
  std::vector<std::array<Slot, 2>> slots_;
};

/// Based Gauss diagram of a virtual knot or link: a chord layout plus a sign (+1/-1) and a
/// user-visible id for every chord. Immutable; all operations return new values.
class GaussDiagram {
 public:
  /// The 0-chord unknot.
  GaussDiagram() = default;

  GaussDiagram(ChordLayout layout, std::vector<int> signs, std::vector<int> ids = {})
      : layout_(std::move(layout)), signs_(std::move(signs)), ids_(std::move(ids)) {
    const std::size_t n = layout_.chord_count();
    if (signs_.size() != n) throw std::invalid_argument("one sign per chord required");
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("chord signs must be +1 or -1");
    if (ids_.empty())
      for (std::size_t i = 0; i < n; ++i) ids_.push_back(static_cast<int>(i) + 1);
    if (ids_.size() != n) throw std::invalid_argument("one id per chord required");
    std::vector<int> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate chord id");
    if (!sorted.empty() && sorted.front() < 0) throw std::invalid_argument("chord ids must be non-negative");
  }

  const ChordLayout& layout() const noexcept { return layout_; }
  const std::vector<Circle>& circles() const noexcept { return layout_.circles(); }
  const Circle& circle(std::size_t i) const { return layout_.circle(i); }
  std::size_t circle_count() const noexcept { return layout_.circle_count(); }
  std::size_t chord_count() const noexcept { return layout_.chord_count(); }
  bool is_knot() const noexcept { return circle_count() == 1; }

  int sign(int chord) const { return signs_.at(static_cast<std::size_t>(chord)); }
  int id(int chord) const { return ids_.at(static_cast<std::size_t>(chord)); }
  const std::vector<int>& signs() const noexcept { return signs_; }
  const std::vector<int>& ids() const noexcept { return ids_; }

  Slot tail(int chord) const { return layout_.tail(chord); }
  Slot head(int chord) const { return layout_.head(chord); }

  bool has_id(int id) const { return std::find(ids_.begin(), ids_.end(), id) != ids_.end(); }

  int index_of(int id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw UnknownChord(id);
    return static_cast<int>(it - ids_.begin());
  }

  int next_id() const {
    int m = 0;
    for (int i : ids_) m = std::max(m, i);
    return m + 1;
  }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;
  friend auto operator<=>(const GaussDiagram& a, const GaussDiagram& b) {
    if (auto c = a.layout_ <=> b.layout_; c != 0) return c;
    if (auto c = a.signs_ <=> b.signs_; c != 0) return c;
    return a.ids_ <=> b.ids_;
  }

 private:
  ChordLayout layout_;
  std::vector<int> signs_;
  std::vector<int> ids_;
};

namespace detail {

struct ParsedCode {
  ChordLayout layout;
  std::vector<int> signs;  // all +1 for unsigned codes
  std::vector<int> ids;
};

// Grammar: circles separated by ';'; token = ['*'] ('O'|'U') digits [('+'|'-')]; the sign is
// mandatory for signed codes and forbidden otherwise. Whitespace is ignored.
inline ParsedCode parse_code(std::string_view text, bool with_signs) {
  struct Token {
    End end;
    int label;
    int sign;
    std::size_t offset;
  };
  std::vector<std::vector<Token>> circles(1);
  std::vector<int> basepoint(1, -1);
  bool pending_star = false;
  std::size_t star_offset = 0;

  std::size_t i = 0;
  auto finish_circle = [&] {
    if (pending_star) throw GaussCodeError("basepoint marker '*' must precede a token", star_offset);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ';') {
      finish_circle();
      circles.emplace_back();
      basepoint.push_back(-1);
      ++i;
      continue;
    }
    if (ch == '*') {
      if (pending_star || basepoint.back() >= 0)
        throw GaussCodeError("more than one basepoint marker on a circle", i);
      pending_star = true;
      star_offset = i;
      ++i;
      continue;
    }
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (up != 'O' && up != 'U') throw GaussCodeError(std::string("unexpected character '") + ch + "'", i);
    const std::size_t start = i++;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw GaussCodeError("expected chord label after O/U", i);
    long label = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      label = label * 10 + (text[i] - '0');
      if (label > 1'000'000'000L) throw GaussCodeError("chord label too large", start);
      ++i;
    }
    skip_ws();
    int sign = 1;
    if (with_signs) {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw GaussCodeError("expected '+' or '-' after chord label", i);
      sign = text[i] == '+' ? 1 : -1;
      ++i;
    } else if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      throw GaussCodeError("arrow codes carry no signs", i);
    }
    if (pending_star) {
      basepoint.back() = static_cast<int>(circles.back().size());
      pending_star = false;
    }
    circles.back().push_back(Token{up == 'O' ? End::tail : End::head, static_cast<int>(label), sign, start});
  }
  finish_circle();

  struct Seen {
    const Token* tail = nullptr;
    const Token* head = nullptr;
  };
  std::map<int, Seen> seen;
  for (const auto& c : circles) {
    for (const auto& t : c) {
      Seen& s = seen[t.label];
      const Token*& slot = t.end == End::tail ? s.tail : s.head;
      if (slot != nullptr)
        throw GaussCodeError(std::string("duplicate ") + (t.end == End::tail ? "O" : "U") + " token for chord " +
                                 std::to_string(t.label),
                             t.offset);
      slot = &t;
    }
  }
  ParsedCode out;
  std::map<int, int> dense;
  for (const auto& [label, s] : seen) {
    const Token* present = s.tail ? s.tail : s.head;
    if (!s.tail || !s.head)
      throw GaussCodeError("chord " + std::to_string(label) + " is missing its " + (s.tail ? "U" : "O") + " partner",
                           present->offset);
    if (s.tail->sign != s.head->sign)
      throw GaussCodeError("sign mismatch between O and U tokens of chord " + std::to_string(label), s.head->offset);
    dense[label] = static_cast<int>(out.ids.size());
    out.ids.push_back(label);
    out.signs.push_back(s.tail->sign);
  }
  std::vector<Circle> layout;
  for (std::size_t ci = 0; ci < circles.size(); ++ci) {
    Circle c;
    for (const auto& t : circles[ci]) c.push_back(Endpoint{dense[t.label], t.end});
    if (basepoint[ci] > 0) std::rotate(c.begin(), c.begin() + basepoint[ci], c.end());
    layout.push_back(std::move(c));
  }
  out.layout = ChordLayout(std::move(layout));
  return out;
}

inline std::string serialize_code(const ChordLayout& layout, const std::vector<int>& ids, const std::vector<int>* signs) {
  std::string out;
  for (std::size_t ci = 0; ci < layout.circle_count(); ++ci) {
    if (ci > 0) out += ';';
    for (const Endpoint& e : layout.circle(ci)) {
      out += e.end == End::tail ? 'O' : 'U';
      out += std::to_string(ids[static_cast<std::size_t>(e.chord)]);
      if (signs) out += (*signs)[static_cast<std::size_t>(e.chord)] > 0 ? '+' : '-';
    }
  }
  return out;
}

}  // namespace detail

/// Parses a signed Gauss code such as "O1+U2+O3+U1+O2+U3+" (circles separated by ';',
/// optional '*' marking the basepoint gap). Throws GaussCodeError on malformed input.
inline GaussDiagram parse_gauss_code(std::string_view text) {
  auto parsed = detail::parse_code(text, true);
  return GaussDiagram(std::move(parsed.layout), std::move(parsed.signs), std::move(parsed.ids));
}

inline std::string serialize_gauss_code(const GaussDiagram& g) {
  return detail::serialize_code(g.layout(), g.ids(), &g.signs());
}

}  // namespace vknot
