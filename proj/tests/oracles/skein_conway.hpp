#pragma once

// Conway polynomial of a classical link diagram by skein recursion, on a private diagram
// representation. Walking the components in order, the first crossing met as an under-passage
// is "bad"; with D' the diagram after changing it and D0 after smoothing it,
// nabla(D) = nabla(D') + sign * z * nabla(D0). Without bad crossings the diagram is descending,
// hence an unlink: 1 for one component, 0 otherwise.
//
// Only meaningful on planar (classical) codes.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

struct Passage {
  int crossing;
  bool over;
};

struct LinkDiagram {
  std::vector<std::vector<Passage>> components;
  std::map<int, int> sign;
};

// Parses "O1+U2-...;..." tokens without any validation beyond what the recursion needs.
inline LinkDiagram parse_link(const std::string& code) {
  LinkDiagram d;
  d.components.emplace_back();
  for (std::size_t i = 0; i < code.size();) {
    const char ch = code[i];
    if (ch == ';') {
      d.components.emplace_back();
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U') throw std::invalid_argument("oracle parser: bad token in " + code);
    std::size_t j = i + 1;
    int label = 0;
    while (j < code.size() && std::isdigit(static_cast<unsigned char>(code[j]))) label = label * 10 + (code[j++] - '0');
    const int s = code.at(j) == '+' ? 1 : -1;
    d.sign[label] = s;
    d.components.back().push_back({label, ch == 'O'});
    i = j + 1;
  }
  return d;
}

// Coefficients by degree, index = power of z.
using Poly = std::vector<long long>;

inline Poly add(Poly a, const Poly& b, long long factor, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += factor * b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly skein_conway(const LinkDiagram& d) {
  std::map<int, bool> seen;
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    for (std::size_t p = 0; p < d.components[k].size(); ++p) {
      const Passage ps = d.components[k][p];
      if (seen.count(ps.crossing)) continue;
      seen[ps.crossing] = true;
      if (ps.over) continue;
      const int c = ps.crossing;
      const int s = d.sign.at(c);

      LinkDiagram changed = d;
      changed.sign[c] = -s;
      for (auto& comp : changed.components)
        for (auto& q : comp)
          if (q.crossing == c) q.over = !q.over;

      // oriented smoothing at c
      LinkDiagram smoothed;
      smoothed.sign = d.sign;
      smoothed.sign.erase(c);
      std::vector<std::pair<std::size_t, std::size_t>> at;  // (component, position) of both passages
      for (std::size_t kk = 0; kk < d.components.size(); ++kk)
        for (std::size_t pp = 0; pp < d.components[kk].size(); ++pp)
          if (d.components[kk][pp].crossing == c) at.push_back({kk, pp});
      if (at[0].first == at[1].first) {
        const auto& comp = d.components[at[0].first];
        const std::size_t x = at[0].second, y = at[1].second;
        std::vector<Passage> outer(comp.begin(), comp.begin() + static_cast<long>(x));
        outer.insert(outer.end(), comp.begin() + static_cast<long>(y) + 1, comp.end());
        std::vector<Passage> inner(comp.begin() + static_cast<long>(x) + 1, comp.begin() + static_cast<long>(y));
        for (std::size_t kk = 0; kk < d.components.size(); ++kk) {
          if (kk == at[0].first) {
            smoothed.components.push_back(outer);
            smoothed.components.push_back(inner);
          } else {
            smoothed.components.push_back(d.components[kk]);
          }
        }
      } else {
        const auto& c1 = d.components[at[0].first];
        const auto& c2 = d.components[at[1].first];
        const std::size_t x = at[0].second, y = at[1].second;
        std::vector<Passage> merged(c1.begin(), c1.begin() + static_cast<long>(x));
        merged.insert(merged.end(), c2.begin() + static_cast<long>(y) + 1, c2.end());
        merged.insert(merged.end(), c2.begin(), c2.begin() + static_cast<long>(y));
        merged.insert(merged.end(), c1.begin() + static_cast<long>(x) + 1, c1.end());
        for (std::size_t kk = 0; kk < d.components.size(); ++kk) {
          if (kk == at[0].first) smoothed.components.push_back(merged);
          else if (kk != at[1].first) smoothed.components.push_back(d.components[kk]);
        }
      }

      // nabla(L+) - nabla(L-) = z nabla(L0)
      const Poly rest = skein_conway(changed);
      const Poly zero = skein_conway(smoothed);
      return add(rest, zero, s, 1);
    }
  }
  return d.components.size() == 1 ? Poly{1} : Poly{};
}

inline Poly skein_conway(const std::string& code) { return skein_conway(parse_link(code)); }

}  // namespace oracle
