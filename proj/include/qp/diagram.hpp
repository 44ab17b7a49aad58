#ifndef QP_DIAGRAM_HPP
#define QP_DIAGRAM_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qp/factorize.hpp"
#include "qp/rbs.hpp"
#include "qp/recognizer.hpp"
#include "qp/word.hpp"

// Spherical cancellation diagrams: a boundary circle carrying the word,
// one single-vertex circle per base letter carrying its inverse, and a
// perfect matching of arcs joining inverse labels.  Outer-to-outer arcs
// form a noncrossing chord set on the cyclic boundary; all diagrams here
// arise from bracket structures or witness trees, which only ever produce
// nested systems.

namespace qp {

struct CancellationDiagram {
  Word outer;                             // boundary word
  std::vector<Letter> inner;              // inner circle labels (negative letters)
  std::vector<std::pair<int, int>> arcs;  // vertices 0..n-1 outer, n..n+k-1 inner

  std::size_t outer_size() const { return outer.size(); }
};

inline bool validate_diagram(const CancellationDiagram& d) {
  const int n = static_cast<int>(d.outer.size());
  const int k = static_cast<int>(d.inner.size());

  AbelianImage theta = abelianize(d.outer);
  long long theta_sum = 0;
  for (int c : theta) theta_sum += c;
  if (theta_sum != k) return false;

  if (2 * d.arcs.size() != static_cast<std::size_t>(n + k)) return false;
  std::vector<int> degree(static_cast<std::size_t>(n + k), 0);
  auto label = [&](int v) { return v < n ? d.outer.letters[static_cast<std::size_t>(v)]
                                         : d.inner[static_cast<std::size_t>(v - n)]; };
  for (const Letter& l : d.inner)
    if (l.positive()) return false;
  for (auto [u, v] : d.arcs) {
    if (u < 0 || v < 0 || u >= n + k || v >= n + k || u == v) return false;
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
    if (!(label(u) == label(v).inverse())) return false;
  }
  for (int deg : degree)
    if (deg != 1) return false;

  // outer-to-outer arcs must be pairwise noncrossing chords
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : d.arcs)
    if (u < n && v < n) chords.emplace_back(std::min(u, v), std::max(u, v));
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, e] = chords[j];
      const bool crossing = (a < c && c < b && b < e) || (c < a && a < e && e < b);
      if (crossing) return false;
    }
  }
  return true;
}

namespace detail {

// mate[i] = chord partner of outer position i, or -1 when i is starred.
inline CancellationDiagram diagram_from_slots(const Word& w, const std::vector<int>& mate) {
  CancellationDiagram d;
  d.outer = w;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    if (mate[static_cast<std::size_t>(i)] == -1) {
      d.arcs.emplace_back(i, n + static_cast<int>(d.inner.size()));
      d.inner.push_back(w.letters[static_cast<std::size_t>(i)].inverse());
    } else if (mate[static_cast<std::size_t>(i)] > i) {
      d.arcs.emplace_back(i, mate[static_cast<std::size_t>(i)]);
    }
  }
  return d;
}

inline std::vector<int> witness_slots(const WitnessTree& t) {
  const std::size_t n = t.word.size();
  std::vector<int> mate(n, -1);
  if (t.is_leaf()) {
    for (const Letter& l : t.word.letters)
      if (!l.positive())
        throw std::invalid_argument("diagram_from_witness: leaf word contains a negative letter");
    return mate;
  }
  const std::size_t i = t.neg_pos;
  const std::size_t m = t.match_pos % n;
  const std::size_t left_len = t.left->word.size();
  const std::size_t right_len = t.right->word.size();
  bool valid = i < n && left_len + right_len == n - 2 &&
               t.word.letters[i] == t.base.inverse() && t.word.letters[m] == t.base;
  for (std::size_t p = 0; valid && p < left_len; ++p)
    valid = t.word.letters[(i + 1 + p) % n] == t.left->word.letters[p];
  for (std::size_t p = 0; valid && p < right_len; ++p)
    valid = t.word.letters[(m + 1 + p) % n] == t.right->word.letters[p];
  if (!valid)
    throw std::invalid_argument("diagram_from_witness: node identity does not hold literally");

  mate[i] = static_cast<int>(m);
  mate[m] = static_cast<int>(i);
  std::vector<int> left_mate = witness_slots(*t.left);
  std::vector<int> right_mate = witness_slots(*t.right);
  auto embed = [&](const std::vector<int>& sub, std::size_t offset) {
    for (std::size_t p = 0; p < sub.size(); ++p) {
      const auto pos = (offset + p) % n;
      mate[pos] = sub[p] == -1 ? -1 : static_cast<int>((offset + static_cast<std::size_t>(sub[p])) % n);
    }
  };
  embed(left_mate, i + 1);
  embed(right_mate, m + 1);
  return mate;
}

}  // namespace detail

inline CancellationDiagram diagram_from_rbs(const Word& w, const RBS& r) {
  if (!agrees(r, w))
    throw std::invalid_argument("diagram_from_rbs: RBS does not agree with word");
  std::vector<int> mate(w.size(), -1);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.symbols[i] != '*') mate[i] = r.matching[i];
  return detail::diagram_from_slots(w, mate);
}

inline CancellationDiagram diagram_from_witness(const WitnessTree& t) {
  return detail::diagram_from_slots(t.word, detail::witness_slots(t));
}

inline CancellationDiagram diagram_from_witness(const std::shared_ptr<const WitnessTree>& t) {
  if (!t) throw std::invalid_argument("diagram_from_witness: null witness");
  return diagram_from_witness(*t);
}

// Reads a factorization off the diagram.  The transverse path to each
// inner circle starts at the base point (between the last and first
// letters) and runs along just inside the boundary in position order; a
// crossed chord strand at position v prepends the inverse of the label at
// v to the running conjugator.
inline Factorization read_factorization(const CancellationDiagram& d) {
  if (!validate_diagram(d)) throw std::invalid_argument("read_factorization: invalid diagram");
  const int n = static_cast<int>(d.outer.size());
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (auto [u, v] : d.arcs) {
    if (u < n && v < n) {
      partner[static_cast<std::size_t>(u)] = v;
      partner[static_cast<std::size_t>(v)] = u;
    }
  }
  Factorization out;
  out.rank = d.outer.rank;
  Word gamma{{}, d.outer.rank};
  for (int v = 0; v < n; ++v) {
    const Letter l = d.outer.letters[static_cast<std::size_t>(v)];
    if (partner[static_cast<std::size_t>(v)] == -1) {
      out.factors.push_back({l, gamma});
    } else {
      Word inv = single_letter_word(l.inverse(), d.outer.rank);
      gamma = reduced_product({&inv, &gamma}, d.outer.rank);
    }
  }
  return out;
}

inline std::string render_svg(const CancellationDiagram& d) {
  if (!validate_diagram(d)) throw std::invalid_argument("render_svg: invalid diagram");
  const int n = static_cast<int>(d.outer.size());
  const double cx = 250.0, cy = 250.0, radius = 200.0;
  const double pi = 3.14159265358979323846;

  auto outer_pos = [&](double idx) {
    const double angle = -pi / 2 + 2 * pi * (idx + 0.5) / std::max(n, 1);
    return std::pair<double, double>{cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
  };
  auto inner_pos = [&](double idx) {
    const double angle = -pi / 2 + 2 * pi * (idx + 0.5) / std::max(n, 1);
    return std::pair<double, double>{cx + 0.62 * radius * std::cos(angle),
                                     cy + 0.62 * radius * std::sin(angle)};
  };
  char buf[256];
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
         "viewBox=\"0 0 500 500\">\n";
  std::snprintf(buf, sizeof buf,
                "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" stroke=\"black\"/>\n",
                cx, cy, radius);
  svg += buf;

  std::vector<int> inner_mate(d.inner.size(), -1);
  for (auto [u, v] : d.arcs) {
    const int outer_v = std::min(u, v);
    const int inner_v = std::max(u, v);
    if (inner_v < n) {  // chord
      auto [x1, y1] = outer_pos(outer_v);
      auto [x2, y2] = outer_pos(inner_v);
      const double qx = cx + 0.30 * ((x1 + x2) / 2 - cx);
      const double qy = cy + 0.30 * ((y1 + y2) / 2 - cy);
      std::snprintf(buf, sizeof buf,
                    "  <path d=\"M %.2f %.2f Q %.2f %.2f %.2f %.2f\" fill=\"none\" "
                    "stroke=\"firebrick\"/>\n",
                    x1, y1, qx, qy, x2, y2);
      svg += buf;
    } else {
      inner_mate[static_cast<std::size_t>(inner_v - n)] = outer_v;
    }
  }
  for (std::size_t i = 0; i < d.inner.size(); ++i) {
    auto [x1, y1] = outer_pos(inner_mate[i]);
    auto [x2, y2] = inner_pos(inner_mate[i]);
    std::snprintf(buf, sizeof buf,
                  "  <path d=\"M %.2f %.2f L %.2f %.2f\" stroke=\"firebrick\"/>\n", x1, y1, x2, y2);
    svg += buf;
  }
  for (int v = 0; v < n; ++v) {
    auto [x, y] = outer_pos(v);
    std::snprintf(buf, sizeof buf, "  <rect x=\"%.2f\" y=\"%.2f\" width=\"5\" height=\"5\"/>\n",
                  x - 2.5, y - 2.5);
    svg += buf;
    const double lx = cx + 1.09 * (x - cx);
    const double ly = cy + 1.09 * (y - cy);
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
                  "dominant-baseline=\"middle\">%c</text>\n",
                  lx, ly, d.outer.letters[static_cast<std::size_t>(v)].to_char());
    svg += buf;
  }
  for (std::size_t i = 0; i < d.inner.size(); ++i) {
    auto [x, y] = inner_pos(inner_mate[i]);
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"14\" fill=\"white\" stroke=\"navy\"/>\n",
                  x, y);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
                  "dominant-baseline=\"middle\">%c</text>\n",
                  x, y, d.inner[i].to_char());
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace qp

#endif  // QP_DIAGRAM_HPP
