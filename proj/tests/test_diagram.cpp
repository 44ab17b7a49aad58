#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "helpers.hpp"
#include "qp/diagram.hpp"
#include "qp/oracle.hpp"
#include "qp/rbs.hpp"
#include "qp/recognizer.hpp"
#include "qp/workbench.hpp"

using namespace qp;

namespace {

std::size_t count_substr(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

long long theta_sum(const Word& w) {
  long long sum = 0;
  for (int c : abelianize(w)) sum += c;
  return sum;
}

// Removes an outer-to-outer chord, producing the diagrams of the two
// subwords it separates.
std::pair<CancellationDiagram, CancellationDiagram> cut_at_chord(const CancellationDiagram& d,
                                                                 int p, int q) {
  const int n = static_cast<int>(d.outer.size());
  auto build = [&](int from, int to) {  // positions from..to-1 cyclically
    CancellationDiagram sub;
    sub.outer.rank = d.outer.rank;
    std::vector<int> index_of(static_cast<std::size_t>(n), -1);
    for (int v = from; v % n != to % n; ++v) {
      index_of[static_cast<std::size_t>(v % n)] = static_cast<int>(sub.outer.letters.size());
      sub.outer.letters.push_back(d.outer.letters[static_cast<std::size_t>(v % n)]);
    }
    const int m = static_cast<int>(sub.outer.size());
    for (auto [u, v] : d.arcs) {
      const int lo = std::min(u, v), hi = std::max(u, v);
      if (lo >= n || index_of[static_cast<std::size_t>(lo)] == -1) continue;
      if (hi < n) {
        if (index_of[static_cast<std::size_t>(hi)] == -1) continue;
        sub.arcs.emplace_back(index_of[static_cast<std::size_t>(lo)],
                              index_of[static_cast<std::size_t>(hi)]);
      } else {
        sub.arcs.emplace_back(index_of[static_cast<std::size_t>(lo)],
                              m + static_cast<int>(sub.inner.size()));
        sub.inner.push_back(d.inner[static_cast<std::size_t>(hi - n)]);
      }
    }
    return sub;
  };
  return {build(p + 1, q), build(q + 1, p + n)};
}

}  // namespace

TEST_CASE("diagram_from_rbs structure") {
  Word a = parse_word("a", 2);
  CancellationDiagram da = diagram_from_rbs(a, RBS::from_string("*"));
  CHECK(da.outer_size() == 1);
  REQUIRE(da.inner.size() == 1);
  CHECK(da.inner[0] == Letter{0, -1});
  CHECK(da.arcs.size() == 1);
  CHECK(validate_diagram(da));

  Word bab = parse_word("Bab", 2);
  CancellationDiagram db = diagram_from_rbs(bab, RBS::from_string("[*]"));
  REQUIRE(db.inner.size() == 1);
  CHECK(db.inner[0] == Letter{0, -1});
  CHECK(validate_diagram(db));
  bool has_chord = false;
  for (auto [u, v] : db.arcs) has_chord = has_chord || (u == 0 && v == 2);
  CHECK(has_chord);

  Word w = parse_word("babaBAbabAA", 2);
  auto r = find_rbs(w);
  REQUIRE(r.has_value());
  CancellationDiagram dw = diagram_from_rbs(w, *r);
  CHECK(dw.outer_size() == 11);
  REQUIRE(dw.inner.size() == 3);
  for (const Letter& l : dw.inner) CHECK(l == Letter{1, -1});
  CHECK(dw.arcs.size() == 7);
  CHECK(validate_diagram(dw));

  CHECK_THROWS_AS(diagram_from_rbs(parse_word("bab", 2), RBS::from_string("[*]")),
                  std::invalid_argument);
}

TEST_CASE("diagram_from_witness structure") {
  CancellationDiagram dl = diagram_from_witness(WitnessTree::make_leaf(parse_word("ab", 2)));
  CHECK(dl.inner.size() == 2);
  CHECK(dl.arcs.size() == 2);
  CHECK(validate_diagram(dl));

  Verdict bab = test_qp(parse_word("Bab", 2), Strategy::naive, true);
  CancellationDiagram db = diagram_from_witness(bab.witness);
  CHECK(db.inner.size() == 1);
  CHECK(db.arcs.size() == 2);
  CHECK(validate_diagram(db));

  Verdict v = test_qp(parse_word("babaBAbabAA", 2), Strategy::naive, true);
  CancellationDiagram dw = diagram_from_witness(v.witness);
  REQUIRE(dw.inner.size() == 3);
  for (const Letter& l : dw.inner) CHECK(l == Letter{1, -1});
  CHECK(validate_diagram(dw));
}

TEST_CASE("validate_diagram rejects broken diagrams") {
  // arc joining two a-labelled vertices
  CancellationDiagram bad1;
  bad1.outer = parse_word("aA", 2);
  bad1.arcs = {{0, 1}};
  CHECK(validate_diagram(bad1));
  bad1.outer = parse_word("aa", 2);
  CHECK_FALSE(validate_diagram(bad1));

  // crossing chords on a 4-vertex boundary
  CancellationDiagram bad2;
  bad2.outer = parse_word("abAB", 2);
  bad2.arcs = {{0, 2}, {1, 3}};
  CHECK_FALSE(validate_diagram(bad2));
  // the nested matching on the same word is fine
  CancellationDiagram good;
  good.outer = parse_word("aBbA", 2);
  good.arcs = {{0, 3}, {1, 2}};
  CHECK(validate_diagram(good));

  // vertex left unmatched
  CancellationDiagram bad3;
  bad3.outer = parse_word("ab", 2);
  bad3.inner = {Letter{0, -1}, Letter{1, -1}};
  bad3.arcs = {{0, 2}, {1, 2}};
  CHECK_FALSE(validate_diagram(bad3));

  // inner circle count disagrees with the exponent sums
  CancellationDiagram bad4;
  bad4.outer = parse_word("ab", 2);
  bad4.inner = {Letter{0, -1}};
  bad4.arcs = {{0, 2}};
  CHECK_FALSE(validate_diagram(bad4));
}

TEST_CASE("read_factorization goldens") {
  CancellationDiagram da = diagram_from_rbs(parse_word("a", 2), RBS::from_string("*"));
  CHECK(format_factorization(read_factorization(da)) == "a");

  CancellationDiagram db = diagram_from_rbs(parse_word("Bab", 2), RBS::from_string("[*]"));
  CHECK(format_factorization(read_factorization(db)) == "a^(b)");

  // reading the witness diagram of the running example recovers the
  // textbook product b . b^(A) . b^(abAA)
  Word w = parse_word("babaBAbabAA", 2);
  Verdict v = test_qp(w, Strategy::naive, true);
  Factorization f = read_factorization(diagram_from_witness(v.witness));
  CHECK(format_factorization(f) == "b * b^(A) * b^(abAA)");
  CHECK(verify_factorization(w, f));
}

TEST_CASE("reading the u_2 diagram") {
  Word u2 = make_uk(2);
  auto r = find_rbs(u2);
  REQUIRE(r.has_value());
  Factorization f = read_factorization(diagram_from_rbs(u2, *r));
  CHECK(f.size() == 3);
  std::vector<int> counts(2, 0);
  for (const Factor& fac : f.factors) ++counts[static_cast<std::size_t>(fac.base.generator)];
  CHECK(counts == std::vector<int>{1, 2});
  CHECK(verify_factorization(u2, f));
}

TEST_CASE("diagram reading satisfies the conjugator length bound") {
  for (const Word& w : enumerate_ball(2, 8)) {
    Verdict v = test_qp(w, Strategy::naive, true);
    if (!v.is_qp) continue;
    Factorization f = read_factorization(diagram_from_witness(v.witness));
    REQUIRE(verify_factorization(w, f));
    for (const Factor& fac : f.factors)
      CHECK(2 * fac.conjugator.size() <= w.size() - f.size());
  }
}

TEST_CASE("cutting a chord yields two valid diagrams") {
  for (const Word& w : enumerate_ball(2, 7)) {
    auto r = find_rbs(w);
    if (!r) continue;
    CancellationDiagram d = diagram_from_rbs(w, *r);
    const int n = static_cast<int>(w.size());
    for (auto [u, v] : d.arcs) {
      if (u >= n || v >= n) continue;
      auto [left, right] = cut_at_chord(d, std::min(u, v), std::max(u, v));
      CHECK(validate_diagram(left));
      CHECK(validate_diagram(right));
    }
  }
}

TEST_CASE("render_svg element counts") {
  CancellationDiagram da = diagram_from_rbs(parse_word("a", 2), RBS::from_string("*"));
  std::string sa = render_svg(da);
  CHECK(count_substr(sa, "<circle") == 2);
  CHECK(count_substr(sa, "<path") == 1);
  CHECK(count_substr(sa, "<rect") == 1);

  CancellationDiagram db = diagram_from_rbs(parse_word("Bab", 2), RBS::from_string("[*]"));
  std::string sb = render_svg(db);
  CHECK(count_substr(sb, "<circle") == 2);
  CHECK(count_substr(sb, "<rect") == 3);
  CHECK(count_substr(sb, "<path") == 2);

  Verdict v = test_qp(parse_word("babaBAbabAA", 2), Strategy::naive, true);
  std::string sw = render_svg(diagram_from_witness(v.witness));
  CHECK(count_substr(sw, "<circle") == 4);
  CHECK(count_substr(sw, "<path") == 7);
  CHECK(sw.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);

  // deterministic output
  CHECK(render_svg(diagram_from_witness(v.witness)) == sw);
}

TEST_CASE("arc count equals (|w| + sum theta)/2") {
  for (const Word& w : enumerate_ball(2, 7)) {
    auto r = find_rbs(w);
    if (!r) continue;
    CancellationDiagram d = diagram_from_rbs(w, *r);
    CHECK(2 * d.arcs.size() == w.size() + static_cast<std::size_t>(theta_sum(w)));
  }
}
