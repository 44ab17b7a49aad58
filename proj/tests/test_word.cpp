#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "qp/oracle.hpp"
#include "qp/word.hpp"

using namespace qp;

TEST_CASE("parse_word reads the compact alphabet") {
  Word w = parse_word("abA", 2);
  REQUIRE(w.size() == 3);
  CHECK(w.letters[0] == Letter{0, 1});
  CHECK(w.letters[1] == Letter{1, 1});
  CHECK(w.letters[2] == Letter{0, -1});

  CHECK(parse_word("", 2).empty());
  CHECK(format_word(parse_word("babaBAbabAA", 2)) == "babaBAbabAA");
  CHECK(parse_word(" ba b\tA\n", 2) == parse_word("babA", 2));
}

TEST_CASE("parse_word rejects bad input") {
  CHECK_THROWS_AS(parse_word("abc", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a!b", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a", 27), std::invalid_argument);
  CHECK_NOTHROW(parse_word("zZ", 26));
}

TEST_CASE("formatting inverts parsing") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = testing::random_reduced_word(rng, i % 15, 3);
    CHECK(parse_word(format_word(w), 3) == w);
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(parse_word("abBA", 2)).empty());
  CHECK(format_word(free_reduce(parse_word("abAB", 2))) == "abAB");

  // the disguised product b . aba^{-1} . a^2 b^{-1} a^{-1} b a b a^{-2}
  Word prod = concat(concat(parse_word("b", 2), parse_word("abA", 2)),
                     parse_word("aaBAbabAA", 2));
  CHECK(format_word(free_reduce(prod)) == "babaBAbabAA");
}

TEST_CASE("free_reduce is idempotent and parity-preserving") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    // unreduced inputs: concatenate a random word with a random conjugate
    Word a = testing::random_reduced_word(rng, i % 12);
    Word b = testing::random_reduced_word(rng, 5);
    Word w = concat(a, concat(b, inverse(b)));
    Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK((w.size() - r.size()) % 2 == 0);
  }
}

TEST_CASE("cyclic_reduce") {
  auto [v1, c1] = cyclic_reduce(parse_word("Bab", 2));
  CHECK(format_word(v1) == "b");
  CHECK(format_word(c1) == "a");

  auto [v2, c2] = cyclic_reduce(parse_word("abAB", 2));
  CHECK(v2.empty());
  CHECK(format_word(c2) == "abAB");

  auto [v3, c3] = cyclic_reduce(parse_word("AbabaBAbaba", 2));
  CHECK(v3.size() == 1);
  CHECK(2 * v3.size() + c3.size() == 11);

  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    Word w = free_reduce(testing::random_reduced_word(rng, i % 14));
    auto [v, core] = cyclic_reduce(w);
    CHECK(2 * v.size() + core.size() == w.size());
    if (!core.empty())
      CHECK_FALSE(core.letters.front() == core.letters.back().inverse());
    Word vinv = inverse(v);
    CHECK(reduced_product({&vinv, &core, &v}, 2) == w);
  }
}

TEST_CASE("conjugate uses a^b = b^-1 a b") {
  CHECK(format_word(conjugate(parse_word("b", 2), parse_word("A", 2))) == "abA");
  CHECK(format_word(conjugate(parse_word("b", 2), parse_word("", 2))) == "b");
  CHECK(format_word(conjugate(parse_word("b", 2), parse_word("aa", 2))) == "AAbaa");
}

TEST_CASE("abelianize") {
  CHECK(abelianize(parse_word("babaBAbabAA", 2)) == AbelianImage{0, 3});
  CHECK(abelianize(parse_word("ababAbaB", 2)) == AbelianImage{2, 2});
  CHECK(abelianize(parse_word("", 2)) == AbelianImage{0, 0});
  CHECK(abelianize(parse_word("ABabb", 2)) == AbelianImage{0, 1});
}

TEST_CASE("abelianization is a conjugation-invariant homomorphism") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    Word u = testing::random_reduced_word(rng, i % 10);
    Word v = testing::random_reduced_word(rng, (i + 3) % 10);
    AbelianImage uv = abelianize(free_reduce(concat(u, v)));
    AbelianImage sum = abelianize(u);
    AbelianImage tv = abelianize(v);
    for (std::size_t g = 0; g < sum.size(); ++g) sum[g] += tv[g];
    CHECK(uv == sum);
    CHECK(abelianize(conjugate(u, v)) == abelianize(u));
  }
}

TEST_CASE("find_cyclic_conjugator returns a conjugator onto the core") {
  // (ba)^b = b^-1 . ba . b = ab
  auto u = find_cyclic_conjugator(parse_word("ab", 2), parse_word("ba", 2));
  REQUIRE(u.has_value());
  CHECK(format_word(*u) == "b");
  CHECK(conjugate(parse_word("ba", 2), *u) == parse_word("ab", 2));

  auto u0 = find_cyclic_conjugator(parse_word("ab", 2), parse_word("ab", 2));
  REQUIRE(u0.has_value());
  CHECK(u0->empty());

  CHECK_FALSE(find_cyclic_conjugator(parse_word("ab", 2), parse_word("bb", 2)).has_value());
  CHECK_FALSE(find_cyclic_conjugator(parse_word("ab", 2), parse_word("abab", 2)).has_value());

  // the cycling step of the running example: source = b^-1 w_L b w_R
  Word target = parse_word("babaBAbabAA", 2);
  Word wl = parse_word("Aba", 2);
  Word wr = free_reduce(concat(parse_word("AAbaa", 2), parse_word("Aba", 2)));
  Word binv = parse_word("B", 2), b = parse_word("b", 2);
  Word source = reduced_product({&binv, &wl, &b, &wr}, 2);
  auto uc = find_cyclic_conjugator(cyclic_reduce(target).core, source);
  REQUIRE(uc.has_value());
  CHECK(conjugate(source, *uc) == target);
}

TEST_CASE("find_cyclic_conjugator succeeds exactly on cyclic conjugates") {
  std::mt19937 rng(19);
  for (int i = 0; i < 400; ++i) {
    Word core = cyclic_reduce(testing::random_reduced_word(rng, 1 + i % 8)).core;
    if (core.empty()) continue;
    Word z = testing::random_reduced_word(rng, i % 9);

    Word zz = free_reduce(z);
    Word zcore = cyclic_reduce(zz).core;
    std::vector<Letter> doubled = core.letters;
    doubled.insert(doubled.end(), core.letters.begin(), core.letters.end());
    bool is_rotation =
        zcore.size() == core.size() &&
        std::search(doubled.begin(), doubled.end(), zcore.letters.begin(), zcore.letters.end()) !=
            doubled.end();

    auto u = find_cyclic_conjugator(core, z);
    CHECK(u.has_value() == is_rotation);
    if (u) CHECK(conjugate(z, *u) == core);
  }
}

TEST_CASE("least_rotation matches the minimum over all rotations") {
  for (const Word& w : enumerate_ball(2, 6)) {
    Word best = w;
    for (std::size_t s = 1; s < w.size(); ++s) {
      Word r = rotated_left(w, s);
      if (std::lexicographical_compare(r.letters.begin(), r.letters.end(), best.letters.begin(),
                                       best.letters.end(),
                                       [](const Letter& a, const Letter& b) { return a < b; }))
        best = r;
    }
    CHECK(least_rotation(w) == best);
  }
}
