#ifndef QP_TESTS_HELPERS_HPP
#define QP_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "qp/factorize.hpp"
#include "qp/oracle.hpp"
#include "qp/word.hpp"

namespace qp::testing {

// Uniformly random freely reduced word of the given length.
inline Word random_reduced_word(std::mt19937& rng, int length, int rank = 2) {
  Word w{{}, rank};
  for (int p = 0; p < length; ++p) {
    std::vector<Letter> options;
    for (int g = 0; g < rank; ++g) {
      for (int s : {1, -1}) {
        Letter l{static_cast<std::int8_t>(g), static_cast<std::int8_t>(s)};
        if (!w.empty() && w.letters.back() == l.inverse()) continue;
        options.push_back(l);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    w.letters.push_back(options[pick(rng)]);
  }
  return w;
}

// Random quasi-positive word built as a product of conjugates of positive
// letters.
inline Word random_qp_word(std::mt19937& rng, int max_factors, int max_conjugator, int rank = 2) {
  std::uniform_int_distribution<int> nfac(0, max_factors);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> clen(0, max_conjugator);
  Factorization f;
  f.rank = rank;
  const int k = nfac(rng);
  for (int i = 0; i < k; ++i)
    f.factors.push_back(
        {positive_letter(gen(rng)), random_reduced_word(rng, clen(rng), rank)});
  return factorization_value(f);
}

}  // namespace qp::testing

#endif  // QP_TESTS_HELPERS_HPP
