#ifndef QP_ORACLE_HPP
#define QP_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qp/factorize.hpp"
#include "qp/word.hpp"

// Brute-force quasi-positivity decision over bounded conjugators.  The
// exponent sums fix the base-letter multiset; every conjugator of a
// factorization read off a cancellation diagram has length at most
// (|w| - k)/2, so searching the ball of that radius is exhaustive.  This
// is the ground-truth oracle for the other recognizers; it does not scale.

namespace qp {

// Number of freely reduced words of length <= radius.
inline long long ball_size(int rank, int radius) {
  if (rank < 1) throw std::invalid_argument("ball_size: rank must be >= 1");
  long long total = 1;
  long long layer = 2LL * rank;
  for (int l = 1; l <= radius; ++l) {
    total += layer;
    layer *= 2LL * rank - 1;
  }
  return total;
}

// All freely reduced words of length <= radius, once each, in
// length-then-lexicographic order (positive letters before inverses).
inline std::vector<Word> enumerate_ball(int rank, int radius) {
  if (rank < 1) throw std::invalid_argument("enumerate_ball: rank must be >= 1");
  std::vector<Letter> alphabet;
  for (int g = 0; g < rank; ++g) alphabet.push_back(Letter{static_cast<std::int8_t>(g), 1});
  for (int g = 0; g < rank; ++g) alphabet.push_back(Letter{static_cast<std::int8_t>(g), -1});

  std::vector<Word> out;
  out.push_back(Word{{}, rank});
  std::size_t layer_begin = 0;
  for (int l = 1; l <= radius; ++l) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const Letter& a : alphabet) {
        if (!out[i].empty() && out[i].letters.back() == a.inverse()) continue;
        Word next = out[i];
        next.letters.push_back(a);
        out.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

struct BruteForceOptions {
  std::uint64_t max_checks = 100'000'000;  // equality tests before giving up
};

struct BruteForceStats {
  std::uint64_t checks = 0;
};

// Raised when the search exceeds its budget; distinct from a negative
// verdict, which is reported as nullopt.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

class BruteForceSearch {
 public:
  BruteForceSearch(const Word& w, const std::vector<int>& bases, const std::vector<Word>& ball,
                   const BruteForceOptions& opts, BruteForceStats& stats)
      : w_(w), bases_(bases), ball_(ball), opts_(opts), stats_(stats) {
    const auto k = bases.size();
    choice_.assign(k, 0);
    partial_.assign(k + 1, Word{{}, w.rank});
    max_factor_len_ = ball.empty() ? 1 : 2 * ball.back().size() + 1;
    conjugated_.assign(static_cast<std::size_t>(w.rank), {});
    for (int g : bases) {
      auto& cache = conjugated_[static_cast<std::size_t>(g)];
      if (!cache.empty()) continue;
      cache.reserve(ball.size());
      Word base = single_letter_word(positive_letter(g), w.rank);
      for (const Word& c : ball_) cache.push_back(conjugate(base, c));
    }
  }

  bool run() { return descend(0); }

  Factorization found() const {
    Factorization f;
    f.rank = w_.rank;
    for (std::size_t d = 0; d < bases_.size(); ++d)
      f.factors.push_back({positive_letter(bases_[d]), ball_[choice_[d]]});
    return f;
  }

 private:
  bool descend(std::size_t depth) {
    const std::size_t k = bases_.size();
    const auto& cache = conjugated_[static_cast<std::size_t>(bases_[depth])];
    const std::size_t slack = (k - depth - 1) * max_factor_len_;
    for (std::size_t idx = 0; idx < ball_.size(); ++idx) {
      Word& next = partial_[depth + 1];
      next = partial_[depth];
      reduce_append(next.letters, cache[idx].letters);
      // the remaining factors cannot shrink the product below this
      if (next.size() > w_.size() + slack) continue;
      if (depth + 1 == k) {
        if (++stats_.checks > opts_.max_checks)
          throw BudgetExceeded("brute_force_qp: candidate budget exceeded");
        if (next.letters == w_.letters) {
          choice_[depth] = idx;
          return true;
        }
      } else if (descend(depth + 1)) {
        choice_[depth] = idx;
        return true;
      }
    }
    return false;
  }

  const Word& w_;
  const std::vector<int>& bases_;
  const std::vector<Word>& ball_;
  const BruteForceOptions& opts_;
  BruteForceStats& stats_;
  std::vector<std::size_t> choice_;
  std::vector<Word> partial_;
  std::size_t max_factor_len_;
  std::vector<std::vector<Word>> conjugated_;
};

}  // namespace detail

inline std::optional<Factorization> brute_force_qp(const Word& input, const BruteForceOptions& opts,
                                                   BruteForceStats& stats) {
  Word w = free_reduce(input);
  AbelianImage theta = abelianize(w);
  long long k = 0;
  for (int c : theta) {
    if (c < 0) return std::nullopt;
    k += c;
  }
  if (k == 0) {
    if (w.empty()) return Factorization{w.rank, {}};
    return std::nullopt;
  }

  const int radius = static_cast<int>((static_cast<long long>(w.size()) - k) / 2);
  std::vector<Word> ball = enumerate_ball(w.rank, radius);

  // base orderings: all distinct multiset permutations, lexicographic
  std::vector<int> bases;
  for (int g = 0; g < w.rank; ++g)
    for (int c = 0; c < theta[static_cast<std::size_t>(g)]; ++c) bases.push_back(g);

  do {
    detail::BruteForceSearch search(w, bases, ball, opts, stats);
    if (search.run()) return search.found();
  } while (std::next_permutation(bases.begin(), bases.end()));
  return std::nullopt;
}

inline std::optional<Factorization> brute_force_qp(const Word& input,
                                                   const BruteForceOptions& opts = {}) {
  BruteForceStats stats;
  return brute_force_qp(input, opts, stats);
}

}  // namespace qp

#endif  // QP_ORACLE_HPP
