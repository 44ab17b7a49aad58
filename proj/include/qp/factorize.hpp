#ifndef QP_FACTORIZE_HPP
#define QP_FACTORIZE_HPP

#include <string>
#include <vector>

#include "qp/recognizer.hpp"
#include "qp/word.hpp"

// Factorizations of quasi-positive words as products of conjugates of
// positive letters, w = x_1^{c_1} ... x_k^{c_k} with x^c = c^{-1} x c.
// factor_qp turns a witness tree into such a factorization bottom-up; at
// each node the cycling identity w = w_L^{auv} . w_R^{uv} distributes the
// conjugators, where v cyclically reduces w and u conjugates w_L^a w_R
// onto the cyclic core of w.

namespace qp {

struct Factor {
  Letter base;      // positive letter
  Word conjugator;  // stored freely reduced
};

struct Factorization {
  int rank = 2;
  std::vector<Factor> factors;

  std::size_t size() const { return factors.size(); }
};

inline Word single_letter_word(Letter l, int rank) {
  Word w;
  w.rank = rank;
  w.letters.push_back(l);
  return w;
}

// The group element the factorization denotes, freely reduced.
inline Word factorization_value(const Factorization& f) {
  Word out;
  out.rank = f.rank;
  for (const Factor& fac : f.factors) {
    for (auto it = fac.conjugator.letters.rbegin(); it != fac.conjugator.letters.rend(); ++it)
      reduce_append(out.letters, it->inverse());
    reduce_append(out.letters, fac.base);
    reduce_append(out.letters, fac.conjugator.letters);
  }
  return out;
}

// True iff the factorization denotes free_reduce(w) and its base-letter
// multiset matches the exponent sums of w coordinatewise.
inline bool verify_factorization(const Word& w, const Factorization& f) {
  if (w.rank != f.rank) return false;
  std::vector<int> bases(static_cast<std::size_t>(f.rank), 0);
  for (const Factor& fac : f.factors) {
    if (!fac.base.positive()) return false;
    ++bases[static_cast<std::size_t>(fac.base.generator)];
  }
  AbelianImage theta = abelianize(w);
  for (std::size_t g = 0; g < bases.size(); ++g)
    if (bases[g] != theta[g]) return false;
  return factorization_value(f) == free_reduce(w);
}

// Factors w given the good pair letter a and factorizations of the two
// subwords; w must be conjugate to w_L^a . w_R.
inline Factorization cycling_factor(const Word& w, Letter a, const Factorization& f_L,
                                    const Factorization& f_R) {
  const int rank = w.rank;
  CyclicReduction cr = cyclic_reduce(free_reduce(w));

  Word source;  // a^{-1} . w_L . a . w_R
  source.rank = rank;
  reduce_append(source.letters, a.inverse());
  Word left_value = factorization_value(f_L);
  reduce_append(source.letters, left_value.letters);
  reduce_append(source.letters, a);
  Word right_value = factorization_value(f_R);
  reduce_append(source.letters, right_value.letters);

  std::optional<Word> u = find_cyclic_conjugator(cr.core, source);
  if (!u)
    throw std::invalid_argument(
        "cycling_factor: word is not conjugate to w_L^a . w_R (corrupt witness)");

  Word a_word = single_letter_word(a, rank);
  Word left_exp = reduced_product({&a_word, &*u, &cr.conjugator}, rank);   // a.u.v
  Word right_exp = reduced_product({&*u, &cr.conjugator}, rank);           // u.v

  Factorization out;
  out.rank = rank;
  out.factors.reserve(f_L.size() + f_R.size());
  for (const Factor& fac : f_L.factors)
    out.factors.push_back({fac.base, reduced_product({&fac.conjugator, &left_exp}, rank)});
  for (const Factor& fac : f_R.factors)
    out.factors.push_back({fac.base, reduced_product({&fac.conjugator, &right_exp}, rank)});
  return out;
}

inline Factorization factor_qp(const WitnessTree& t) {
  Factorization out;
  out.rank = t.word.rank;
  if (t.is_leaf()) {
    out.factors.reserve(t.word.size());
    for (const Letter& l : t.word.letters) {
      if (!l.positive())
        throw std::invalid_argument("factor_qp: leaf word contains a negative letter");
      out.factors.push_back({l, Word{{}, t.word.rank}});
    }
    return out;
  }
  Factorization left = factor_qp(*t.left);
  Factorization right = factor_qp(*t.right);
  return cycling_factor(t.word, t.base, left, right);
}

inline Factorization factor_qp(const std::shared_ptr<const WitnessTree>& t) {
  if (!t) throw std::invalid_argument("factor_qp: null witness");
  return factor_qp(*t);
}

// Factors joined by " * ", each rendered x^(c), with empty conjugators
// rendered as the bare letter.
inline std::string format_factorization(const Factorization& f) {
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) out += " * ";
    out.push_back(f.factors[i].base.to_char());
    if (!f.factors[i].conjugator.empty()) {
      out += "^(";
      out += format_word(f.factors[i].conjugator);
      out += ")";
    }
  }
  return out;
}

}  // namespace qp

#endif  // QP_FACTORIZE_HPP
