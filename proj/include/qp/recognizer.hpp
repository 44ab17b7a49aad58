#ifndef QP_RECOGNIZER_HPP
#define QP_RECOGNIZER_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>

#include "qp/word.hpp"

// The recursive quasi-positivity test.  A word is quasi-positive when it
// is a product of conjugates of positive letters; the identity counts as
// quasi-positive.  The naive strategy searches good pairs of inverse
// letters on the cyclic word and recurses on both subwords.  The pruned
// strategy additionally cyclically reduces every call's input, rejects as
// soon as some exponent sum goes negative, and memoizes verdicts by the
// canonical rotation of the cyclic reduction.

namespace qp {

// Certificate of quasi-positivity.  A leaf holds a positive (or empty)
// word.  An interior node holds a word together with a good pair: the
// negative letter at neg_pos and the matching positive letter at
// match_pos in the doubled word.  Rotating the word so the negative
// letter leads yields base^{-1} . left.word . base . right.word.
struct WitnessTree {
  Word word;
  Letter base{};
  std::size_t neg_pos = 0;
  std::size_t match_pos = 0;
  std::shared_ptr<const WitnessTree> left;
  std::shared_ptr<const WitnessTree> right;

  bool is_leaf() const { return left == nullptr; }

  static std::shared_ptr<const WitnessTree> make_leaf(Word w) {
    auto t = std::make_shared<WitnessTree>();
    t->word = std::move(w);
    return t;
  }

  static std::shared_ptr<const WitnessTree> make_node(Word w, Letter base, std::size_t neg_pos,
                                                      std::size_t match_pos,
                                                      std::shared_ptr<const WitnessTree> left,
                                                      std::shared_ptr<const WitnessTree> right) {
    auto t = std::make_shared<WitnessTree>();
    t->word = std::move(w);
    t->base = base;
    t->neg_pos = neg_pos;
    t->match_pos = match_pos;
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
  }
};

enum class Strategy { naive, pruned };

struct Verdict {
  bool is_qp = false;
  std::shared_ptr<const WitnessTree> witness;  // present iff is_qp and recording was requested
  std::uint64_t calls = 0;                     // recursive procedure entries, leaves included
};

namespace detail {

// Splits the cyclic word at the inverse pair (i, i+j), no validation.
inline void split_raw(const Word& w, std::size_t i, std::size_t j, Word& left, Word& right) {
  const std::size_t n = w.size();
  left.rank = w.rank;
  right.rank = w.rank;
  left.letters.clear();
  right.letters.clear();
  left.letters.reserve(j - 1);
  right.letters.reserve(n - j - 1);
  for (std::size_t t = 1; t < j; ++t) left.letters.push_back(w.letters[(i + t) % n]);
  for (std::size_t t = j + 1; t < n; ++t) right.letters.push_back(w.letters[(i + t) % n]);
}

inline bool test_naive(const Word& w, std::uint64_t& calls,
                       std::shared_ptr<const WitnessTree>* out) {
  ++calls;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n && w.letters[i].positive()) ++i;
  if (i == n) {
    if (out) *out = WitnessTree::make_leaf(w);
    return true;
  }
  const Letter neg = w.letters[i];
  const Letter pos = neg.inverse();
  Word left, right;
  for (std::size_t j = 1; j < n; ++j) {
    if (!(w.letters[(i + j) % n] == pos)) continue;
    split_raw(w, i, j, left, right);
    std::shared_ptr<const WitnessTree> lt, rt;
    if (test_naive(left, calls, out ? &lt : nullptr) &&
        test_naive(right, calls, out ? &rt : nullptr)) {
      if (out)
        *out = WitnessTree::make_node(w, pos, i, i + j, std::move(lt), std::move(rt));
      return true;
    }
  }
  return false;
}

inline bool theta_nonnegative(const Word& w) {
  AbelianImage theta = abelianize(w);
  for (int c : theta)
    if (c < 0) return false;
  return true;
}

inline bool test_pruned(const Word& input, std::uint64_t& calls,
                        std::unordered_map<std::string, bool>& memo) {
  ++calls;
  Word w = cyclic_reduce(free_reduce(input)).core;
  std::string key = format_word(least_rotation(w));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (!theta_nonnegative(w)) {
    memo.emplace(std::move(key), false);
    return false;
  }
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n && w.letters[i].positive()) ++i;
  if (i == n) {
    memo.emplace(std::move(key), true);
    return true;
  }
  const Letter pos = w.letters[i].inverse();
  bool found = false;
  Word left, right;
  for (std::size_t j = 1; j < n && !found; ++j) {
    if (!(w.letters[(i + j) % n] == pos)) continue;
    split_raw(w, i, j, left, right);
    found = test_pruned(left, calls, memo) && test_pruned(right, calls, memo);
  }
  memo.emplace(std::move(key), found);
  return found;
}

// Witness-recording variant of the pruned strategy.  Node words must keep
// their group value for the factorizer, so inputs are only freely reduced
// here; verdicts and trees are cached per exact word.
struct PrunedWitnessEntry {
  bool qp = false;
  std::shared_ptr<const WitnessTree> tree;
};

inline bool test_pruned_witness(const Word& input, std::uint64_t& calls,
                                std::unordered_map<std::string, PrunedWitnessEntry>& memo,
                                std::shared_ptr<const WitnessTree>* out) {
  ++calls;
  Word w = free_reduce(input);
  std::string key = format_word(w);
  if (auto it = memo.find(key); it != memo.end()) {
    if (out) *out = it->second.tree;
    return it->second.qp;
  }
  if (!theta_nonnegative(w)) {
    memo.emplace(std::move(key), PrunedWitnessEntry{false, nullptr});
    return false;
  }
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n && w.letters[i].positive()) ++i;
  if (i == n) {
    auto leaf = WitnessTree::make_leaf(w);
    if (out) *out = leaf;
    memo.emplace(std::move(key), PrunedWitnessEntry{true, std::move(leaf)});
    return true;
  }
  const Letter pos = w.letters[i].inverse();
  Word left, right;
  for (std::size_t j = 1; j < n; ++j) {
    if (!(w.letters[(i + j) % n] == pos)) continue;
    split_raw(w, i, j, left, right);
    std::shared_ptr<const WitnessTree> lt, rt;
    if (test_pruned_witness(left, calls, memo, &lt) &&
        test_pruned_witness(right, calls, memo, &rt)) {
      auto node = WitnessTree::make_node(w, pos, i, i + j, std::move(lt), std::move(rt));
      if (out) *out = node;
      memo.emplace(std::move(key), PrunedWitnessEntry{true, std::move(node)});
      return true;
    }
  }
  memo.emplace(std::move(key), PrunedWitnessEntry{false, nullptr});
  return false;
}

}  // namespace detail

// Splits the cyclic word w at the good-pair candidate (i, i+j): the
// negative letter sits at index i (0-based) and its inverse at offset j,
// 1 <= j <= |w|-1, in the doubled word.  Returns the subword strictly
// between the pair and the wrapping subword; lengths add up to |w| - 2.
inline std::pair<Word, Word> split_at_pair(const Word& w, std::size_t i, std::size_t j) {
  const std::size_t n = w.size();
  if (i >= n || j < 1 || j > n - 1)
    throw std::out_of_range("split_at_pair: index out of range");
  if (w.letters[i].positive())
    throw std::invalid_argument("split_at_pair: letter at i is not negative");
  if (!(w.letters[(i + j) % n] == w.letters[i].inverse()))
    throw std::invalid_argument("split_at_pair: letters do not form an inverse pair");
  std::pair<Word, Word> out;
  detail::split_raw(w, i, j, out.first, out.second);
  return out;
}

inline Verdict test_qp(const Word& input, Strategy strategy, bool record_witness = false) {
  Verdict v;
  Word w = free_reduce(input);
  std::shared_ptr<const WitnessTree> tree;
  switch (strategy) {
    case Strategy::naive:
      v.is_qp = detail::test_naive(w, v.calls, record_witness ? &tree : nullptr);
      break;
    case Strategy::pruned:
      if (record_witness) {
        std::unordered_map<std::string, detail::PrunedWitnessEntry> memo;
        v.is_qp = detail::test_pruned_witness(w, v.calls, memo, &tree);
      } else {
        std::unordered_map<std::string, bool> memo;
        v.is_qp = detail::test_pruned(w, v.calls, memo);
      }
      break;
  }
  if (record_witness && v.is_qp) v.witness = std::move(tree);
  return v;
}

}  // namespace qp

#endif  // QP_RECOGNIZER_HPP
