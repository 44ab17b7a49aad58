#ifndef QP_RBS_HPP
#define QP_RBS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qp/recognizer.hpp"
#include "qp/word.hpp"

// Regular bracket structures: well-nested words over { [, *, ] }.  An RBS
// agrees with a word when stars sit on positive letters and matching
// brackets sit on inverse letters; a word is quasi-positive exactly when
// some RBS agrees with it.  find_rbs searches for an agreeing RBS by
// interval dynamic programming: an interval is recognizable iff it is
// empty, or its first letter is positive and the rest is recognizable, or
// its first letter pairs with a later inverse letter splitting it into
// two recognizable intervals.

namespace qp {

inline bool is_rbs(std::string_view symbols) {
  int depth = 0;
  for (char c : symbols) {
    if (c == '[') {
      ++depth;
    } else if (c == ']') {
      if (--depth < 0) return false;
    } else if (c != '*') {
      return false;
    }
  }
  return depth == 0;
}

struct RBS {
  std::string symbols;        // over the alphabet [ * ]
  std::vector<int> matching;  // bracket partner per position, -1 at stars

  std::size_t size() const { return symbols.size(); }
  const std::string& to_string() const { return symbols; }

  static RBS from_string(std::string_view symbols) {
    if (!is_rbs(symbols))
      throw std::invalid_argument("RBS::from_string: not a regular bracket structure: " +
                                  std::string(symbols));
    RBS r;
    r.symbols.assign(symbols);
    r.matching.assign(symbols.size(), -1);
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(symbols.size()); ++i) {
      if (symbols[static_cast<std::size_t>(i)] == '[') {
        stack.push_back(i);
      } else if (symbols[static_cast<std::size_t>(i)] == ']') {
        int open = stack.back();
        stack.pop_back();
        r.matching[static_cast<std::size_t>(open)] = i;
        r.matching[static_cast<std::size_t>(i)] = open;
      }
    }
    return r;
  }

  friend bool operator==(const RBS& a, const RBS& b) { return a.symbols == b.symbols; }
};

inline bool agrees(const RBS& r, const Word& w) {
  if (r.size() != w.size()) throw std::invalid_argument("agrees: length mismatch");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.symbols[i] == '*') {
      if (!w.letters[i].positive()) return false;
    } else if (r.symbols[i] == '[') {
      const auto j = static_cast<std::size_t>(r.matching[i]);
      if (!(w.letters[j] == w.letters[i].inverse())) return false;
    }
  }
  return true;
}

// Given an RBS agreeing with w, produces one agreeing with the rotation
// of w that moves the last letter to the front.
inline RBS rotate_rbs(const RBS& r, const Word& w) {
  if (!agrees(r, w)) throw std::invalid_argument("rotate_rbs: RBS does not agree with word");
  const std::size_t n = r.size();
  if (n == 0) return r;
  std::string out;
  out.reserve(n);
  if (r.symbols[n - 1] == '*') {
    out.push_back('*');
    out.append(r.symbols, 0, n - 1);
  } else {
    const auto open = static_cast<std::size_t>(r.matching[n - 1]);
    out.push_back('[');
    out.append(r.symbols, 0, open);
    out.push_back(']');
    out.append(r.symbols, open + 1, n - 1 - open - 1);
  }
  return RBS::from_string(out);
}

struct RbsSearchStats {
  std::uint64_t ops = 0;  // DP cell computations plus split candidates examined
};

namespace detail {

class RbsSearch {
 public:
  RbsSearch(const Word& w, RbsSearchStats& stats) : w_(w), n_(w.size()), stats_(stats) {
    state_.assign((n_ + 1) * (n_ + 1), kUnknown);
    theta_prefix_.assign((n_ + 1) * static_cast<std::size_t>(w.rank), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (int g = 0; g < w.rank; ++g)
        theta_at(i + 1, g) = theta_at(i, g);
      theta_at(i + 1, w.letters[i].generator) += w.letters[i].sign;
    }
    partner_positions_.assign(2 * static_cast<std::size_t>(w.rank), {});
    for (std::size_t i = 0; i < n_; ++i)
      partner_positions_[letter_slot(w.letters[i])].push_back(i);
  }

  bool solve(std::size_t i, std::size_t j) {
    if (i == j) return true;
    std::int8_t& s = state_[i * (n_ + 1) + j];
    if (s != kUnknown) return s == kTrue;
    ++stats_.ops;
    s = kFalse;  // guards the recursion; overwritten on success
    if (!theta_ok(i, j)) return false;
    if (w_.letters[i].positive() && solve(i + 1, j)) {
      s = kTrue;
      return true;
    }
    for (std::size_t m : candidates(i, j)) {
      ++stats_.ops;
      if (solve(i + 1, m) && solve(m + 1, j)) {
        s = kTrue;
        return true;
      }
    }
    return false;
  }

  // Rebuilds the found RBS for [i, j); prefers the star rule, then the
  // smallest matching partner.
  void rebuild(std::size_t i, std::size_t j, std::string& symbols) {
    while (i != j) {
      if (w_.letters[i].positive() && solve(i + 1, j)) {
        symbols[i] = '*';
        ++i;
        continue;
      }
      for (std::size_t m : candidates(i, j)) {
        if (solve(i + 1, m) && solve(m + 1, j)) {
          symbols[i] = '[';
          symbols[m] = ']';
          rebuild(i + 1, m, symbols);
          i = m + 1;
          break;
        }
      }
    }
  }

 private:
  static constexpr std::int8_t kUnknown = 0;
  static constexpr std::int8_t kTrue = 1;
  static constexpr std::int8_t kFalse = 2;

  static std::size_t letter_slot(const Letter& l) {
    return 2 * static_cast<std::size_t>(l.generator) + (l.positive() ? 0 : 1);
  }

  int& theta_at(std::size_t i, int g) {
    return theta_prefix_[i * static_cast<std::size_t>(w_.rank) + static_cast<std::size_t>(g)];
  }

  bool theta_ok(std::size_t i, std::size_t j) {
    for (int g = 0; g < w_.rank; ++g)
      if (theta_at(j, g) - theta_at(i, g) < 0) return false;
    return true;
  }

  // Positions m in (i, j) with w[m] the inverse of w[i].
  std::vector<std::size_t> candidates(std::size_t i, std::size_t j) const {
    const auto& all = partner_positions_[letter_slot(w_.letters[i].inverse())];
    std::vector<std::size_t> out;
    for (std::size_t m : all)
      if (m > i && m < j) out.push_back(m);
    return out;
  }

  const Word& w_;
  std::size_t n_;
  RbsSearchStats& stats_;
  std::vector<std::int8_t> state_;
  std::vector<int> theta_prefix_;
  std::vector<std::vector<std::size_t>> partner_positions_;
};

}  // namespace detail

inline std::optional<RBS> find_rbs(const Word& input, RbsSearchStats& stats) {
  Word w = free_reduce(input);
  detail::RbsSearch search(w, stats);
  if (!search.solve(0, w.size())) return std::nullopt;
  std::string symbols(w.size(), '*');
  search.rebuild(0, w.size(), symbols);
  return RBS::from_string(symbols);
}

inline std::optional<RBS> find_rbs(const Word& input) {
  RbsSearchStats stats;
  return find_rbs(input, stats);
}

namespace detail {

struct RbsSlice {
  Word word;
  std::string symbols;
};

inline std::shared_ptr<const WitnessTree> rbs_witness_rec(const Word& w,
                                                          const std::string& symbols) {
  const std::size_t n = w.size();
  std::size_t p = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (symbols[i] == '[') {
      p = i;  // first bracket is outermost: everything before it is a star
      break;
    }
  }
  if (p == n) return WitnessTree::make_leaf(w);
  RBS r = RBS::from_string(symbols);
  const auto q = static_cast<std::size_t>(r.matching[p]);

  RbsSlice inside;
  inside.word.rank = w.rank;
  inside.word.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                             w.letters.begin() + static_cast<std::ptrdiff_t>(q));
  inside.symbols = symbols.substr(p + 1, q - p - 1);

  RbsSlice wrap;  // after the pair, then before it
  wrap.word.rank = w.rank;
  wrap.word.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(q) + 1, w.letters.end());
  wrap.word.letters.insert(wrap.word.letters.end(), w.letters.begin(),
                           w.letters.begin() + static_cast<std::ptrdiff_t>(p));
  wrap.symbols = symbols.substr(q + 1);
  wrap.symbols += symbols.substr(0, p);

  auto inside_tree = rbs_witness_rec(inside.word, inside.symbols);
  auto wrap_tree = rbs_witness_rec(wrap.word, wrap.symbols);
  if (!w.letters[p].positive()) {
    return WitnessTree::make_node(w, w.letters[q], p, q, std::move(inside_tree),
                                  std::move(wrap_tree));
  }
  return WitnessTree::make_node(w, w.letters[p], q, p + n, std::move(wrap_tree),
                                std::move(inside_tree));
}

}  // namespace detail

// Converts an agreeing RBS into a witness tree whose node identities hold
// literally for w.
inline std::shared_ptr<const WitnessTree> rbs_to_witness(const Word& w, const RBS& r) {
  if (!agrees(r, w)) throw std::invalid_argument("rbs_to_witness: RBS does not agree with word");
  return detail::rbs_witness_rec(w, r.symbols);
}

}  // namespace qp

#endif  // QP_RBS_HPP
