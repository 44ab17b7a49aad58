#ifndef QP_WORD_HPP
#define QP_WORD_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Words over a free-group basis: parsing, free and cyclic reduction,
// conjugation, abelianization and cyclic-conjugacy matching.
//
// Text format: lowercase a..z are the generators x_1..x_26, uppercase
// letters are their inverses.  All values are immutable; operations
// return new words.

namespace qp {

inline constexpr int kMaxRank = 26;

struct Letter {
  std::int8_t generator = 0;  // 0-based index into the basis
  std::int8_t sign = 1;       // +1 or -1

  Letter inverse() const { return Letter{generator, static_cast<std::int8_t>(-sign)}; }
  bool positive() const { return sign > 0; }

  char to_char() const {
    return static_cast<char>((sign > 0 ? 'a' : 'A') + generator);
  }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.generator == b.generator && a.sign == b.sign;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  // (positives first, then inverses; each block by generator)
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.sign != b.sign) return a.sign > b.sign;
    return a.generator < b.generator;
  }
};

inline Letter positive_letter(int generator) {
  return Letter{static_cast<std::int8_t>(generator), 1};
}

struct Word {
  std::vector<Letter> letters;
  int rank = 2;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank == b.rank && a.letters == b.letters;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// Exponent-sum vector, one entry per generator.
using AbelianImage = std::vector<int>;

inline Word parse_word(std::string_view text, int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("parse_word: rank must be between 1 and 26");
  Word w;
  w.rank = rank;
  w.letters.reserve(text.size());
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    Letter l;
    if (c >= 'a' && c < 'a' + rank) {
      l = Letter{static_cast<std::int8_t>(c - 'a'), 1};
    } else if (c >= 'A' && c < 'A' + rank) {
      l = Letter{static_cast<std::int8_t>(c - 'A'), -1};
    } else {
      throw std::invalid_argument(std::string("parse_word: character '") + c +
                                  "' is not a letter of rank " + std::to_string(rank));
    }
    w.letters.push_back(l);
  }
  return w;
}

inline std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w.letters) s.push_back(l.to_char());
  return s;
}

inline Word concat(const Word& a, const Word& b) {
  if (a.rank != b.rank) throw std::invalid_argument("concat: rank mismatch");
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline Word inverse(const Word& w) {
  Word out;
  out.rank = w.rank;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

// Appends letters onto a reduction stack, cancelling adjacent inverse pairs.
inline void reduce_append(std::vector<Letter>& stack, const Letter& l) {
  if (!stack.empty() && stack.back() == l.inverse())
    stack.pop_back();
  else
    stack.push_back(l);
}

inline void reduce_append(std::vector<Letter>& stack, const std::vector<Letter>& ls) {
  for (const Letter& l : ls) reduce_append(stack, l);
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.rank = w.rank;
  out.letters.reserve(w.size());
  for (const Letter& l : w.letters) reduce_append(out.letters, l);
  return out;
}

// Concatenation of several words, freely reduced.
inline Word reduced_product(std::initializer_list<const Word*> parts, int rank) {
  Word out;
  out.rank = rank;
  for (const Word* p : parts) {
    if (p->rank != rank) throw std::invalid_argument("reduced_product: rank mismatch");
    reduce_append(out.letters, p->letters);
  }
  return out;
}

struct CyclicReduction {
  Word conjugator;  // v with w = v^{-1} core v and 2|v| + |core| = |w|
  Word core;        // cyclically reduced
};

// Expects w freely reduced.
inline CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator.rank = w.rank;
  out.core.rank = w.rank;
  out.conjugator.letters.assign(w.letters.begin() + hi, w.letters.end());
  out.core.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
  return out;
}

// a^b = b^{-1} a b, freely reduced.
inline Word conjugate(const Word& a, const Word& b) {
  Word binv = inverse(b);
  return reduced_product({&binv, &a, &b}, a.rank);
}

inline AbelianImage abelianize(const Word& w) {
  AbelianImage counts(static_cast<std::size_t>(w.rank), 0);
  for (const Letter& l : w.letters) counts[static_cast<std::size_t>(l.generator)] += l.sign;
  return counts;
}

inline Word rotated_left(const Word& w, std::size_t shift) {
  Word out;
  out.rank = w.rank;
  const std::size_t n = w.size();
  if (n == 0) return out;
  shift %= n;
  out.letters.reserve(n);
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(shift), w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(shift));
  return out;
}

// Booth's least-rotation algorithm; returns the shift of the
// lexicographically least rotation.
inline std::size_t least_rotation_shift(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  auto at = [&](std::size_t i) -> const Letter& { return s[i % n]; };
  std::vector<std::ptrdiff_t> failure(2 * n, -1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter& c = at(j);
    std::ptrdiff_t i = failure[j - best - 1];
    while (i != -1 && c != at(best + static_cast<std::size_t>(i) + 1)) {
      if (c < at(best + static_cast<std::size_t>(i) + 1))
        best = j - static_cast<std::size_t>(i) - 1;
      i = failure[static_cast<std::size_t>(i)];
    }
    if (i == -1 && c != at(best)) {
      if (c < at(best)) best = j;
      failure[j - best] = -1;
    } else {
      failure[j - best] = i + 1;
    }
  }
  return best % n;
}

inline Word least_rotation(const Word& w) { return rotated_left(w, least_rotation_shift(w.letters)); }

// Canonical representative of the conjugacy class of w: the least
// rotation of the cyclic reduction of the free reduction.
inline Word cyclic_canonical_form(const Word& w) {
  return least_rotation(cyclic_reduce(free_reduce(w)).core);
}

// Finds u with target_core = source^u in the group, provided the free
// and cyclic reduction z of source is a rotation of target_core.  The
// returned u composes the cyclic-reduction witness of source with the
// prefix of z realising the smallest nonnegative rotation shift.
inline std::optional<Word> find_cyclic_conjugator(const Word& target_core, const Word& source) {
  CyclicReduction cr = cyclic_reduce(free_reduce(source));
  const Word& z = cr.core;
  if (z.size() != target_core.size()) return std::nullopt;
  if (z.empty()) return free_reduce(inverse(cr.conjugator));
  std::vector<Letter> doubled = z.letters;
  doubled.insert(doubled.end(), z.letters.begin(), z.letters.end());
  auto it = std::search(doubled.begin(), doubled.end(), target_core.letters.begin(),
                        target_core.letters.end());
  if (it == doubled.end()) return std::nullopt;
  const auto shift = static_cast<std::size_t>(it - doubled.begin()) % z.size();
  Word prefix;
  prefix.rank = z.rank;
  prefix.letters.assign(z.letters.begin(), z.letters.begin() + static_cast<std::ptrdiff_t>(shift));
  Word vinv = inverse(cr.conjugator);
  return reduced_product({&vinv, &prefix}, z.rank);
}

}  // namespace qp

#endif  // QP_WORD_HPP
