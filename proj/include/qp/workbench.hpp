#ifndef QP_WORKBENCH_HPP
#define QP_WORKBENCH_HPP

#include <boost/rational.hpp>

#include <chrono>
#include <cstdint>
#include <future>
#include <ostream>
#include <string>
#include <vector>

#include "qp/oracle.hpp"
#include "qp/rbs.hpp"
#include "qp/recognizer.hpp"
#include "qp/word.hpp"

// Reference word families, the worst-case runtime model of the recursive
// recognizer, and a benchmark harness contrasting the strategies by
// deterministic operation counts.

namespace qp {

using Rational = boost::rational<long long>;

struct RuntimeModel {
  Rational C{1};  // recurrence constant, > 0
};

// Closed form of f(n+1) - f(n) - 2 f(n-1) = C with f(0) = 0, f(1) = C:
// f(n) = (2C/3) 2^n - (C/6)(-1)^n - C/2.
inline Rational predicted_runtime(int n, const RuntimeModel& m) {
  if (n < 0 || n > 61) throw std::invalid_argument("predicted_runtime: n out of range");
  if (m.C <= Rational(0)) throw std::invalid_argument("predicted_runtime: C must be positive");
  const Rational two_n(1LL << n);
  const Rational sign(n % 2 == 0 ? 1 : -1);
  return Rational(2, 3) * m.C * two_n - m.C * sign / 6 - m.C / 2;
}

// u_k = ab [a,b]^k b^{k-1}, freely reduced, length 5k+1.
inline Word make_uk(int k) {
  if (k < 1) throw std::invalid_argument("make_uk: k must be >= 1");
  Word w = parse_word("ab", 2);
  for (int i = 0; i < k; ++i) {
    Word c = parse_word("ABab", 2);
    w.letters.insert(w.letters.end(), c.letters.begin(), c.letters.end());
  }
  for (int i = 0; i + 1 < k; ++i) w.letters.push_back(Letter{1, 1});
  return w;
}

enum class NonQpFamily {
  commutator_power,  // [a,b]^k b^j
  truncated_uk,      // ab [a,b]^k b^{k-2}
};

inline Word make_nonqp(NonQpFamily family, int k, int j = 0) {
  Word w{{}, 2};
  switch (family) {
    case NonQpFamily::commutator_power: {
      if (k < 1 || j < 0)
        throw std::invalid_argument("make_nonqp: commutator_power needs k >= 1, j >= 0");
      for (int i = 0; i < k; ++i) {
        Word c = parse_word("ABab", 2);
        w.letters.insert(w.letters.end(), c.letters.begin(), c.letters.end());
      }
      for (int i = 0; i < j; ++i) w.letters.push_back(Letter{1, 1});
      return w;
    }
    case NonQpFamily::truncated_uk: {
      if (k < 2) throw std::invalid_argument("make_nonqp: truncated_uk needs k >= 2");
      w = parse_word("ab", 2);
      for (int i = 0; i < k; ++i) {
        Word c = parse_word("ABab", 2);
        w.letters.insert(w.letters.end(), c.letters.begin(), c.letters.end());
      }
      for (int i = 0; i + 2 < k; ++i) w.letters.push_back(Letter{1, 1});
      return w;
    }
  }
  throw std::invalid_argument("make_nonqp: unknown family");
}

enum class BenchFamily { uk, commutator, truncated };
enum class BenchStrategy { naive, pruned, rbs, brute };

inline const char* to_string(BenchFamily f) {
  switch (f) {
    case BenchFamily::uk: return "uk";
    case BenchFamily::commutator: return "commutator";
    case BenchFamily::truncated: return "truncated";
  }
  return "?";
}

inline const char* to_string(BenchStrategy s) {
  switch (s) {
    case BenchStrategy::naive: return "naive";
    case BenchStrategy::pruned: return "pruned";
    case BenchStrategy::rbs: return "rbs";
    case BenchStrategy::brute: return "brute";
  }
  return "?";
}

struct BenchRecord {
  std::string family;
  int k = 0;
  int n = 0;  // word length; 5k+1 for the u_k family
  std::string strategy;
  std::uint64_t calls = 0;
  std::int64_t wall_micros = 0;
  bool verdict = false;
  bool error = false;  // oracle budget exceeded
};

inline Word bench_word(BenchFamily family, int k) {
  switch (family) {
    case BenchFamily::uk: return make_uk(k);
    case BenchFamily::commutator: return make_nonqp(NonQpFamily::commutator_power, k, k);
    case BenchFamily::truncated: return make_nonqp(NonQpFamily::truncated_uk, k);
  }
  throw std::invalid_argument("bench_word: unknown family");
}

inline BenchRecord run_bench_row(BenchFamily family, int k, BenchStrategy strategy,
                                 const BruteForceOptions& opts = {}) {
  Word w = bench_word(family, k);
  BenchRecord rec;
  rec.family = to_string(family);
  rec.k = k;
  rec.n = static_cast<int>(w.size());
  rec.strategy = to_string(strategy);

  const auto start = std::chrono::steady_clock::now();
  switch (strategy) {
    case BenchStrategy::naive:
    case BenchStrategy::pruned: {
      Verdict v = test_qp(w, strategy == BenchStrategy::naive ? Strategy::naive : Strategy::pruned);
      rec.calls = v.calls;
      rec.verdict = v.is_qp;
      break;
    }
    case BenchStrategy::rbs: {
      RbsSearchStats stats;
      rec.verdict = find_rbs(w, stats).has_value();
      rec.calls = stats.ops;
      break;
    }
    case BenchStrategy::brute: {
      BruteForceStats stats;
      try {
        rec.verdict = brute_force_qp(w, opts, stats).has_value();
      } catch (const BudgetExceeded&) {
        rec.error = true;
      }
      rec.calls = stats.checks;
      break;
    }
  }
  rec.wall_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return rec;
}

// One record per (family, k, strategy).  Rows run sequentially unless
// parallel is set; calls stays deterministic either way.
inline std::vector<BenchRecord> run_bench(const std::vector<BenchFamily>& families, int k_lo,
                                          int k_hi, const std::vector<BenchStrategy>& strategies,
                                          bool parallel = false,
                                          const BruteForceOptions& opts = {}) {
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("run_bench: bad k range");
  std::vector<BenchRecord> out;
  if (!parallel) {
    for (BenchFamily f : families)
      for (int k = k_lo; k <= k_hi; ++k)
        for (BenchStrategy s : strategies) out.push_back(run_bench_row(f, k, s, opts));
    return out;
  }
  std::vector<std::future<BenchRecord>> futures;
  for (BenchFamily f : families)
    for (int k = k_lo; k <= k_hi; ++k)
      for (BenchStrategy s : strategies)
        futures.push_back(std::async(std::launch::async,
                                     [f, k, s, opts] { return run_bench_row(f, k, s, opts); }));
  out.reserve(futures.size());
  for (auto& fut : futures) out.push_back(fut.get());
  return out;
}

// RFC 4180: CRLF line endings, header row included.
inline void write_csv(const std::vector<BenchRecord>& records, std::ostream& os) {
  os << "family,k,n,strategy,calls,wall_micros,verdict\r\n";
  for (const BenchRecord& r : records) {
    os << r.family << ',' << r.k << ',' << r.n << ',' << r.strategy << ',' << r.calls << ','
       << r.wall_micros << ',' << (r.error ? "error" : (r.verdict ? "true" : "false")) << "\r\n";
  }
}

}  // namespace qp

#endif  // QP_WORKBENCH_HPP
