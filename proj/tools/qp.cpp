// qp - command-line toolkit for quasi-positivity in free groups.
//
// Exit codes: 0 quasi-positive, 1 not quasi-positive, 2 usage or parse
// error, 3 brute-force budget exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qp/diagram.hpp"
#include "qp/factorize.hpp"
#include "qp/oracle.hpp"
#include "qp/rbs.hpp"
#include "qp/recognizer.hpp"
#include "qp/word.hpp"
#include "qp/workbench.hpp"

namespace {

qp::Word parse_cli_word(const std::string& text, int rank) {
  if (rank == 0) {  // infer the smallest rank covering the letters used
    rank = 1;
    for (char c : text) {
      int idx = -1;
      if (c >= 'a' && c <= 'z') idx = c - 'a';
      if (c >= 'A' && c <= 'Z') idx = c - 'A';
      rank = std::max(rank, idx + 1);
    }
  }
  return qp::parse_word(text, rank);
}

std::string display_word(const qp::Word& w) {
  return w.empty() ? std::string("1") : qp::format_word(w);
}

void print_witness(const qp::WitnessTree& t, const std::string& indent) {
  if (t.is_leaf()) {
    std::cout << indent << "leaf " << display_word(t.word) << "\n";
    return;
  }
  std::cout << indent << "node " << display_word(t.word) << "  base=" << t.base.to_char()
            << "  neg=" << t.neg_pos << "  match=" << t.match_pos << "\n";
  print_witness(*t.left, indent + "  ");
  print_witness(*t.right, indent + "  ");
}

bool parse_k_range(const std::string& text, int& lo, int& hi) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, sep));
      hi = std::stoi(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

int run_test(const std::string& word_text, int rank, const std::string& algo, bool witness) {
  qp::Word w = parse_cli_word(word_text, rank);
  bool is_qp = false;
  if (algo == "naive" || algo == "pruned") {
    qp::Verdict v =
        qp::test_qp(w, algo == "naive" ? qp::Strategy::naive : qp::Strategy::pruned, witness);
    is_qp = v.is_qp;
    std::cout << (is_qp ? "quasi-positive" : "not quasi-positive") << "  (calls=" << v.calls
              << ")\n";
    if (witness && v.witness) print_witness(*v.witness, "");
  } else if (algo == "rbs") {
    auto r = qp::find_rbs(w);
    is_qp = r.has_value();
    std::cout << (is_qp ? "quasi-positive" : "not quasi-positive") << "\n";
    if (witness && r) {
      std::cout << "rbs " << r->to_string() << "\n";
      print_witness(*qp::rbs_to_witness(qp::free_reduce(w), *r), "");
    }
  } else if (algo == "brute") {
    auto f = qp::brute_force_qp(w);
    is_qp = f.has_value();
    std::cout << (is_qp ? "quasi-positive" : "not quasi-positive") << "\n";
    if (witness && f)
      std::cout << (f->factors.empty() ? "1" : qp::format_factorization(*f)) << "\n";
  }
  return is_qp ? 0 : 1;
}

int run_factor(const std::string& word_text, int rank, const std::string& algo) {
  qp::Word w = parse_cli_word(word_text, rank);
  std::shared_ptr<const qp::WitnessTree> witness;
  if (algo == "pruned") {
    qp::Verdict v = qp::test_qp(w, qp::Strategy::pruned, true);
    witness = v.witness;
  } else {
    auto r = qp::find_rbs(w);
    if (r) witness = qp::rbs_to_witness(qp::free_reduce(w), *r);
  }
  if (!witness) {
    std::cout << "not quasi-positive\n";
    return 1;
  }
  qp::Factorization f = qp::factor_qp(witness);
  std::cout << (f.factors.empty() ? "1" : qp::format_factorization(f)) << "\n";
  return 0;
}

int run_diagram(const std::string& word_text, int rank, const std::string& out_path) {
  qp::Word w = qp::free_reduce(parse_cli_word(word_text, rank));
  auto r = qp::find_rbs(w);
  if (!r) {
    std::cout << "not quasi-positive\n";
    return 1;
  }
  qp::CancellationDiagram d = qp::diagram_from_rbs(w, *r);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "qp: cannot write " << out_path << "\n";
    return 2;
  }
  out << qp::render_svg(d);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-positivity toolkit for free groups"};
  app.require_subcommand(1);

  std::string word_text, algo = "pruned", out_path, family_text, k_text = "1..6", csv_path;
  std::vector<std::string> algo_list;
  int rank = 0, radius = 0;
  bool witness = false, parallel = false;
  std::uint64_t budget = qp::BruteForceOptions{}.max_checks;

  auto* test_cmd = app.add_subcommand("test", "decide whether a word is quasi-positive");
  test_cmd->add_option("word", word_text, "word over a..z with A..Z the inverses")->required();
  test_cmd->add_option("--algo", algo, "naive|pruned|rbs|brute")
      ->check(CLI::IsMember({"naive", "pruned", "rbs", "brute"}));
  test_cmd->add_flag("--witness", witness, "dump the certificate");
  test_cmd->add_option("--rank", rank, "basis rank (default: inferred)");

  auto* factor_cmd = app.add_subcommand("factor", "write a word as conjugates of positive letters");
  factor_cmd->add_option("word", word_text)->required();
  factor_cmd->add_option("--algo", algo, "pruned|rbs")
      ->check(CLI::IsMember({"pruned", "rbs"}))
      ->default_val("rbs");
  factor_cmd->add_option("--rank", rank, "basis rank (default: inferred)");

  auto* diagram_cmd = app.add_subcommand("diagram", "render a cancellation diagram as SVG");
  diagram_cmd->add_option("word", word_text)->required();
  diagram_cmd->add_option("-o,--out", out_path, "output SVG file")->required();
  diagram_cmd->add_option("--rank", rank, "basis rank (default: inferred)");

  auto* bench_cmd = app.add_subcommand("bench", "run strategies over a word family");
  bench_cmd->add_option("--family", family_text, "uk|commutator|truncated")
      ->check(CLI::IsMember({"uk", "commutator", "truncated"}))
      ->required();
  bench_cmd->add_option("--k", k_text, "parameter range, e.g. 1..6")->required();
  bench_cmd->add_option("--algo", algo_list, "comma-separated strategies")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--csv", csv_path, "output CSV file")->required();
  bench_cmd->add_flag("--parallel", parallel, "run rows in parallel");
  bench_cmd->add_option("--budget", budget, "brute-force equality-check budget");

  auto* ball_cmd = app.add_subcommand("ball", "size of a ball in the free group");
  ball_cmd->add_option("--rank", rank, "basis rank")->required();
  ball_cmd->add_option("--radius", radius, "ball radius")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(test_cmd)) return run_test(word_text, rank, algo, witness);
    if (app.got_subcommand(factor_cmd)) return run_factor(word_text, rank, algo);
    if (app.got_subcommand(diagram_cmd)) return run_diagram(word_text, rank, out_path);
    if (app.got_subcommand(ball_cmd)) {
      std::cout << qp::ball_size(rank, radius) << "\n";
      return 0;
    }
    if (app.got_subcommand(bench_cmd)) {
      qp::BenchFamily family = qp::BenchFamily::uk;
      if (family_text == "commutator") family = qp::BenchFamily::commutator;
      if (family_text == "truncated") family = qp::BenchFamily::truncated;
      int k_lo = 0, k_hi = 0;
      if (!parse_k_range(k_text, k_lo, k_hi)) {
        std::cerr << "qp: bad --k range '" << k_text << "'\n";
        return 2;
      }
      std::vector<qp::BenchStrategy> strategies;
      for (const std::string& a : algo_list) {
        if (a == "naive") strategies.push_back(qp::BenchStrategy::naive);
        else if (a == "pruned") strategies.push_back(qp::BenchStrategy::pruned);
        else if (a == "rbs") strategies.push_back(qp::BenchStrategy::rbs);
        else if (a == "brute") strategies.push_back(qp::BenchStrategy::brute);
        else {
          std::cerr << "qp: unknown strategy '" << a << "'\n";
          return 2;
        }
      }
      qp::BruteForceOptions opts;
      opts.max_checks = budget;
      auto records = qp::run_bench({family}, k_lo, k_hi, strategies, parallel, opts);
      std::ofstream out(csv_path);
      if (!out) {
        std::cerr << "qp: cannot write " << csv_path << "\n";
        return 2;
      }
      qp::write_csv(records, out);
      std::cout << "wrote " << records.size() << " rows to " << csv_path << "\n";
      return 0;
    }
  } catch (const qp::BudgetExceeded& e) {
    std::cerr << "qp: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "qp: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
