#include "chordexp/cli.hpp"

#include "chordexp/analysis.hpp"
#include "chordexp/chord_series.hpp"
#include "chordexp/dse_verify.hpp"
#include "chordexp/enumerate.hpp"
#include "chordexp/json_io.hpp"
#include "chordexp/lemmas.hpp"
#include "chordexp/tree.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace chordexp {

namespace {

struct RunConfig {
  int n = 4;
  int order = 6;
  int k = 1;
  std::string method = "constructive";
  std::string format = "text";
  std::string report_path;
  std::string fvals_path;
  std::string c_bound = "1";
  bool count_only = false;
  EnumerationLimits limits;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string pairing_text(const ChordDiagram& c) {
  std::string s;
  for (int p : c.pairing()) s += (s.empty() ? "" : " ") + std::to_string(p);
  return s;
}

void write_report(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write report to " + path);
  file << j.dump(2) << '\n';
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  try {
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_range(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string("--") + name + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(value));
  }
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  require_range("n", cfg.n, 1, cfg.method == "constructive" ? cfg.limits.constructive : cfg.limits.bruteforce);
  if (cfg.method == "both") require_range("n", cfg.n, 1, cfg.limits.constructive);

  if (cfg.count_only && cfg.method == "constructive") {
    std::size_t count = 0;
    for_each_constructive(cfg.n, [&](const ChordDiagram&) { ++count; }, cfg.limits.constructive);
    if (cfg.format == "json") {
      out << Json{{"n", cfg.n}, {"method", cfg.method}, {"count", count}}.dump() << '\n';
    } else {
      out << "n=" << cfg.n << " method=" << cfg.method << " count=" << count << '\n';
    }
    return exit_ok;
  }

  std::vector<ChordDiagram> diagrams;
  bool agree = true;
  if (cfg.method == "constructive") {
    diagrams = enumerate_constructive(cfg.n, cfg.limits.constructive);
  } else if (cfg.method == "bruteforce") {
    diagrams = enumerate_bruteforce(cfg.n, cfg.limits.bruteforce);
  } else {
    diagrams = enumerate_constructive(cfg.n, cfg.limits.constructive);
    agree = diagrams == enumerate_bruteforce(cfg.n, cfg.limits.bruteforce);
  }

  if (cfg.format == "json") {
    Json j{{"n", cfg.n}, {"method", cfg.method}, {"count", diagrams.size()}};
    if (cfg.method == "both") j["sets_agree"] = agree;
    if (!cfg.count_only) {
      Json list = Json::array();
      for (const auto& c : diagrams) list.push_back(to_json(c, stats(c)));
      j["diagrams"] = list;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "n=" << cfg.n << " method=" << cfg.method << " count=" << diagrams.size();
    if (cfg.method == "both") out << " sets_agree=" << (agree ? "yes" : "no");
    out << '\n';
    if (!cfg.count_only) {
      for (const auto& c : diagrams) out << pairing_text(c) << '\t' << c.word() << '\n';
    }
  }
  return agree ? exit_ok : exit_check_failed;
}

int run_gamma(const RunConfig& cfg, std::ostream& out) {
  require_range("order", cfg.order, 1, cfg.limits.constructive);
  if (cfg.k < 1) throw UsageError("--k must be at least 1");
  const DiagramCensus census(cfg.order, cfg.limits.constructive);
  const XSeries gamma = gamma_series(cfg.k, cfg.order, census);
  Json j{{"k", cfg.k}};
  if (cfg.fvals_path.empty()) {
    const Json s = to_json(gamma);
    j["order"] = s["order"];
    j["coeffs"] = s["coeffs"];
  } else {
    const SymbolValues values = symbol_values_from_json(read_json_file(cfg.fvals_path));
    std::vector<Rational> coeffs;
    try {
      coeffs = gamma.evaluate_coefficients(values);
    } catch (const MissingSymbolError& e) {
      throw UsageError(e.what());
    }
    Json vals = Json::object();
    for (int n = 1; n <= gamma.order(); ++n) vals[std::to_string(n)] = to_string(coeffs[static_cast<std::size_t>(n)]);
    j["order"] = gamma.order();
    j["values"] = vals;
  }
  out << j.dump(2) << '\n';
  return exit_ok;
}

int run_table(const RunConfig& cfg, std::ostream& out) {
  require_range("n", cfg.n, 1, cfg.limits.constructive);
  Json records = Json::array();
  for (int n = 1; n <= cfg.n; ++n) {
    for (const auto& c : enumerate_constructive(n, cfg.limits.constructive)) {
      const LabeledTree t = to_tree(c);
      if (cfg.format == "json") {
        Json r = to_json(c);
        r["word"] = c.word();
        r["tree"] = to_json(t);
        r["tree_text"] = t.to_string();
        r["leaf_labels"] = t.leaf_labels();
        records.push_back(r);
      } else {
        out << "n=" << n << "  pairing=" << pairing_text(c) << "  word=" << c.word() << "  tree=" << t.to_string() << '\n';
      }
    }
  }
  if (cfg.format == "json") out << records.dump(2) << '\n';
  return exit_ok;
}

int summarize(const std::vector<CheckReport>& reports, const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.passed()) out << ", " << r.violations.size() << " violations";
    out << ")\n";
    for (std::size_t v = 0; v < std::min<std::size_t>(r.violations.size(), 5); ++v) {
      out << "  " << r.violations[v].where << ": " << r.violations[v].detail << '\n';
    }
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    all.push_back(to_json(r));
  }
  write_report(cfg.report_path, Json{{"passed", ok}, {"checks", all}});
  return ok ? exit_ok : exit_check_failed;
}

int run_verify(const std::string& what, const RunConfig& cfg, std::ostream& out) {
  std::vector<CheckReport> reports;
  if (what == "dse") {
    require_range("order", cfg.order, 1, cfg.limits.constructive);
    const DiagramCensus census(cfg.order, cfg.limits.constructive);
    reports.push_back(check_main_theorem(cfg.order, census));
    reports.push_back(check_full_dse(cfg.order, census));
    reports.push_back(check_f_oracle(cfg.order - 1, cfg.order - 1, census));
  } else if (what == "recurrences") {
    require_range("order", cfg.order, 2, cfg.limits.constructive);
    const DiagramCensus census(cfg.order, cfg.limits.constructive);
    reports.push_back(check_gamma_recurrence(cfg.order, census));
    reports.push_back(check_second_rec(cfg.order - 1, cfg.order - 1, census));
  } else if (what == "bijection") {
    require_range("n", cfg.n, 1, cfg.limits.constructive);
    reports.push_back(check_round_trip(cfg.n));
    reports.push_back(check_fully_right_leaf(cfg.n));
    reports.push_back(check_tree_insertion(cfg.n));
    for (int n = 1; n <= std::min(cfg.n, 6); ++n) reports.push_back(check_image_filter(n));
  } else {
    require_range("n", cfg.n, 2, cfg.limits.constructive);
    reports.push_back(check_delta_concat(cfg.n));
    reports.push_back(check_root_subtree_claims(cfg.n));
    reports.push_back(check_shuffle_counts(cfg.n));
  }
  return summarize(reports, cfg, out);
}

int run_fourterm(const RunConfig& cfg, std::ostream& out) {
  require_range("n", cfg.n, 1, cfg.limits.constructive);
  if (cfg.k < 0) throw UsageError("--alpha must be nonnegative");
  const auto quads = four_term_quads(cfg.n);
  const AlphaMap alpha = [&](const ChordDiagram&) { return cfg.k; };
  Json violations = Json::array();
  std::size_t count = 0;
  for (const auto& q : quads) {
    const FPolynomial sum = four_term_sum(q, alpha);
    if (sum.is_zero()) continue;
    if (count < 10) {
      out << q.members[0].word() << " - " << q.members[1].word() << " + " << q.members[2].word() << " - "
          << q.members[3].word() << " = " << sum.to_string() << '\n';
    }
    ++count;
    Json j = to_json(q);
    j["sum"] = to_json(sum);
    j["sum_text"] = sum.to_string();
    violations.push_back(j);
  }
  out << "n=" << cfg.n << " alpha=" << cfg.k << " configurations=" << quads.size() << " nonzero=" << count << '\n';
  write_report(cfg.report_path,
               Json{{"n", cfg.n}, {"alpha", cfg.k}, {"configurations", quads.size()}, {"nonzero", count}, {"violations", violations}});
  return exit_ok;
}

int run_gevrey(const RunConfig& cfg, std::ostream& out) {
  require_range("order", cfg.order, 1, cfg.limits.constructive);
  if (cfg.k < 1) throw UsageError("--k must be at least 1");
  const Rational c = parse_rational(cfg.c_bound);
  if (c <= 0) throw UsageError("--c must be positive");
  const DiagramCensus census(cfg.order, cfg.limits.constructive);
  const GevreyReport r = gevrey_check(c, cfg.k, cfg.order, census);
  out << "C=" << to_string(r.c_bound) << " k=" << r.k << " order=" << r.order << " K=" << r.growth << '\n';
  for (std::size_t i = 0; i < r.ratios.size(); ++i) {
    out << "n=" << i + 1 << "  |gamma|/n! = " << r.ratios[i].get_d() << "  bound " << r.bound[i].get_d() << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << " ratio bound " << (r.ratio_bound_holds ? "holds" : "fails") << ", count bound "
      << (r.count_bound_holds ? "holds" : "fails") << '\n';
  write_report(cfg.report_path, to_json(r));
  return r.passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.limits = EnumerationLimits::from_environment();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App app{"Rooted connected chord diagrams and their series expansion", "chordexp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--bruteforce-limit", cfg.limits.bruteforce, "Largest n for brute-force enumeration")->check(CLI::PositiveNumber);
  app.add_option("--constructive-limit", cfg.limits.constructive, "Largest n for constructive enumeration")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List RCCD(n)");
  enumerate->add_option("--n", cfg.n, "Chord count")->required();
  enumerate->add_option("--method", cfg.method)->check(CLI::IsMember({"constructive", "bruteforce", "both"}));
  enumerate->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  enumerate->add_flag("--count-only", cfg.count_only, "Print only the count");

  auto* gamma = app.add_subcommand("gamma", "Series gamma_k(x)");
  gamma->add_option("--k", cfg.k)->required();
  gamma->add_option("--order", cfg.order);
  gamma->add_option("--fvals", cfg.fvals_path, "JSON object of values for f_j");

  auto* table = app.add_subcommand("table", "Diagram and tree table for all sizes up to n");
  table->add_option("--n", cfg.n);
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive checks");
  verify->require_subcommand(1);
  std::string verify_kind;
  for (const char* kind : {"dse", "recurrences", "bijection", "lemmas"}) {
    auto* sub = verify->add_subcommand(kind);
    if (std::string(kind) == "dse" || std::string(kind) == "recurrences") {
      sub->add_option("--order", cfg.order);
    } else {
      sub->add_option("--n", cfg.n);
    }
    sub->add_option("--report", cfg.report_path, "Write a JSON report");
    sub->callback([&verify_kind, kind] { verify_kind = kind; });
  }

  auto* fourterm = app.add_subcommand("fourterm", "Four-term configurations under constant alpha");
  fourterm->add_option("--n", cfg.n)->required();
  fourterm->add_option("--alpha", cfg.k)->required();
  fourterm->add_option("--report", cfg.report_path);

  auto* gevrey = app.add_subcommand("gevrey", "Growth of gamma_k under f_j = C^(j+1)");
  gevrey->add_option("--c", cfg.c_bound)->required();
  gevrey->add_option("--k", cfg.k)->required();
  gevrey->add_option("--order", cfg.order);
  gevrey->add_option("--report", cfg.report_path);

  std::vector<std::string> argv_store{"chordexp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(cfg, out);
    if (gamma->parsed()) return run_gamma(cfg, out);
    if (table->parsed()) return run_table(cfg, out);
    if (verify->parsed()) return run_verify(verify_kind, cfg, out);
    if (fourterm->parsed()) return run_fourterm(cfg, out);
    if (gevrey->parsed()) return run_gevrey(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  err << app.help();
  return exit_usage;
}

}  // namespace chordexp
