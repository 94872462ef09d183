#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "invofix/binomial.hpp"
#include "invofix/charclass.hpp"
#include "invofix/error.hpp"
#include "invofix/rings.hpp"
#include "invofix/suite.hpp"

namespace {

using namespace invofix;

struct Options {
  std::string n;
  std::optional<int> m;
  unsigned p = 12;
  int q = 15;
  bool strict_paper = false;
  std::string json_path;
  std::string markdown_path;
  int jobs = 1;
  bool timings = false;
  std::optional<std::int64_t> l;
  std::optional<int> t;
};

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void print_lines(const SuiteReport& report, bool quiet) {
  if (!quiet) {
    for (const auto& r : report.checks) {
      std::string params;
      for (const auto& [k, v] : r.params) params += " " + k + "=" + to_string(v);
      std::cout << to_string(r.status) << "  " << r.id << params;
      if (r.witness) std::cout << "  [" << *r.witness << "]";
      std::cout << "\n";
    }
  }
  std::cout << summary_line(report) << "\n";
}

int run(SuiteConfig config, const Options& opt) {
  config.m = opt.m;
  config.strict_paper = opt.strict_paper;
  config.jobs = opt.jobs;
  config.timings = opt.timings;
  const SuiteReport report = run_suite(config);
  const bool json_to_stdout = opt.json_path == "-";
  if (!opt.json_path.empty()) write_file(opt.json_path, to_json(report, opt.timings));
  if (!opt.markdown_path.empty()) write_file(opt.markdown_path, to_markdown(report, opt.timings));
  if (!json_to_stdout) print_lines(report, false);
  return exit_code(report, opt.strict_paper);
}

void set_range(SuiteConfig& config, const std::string& text) {
  const auto [lo, hi] = parse_range(text);
  config.n_lo = lo;
  config.n_hi = hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for the fixed-data computations of involutions fixing F^n and a point"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  app.add_option("--m", opt.m, "ring dimension m for n-indexed checks (overrides the defaults)");
  app.add_option("--p", opt.p, "largest p for the binomial tables")->check(CLI::Range(1, 20));
  app.add_option("--q", opt.q, "largest odd q for the binomial tables")->check(CLI::Range(1, 1000));
  app.add_flag("--strict-paper", opt.strict_paper, "exit 2 on paper_mismatch");
  app.add_option("--json", opt.json_path, "write the JSON report to PATH ('-' for stdout)");
  app.add_option("--markdown", opt.markdown_path, "write the markdown report to PATH ('-' for stdout)");
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timings", opt.timings, "include elapsed_ms in reports");

  auto* m_number = app.add_subcommand("m-number", "M(n) and its closed forms");
  m_number->add_option("--n", opt.n, "N or A..B")->default_val("5..100");
  auto* tables = app.add_subcommand("tables", "parity tables for 1 <= p <= --p, odd q <= --q");
  auto* bracket = app.add_subcommand("bracket", "ring identities and the bracket closed form");
  bracket->add_option("--l", opt.l, "print W[l]_t reduced in H*(RP(mu)) (needs --t)");
  bracket->add_option("--t", opt.t, "degree for --l")->check(CLI::NonNegativeNumber);
  auto* lemma = app.add_subcommand("lemma", "Steenrod-square relations on F^4");
  auto* fomega = app.add_subcommand("fomega", "the classes f_omega on both fixed components");
  auto* verify = app.add_subcommand("verify", "all n-indexed checks for one n");
  verify->add_option("--n", opt.n, "N")->required();
  auto* sweep = app.add_subcommand("sweep", "every check family over a range of n");
  sweep->add_option("--n", opt.n, "A..B")->default_val("5..24");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    SuiteConfig config;
    config.p_max = opt.p;
    config.q_max = opt.q;
    if (m_number->parsed()) {
      set_range(config, opt.n);
      config.families = {Family::m_number};
      if (opt.json_path != "-") {
        for (int n = config.n_lo; n <= config.n_hi; ++n)
          std::cout << "M(" << n << ") = " << binomial::stong_pergher(static_cast<std::int64_t>(n)) << "\n";
      }
    } else if (tables->parsed()) {
      config.families = {Family::tables};
    } else if (bracket->parsed()) {
      if (opt.l.has_value() != opt.t.has_value()) throw UsageError("--l and --t go together");
      if (opt.l) {
        const RpMuRing ring(opt.m.value_or(60));
        std::cout << "W[" << *opt.l << "]_" << *opt.t << " = " << to_string(bracket_f4(*opt.l, *opt.t, ring).to_polynomial())
                  << "\n";
        return 0;
      }
      config.families = {Family::bracket};
    } else if (lemma->parsed()) {
      config.families = {Family::lemma};
    } else if (fomega->parsed()) {
      config.families = {Family::fomega};
    } else if (verify->parsed()) {
      set_range(config, opt.n);
      if (config.n_lo != config.n_hi) throw UsageError("verify takes a single n; use sweep for ranges");
      config.families = {Family::m_number, Family::even, Family::odd};
    } else if (sweep->parsed()) {
      set_range(config, opt.n);
      config.families = {Family::m_number, Family::tables, Family::bracket, Family::lemma,
                         Family::fomega,   Family::even,   Family::odd};
    }
    return run(config, opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
