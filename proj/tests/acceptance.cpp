// Acceptance run: one PASS/FAIL line per criterion with its time budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "invofix/binomial.hpp"
#include "invofix/charclass.hpp"
#include "invofix/checks.hpp"
#include "invofix/rings.hpp"
#include "invofix/suite.hpp"
#include "invofix/symmfunc.hpp"
#include "invofix/wu.hpp"
#include "oracles.hpp"

using namespace invofix;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Polynomial ad(int i, int j) {
  const auto& t = alpha_d_table();
  std::vector<Factor> f;
  if (i > 0) f.push_back({t.alpha, static_cast<Exponent>(i)});
  if (j > 0) f.push_back({t.d, static_cast<Exponent>(j)});
  return Polynomial::monomial(t.table, Monomial(std::move(f)));
}

Polynomial from_terms(const oracle::Terms& terms) {
  Polynomial out(alpha_d_table().table);
  for (const auto& [i, j] : terms) out += ad(i, j);
  return out;
}

std::string params_of(const CheckReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) out += (out.empty() ? "" : ",") + k + "=" + to_string(v);
  return out;
}

bool not_pass(Outcome& o, const CheckReport& r) {
  o.require(r.status == Status::pass, r.id + "(" + params_of(r) + "): " + r.witness.value_or(""));
  return r.status != Status::pass;
}

int failures = 0;

void criterion(int number, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %-40s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", number, title.c_str(), secs, budget_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  if (!in_time) std::printf("     time limit exceeded\n");
  for (const auto& n : o.notes) std::printf("     %s\n", n.c_str());
  std::fflush(stdout);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "ring identities, m = 12..60", 1.0, [] {
    Outcome o;
    for (int m = 12; m <= 60; ++m) not_pass(o, ring_identities_check(m));
    return o;
  });

  criterion(2, "Stong-Pergher values, n <= 10^4", 1.0, [] {
    Outcome o;
    for (std::int64_t n = 1; n <= 10000; ++n) {
      o.require(binomial::stong_pergher(n) == oracle::stong_pergher(n), "oracle disagrees at n=" + std::to_string(n));
      if (not_pass(o, m_number_check(n))) break;
    }
    return o;
  });

  criterion(3, "Lucas items, p <= 12, odd q <= 15", 1.0, [] {
    Outcome o;
    std::size_t agree = 0, vacuous = 0;
    for (unsigned p = 1; p <= 12; ++p) {
      for (std::int64_t q = 1; q <= 15; q += 2) {
        const auto t = binomial::paper_tables(p, binomial::BigInt(q));
        agree += t.count(binomial::ItemStatus::agree);
        vacuous += t.count(binomial::ItemStatus::vacuous);
        o.require(t.items_consistent(), "disagreement at p=" + std::to_string(p) + " q=" + std::to_string(q));
        not_pass(o, lucas_items_check(p, q));
      }
    }
    o.notes.push_back(std::to_string(agree) + " items agree, " + std::to_string(vacuous) +
                      " vacuous (negative bottom index), 0 exceptions required");
    return o;
  });

  criterion(4, "bracket closed form vs expansion", 30.0, [] {
    Outcome o;
    for (std::int64_t l = -64; l <= 200; ++l)
      for (int t = 0; t <= 40; ++t)
        o.require(bracket_f4_expansion(l, t) == from_terms(oracle::bracket(l, t)),
                  "expansion vs Pascal oracle at l=" + std::to_string(l) + " t=" + std::to_string(t));
    for (int m : {12, 30, 60}) not_pass(o, bracket_sweep_check(m, -64, 200, 40));
    return o;
  });

  criterion(5, "odd n = 5..41, m in {n+4, n+6, n+8}", 5.0, [] {
    Outcome o;
    for (int n = 5; n <= 41; n += 2) {
      for (int m : {n + 4, n + 6, n + 8}) {
        const std::string at = " at n=" + std::to_string(n) + " m=" + std::to_string(m);
        o.require(odd_case_number(n, m), "number is 0" + at);
        o.require(oracle::odd_case_number(n, m), "oracle gives 0" + at);
      }
    }
    return o;
  });

  criterion(6, "F^n-side vanishing, even n = 6..24", 120.0, [] {
    Outcome o;
    for (int n = 6; n <= 24; n += 2)
      for (auto e : {XExtra::w0_2_fourth, XExtra::omega1, XExtra::omega2, XExtra::omega3, XExtra::omega4, XExtra::omega5})
        not_pass(o, x_side_check(n, e));
    return o;
  });

  criterion(7, "f_omega(nu) content", 10.0, [] {
    Outcome o;
    const NuSide& nu = nu_side();
    o.require(fomega_nu_d4(Partition4::omega1) == Polynomial::gen(nu.table, nu.sigma[3]), "omega1 is not sigma_4");
    not_pass(o, fomega_nu_check(Partition4::omega1));
    not_pass(o, span_check());
    for (auto w : {Partition4::omega2, Partition4::omega3, Partition4::omega4, Partition4::omega5}) {
      const CheckReport r = fomega_nu_check(w);
      o.require(r.status != Status::fail, name(w) + " failed: " + r.witness.value_or(""));
      o.notes.push_back(name(w) + ": " + std::string(to_string(r.status)) + (r.witness ? " [" + *r.witness + "]" : ""));
    }
    return o;
  });

  criterion(8, "Lemma replay", 1.0, [] {
    Outcome o;
    for (int i = 1; i <= 4; ++i) {
      const CheckReport r = lemma_membership_check(i);
      not_pass(o, r);
      o.notes.push_back("relation " + std::to_string(i) + ": " + r.oracle);
      not_pass(o, model_bundle_check("lemma", i));
    }
    for (int i = 1; i <= 5; ++i) not_pass(o, model_bundle_check("system", i));
    const CheckReport r5 = lemma_membership_check(5);
    o.require(r5.status != Status::fail && r5.witness.has_value(), "relation 5 has no verdict");
    o.notes.push_back("relation 5: " + std::string(to_string(r5.status)) + " [" + r5.witness.value_or("") + "]");
    return o;
  });

  criterion(9, "Y modulo the base ideal, even n = 6..24", 30.0, [] {
    Outcome o;
    for (int n = 6; n <= 24; n += 2) {
      const int mn = static_cast<int>(oracle::stong_pergher(n - 4));
      const int m = mn + 9;
      const RpMuPresentation pres(m);
      const Polynomial truth = build_Y_reference(n, pres);
      const std::string at = " at n=" + std::to_string(n);
      o.require(mod_base_ideal(truth) == ad(0, mn), "Y mod ideal is not d^M(n-4)" + at);
      std::mt19937_64 rng(static_cast<std::uint64_t>(n));
      o.require(truth == from_terms(oracle::naive_normal_form(oracle::y_class(n), m, rng)), "Y disagrees with oracle" + at);
      not_pass(o, y_mod_ideal_check(n, m));
    }
    return o;
  });

  criterion(10, "even n = 6..24 final numbers vs oracle", 120.0, [] {
    Outcome o;
    int cases = 0, agree = 0;
    for (int n = 6; n <= 24; n += 2) {
      std::string values, witness;
      bool all_one = true;
      for (int m : default_m_values(n)) {
        const FinalNumber f = final_even_number(n, m);
        ++cases;
        if (f.value == oracle::final_even_number(n, m)) ++agree;
        o.require(f.report.status != Status::fail, "fail at n=" + std::to_string(n) + ": " + f.report.witness.value_or(""));
        values += (values.empty() ? "" : ",") + std::string(f.value ? "1" : "0");
        if (!f.value) {
          all_one = false;
          if (witness.empty()) witness = "m=" + std::to_string(m) + ": " + f.report.witness.value_or("");
        }
      }
      if (n == 8) o.require(all_one, "n=8 does not yield 1");
      o.notes.push_back("n=" + std::to_string(n) + " [" + values + "] " +
                        (all_one ? "supports nonvanishing" : "contradicts nonvanishing; " + witness));
    }
    o.require(agree == cases, std::to_string(agree) + "/" + std::to_string(cases) + " agree with oracle");
    o.notes.insert(o.notes.begin(), std::to_string(agree) + "/" + std::to_string(cases) + " agree with the oracle");
    return o;
  });

  criterion(11, "deterministic JSON across runs and jobs", 120.0, [&cli] {
    Outcome o;
    SuiteConfig c;
    c.n_lo = 5;
    c.n_hi = 16;
    c.families = {Family::m_number, Family::tables, Family::lemma, Family::fomega, Family::even, Family::odd};
    const std::string serial = to_json(run_suite(c));
    c.jobs = 4;
    o.require(to_json(run_suite(c)) == serial, "in-process jobs=4 differs from jobs=1");
    o.require(to_json(run_suite(c)) == serial, "in-process repeated run differs");
    if (cli.empty()) {
      o.notes.push_back("no CLI path given; in-process comparison only");
      return o;
    }
    const auto dir = std::filesystem::temp_directory_path() / ("invofix_acc_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "4", "1", "3"}) {
      const auto path = dir / ("run" + std::to_string(outputs.size()) + ".json");
      const std::string cmd = "\"" + cli + "\" --jobs " + jobs + " --json \"" + path.string() + "\" sweep --n 5..16 > /dev/null";
      const int rc = std::system(cmd.c_str());
      o.require(rc == 0, "CLI exited with status " + std::to_string(rc));
      outputs.push_back(read_file(path));
    }
    for (const auto& out : outputs) o.require(!out.empty() && out == outputs.front(), "CLI JSON differs between runs");
    std::filesystem::remove_all(dir);
    o.notes.push_back("4 CLI sweeps (jobs 1,4,1,3) byte-identical, " + std::to_string(outputs.front().size()) + " bytes");
    return o;
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " criteria FAIL").c_str());
  return failures == 0 ? 0 : 1;
}
