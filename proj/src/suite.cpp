#include "invofix/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"

#include "invofix/binomial.hpp"
#include "invofix/charclass.hpp"
#include "invofix/checks.hpp"
#include "invofix/error.hpp"
#include "invofix/rings.hpp"
#include "invofix/symmfunc.hpp"
#include "invofix/wu.hpp"

namespace invofix {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kBracketLo = -64;
constexpr std::int64_t kBracketHi = 200;
constexpr int kBracketT = 40;

std::int64_t M(int n) { return binomial::stong_pergher(static_cast<std::int64_t>(n)); }

bool has(const SuiteConfig& c, Family f) { return std::find(c.families.begin(), c.families.end(), f) != c.families.end(); }

void add(std::vector<Check>& out, Family f, std::string id, Params params, std::function<CheckReport()> run) {
  out.push_back(Check{f, std::move(id), std::move(params), std::move(run)});
}

std::vector<int> m_values(const SuiteConfig& c, int n) {
  if (c.m) return {*c.m};
  return default_m_values(n);
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + to_string(v);
  }
  return out;
}

std::string md_escape(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

ordered_json params_json(const Params& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
      j[k] = *i;
    } else {
      j[k] = std::get<std::string>(v);
    }
  }
  return j;
}

// Final numbers read back from their reports: pass is 1, paper_mismatch is 0.
void add_m_independence(std::vector<CheckReport>& reports) {
  std::map<std::int64_t, std::vector<const CheckReport*>> by_n;
  for (const auto& r : reports) {
    if (r.id == "final_even_number") by_n[std::get<std::int64_t>(r.params.at("n"))].push_back(&r);
  }
  std::vector<CheckReport> extra;
  for (const auto& [n, rs] : by_n) {
    if (rs.size() < 2) continue;
    CheckReport r = make_report("m_independence", {{"n", n}}, "final numbers compared across m");
    std::string values;
    bool same = true;
    bool any_fail = false;
    for (const auto* f : rs) {
      if (f->status == Status::fail) any_fail = true;
      if (!values.empty()) values += ", ";
      values += "m=" + to_string(f->params.at("m")) + ": " + (f->status == Status::pass ? "1" : "0");
      same = same && (f->status == Status::pass) == (rs.front()->status == Status::pass);
    }
    if (any_fail) {
      mark(r, Status::fail, "a final number failed its oracle");
    } else if (!same) {
      mark(r, Status::fail, values);
    } else {
      r.oracle += " (" + values + ")";
    }
    extra.push_back(std::move(r));
  }
  for (auto& r : extra) reports.push_back(std::move(r));
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::m_number:
      return "m-number";
    case Family::tables:
      return "tables";
    case Family::bracket:
      return "bracket";
    case Family::lemma:
      return "lemma";
    case Family::fomega:
      return "fomega";
    case Family::even:
      return "even";
    case Family::odd:
      return "odd";
  }
  return "";
}

std::vector<int> default_m_values(int n) {
  if (n % 2 != 0) return {n + 4, n + 6, n + 8};
  const int base = static_cast<int>(M(n - 4)) + 9;
  return {base, base + 1, base + 7};
}

std::pair<int, int> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad range '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  const auto range = std::make_pair(number(text.substr(0, dots)), number(text.substr(dots + 2)));
  if (range.first > range.second) throw UsageError("empty range '" + text + "'");
  return range;
}

void validate(const SuiteConfig& c) {
  if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (c.n_lo < 5 || c.n_hi < c.n_lo) throw UsageError("n range must satisfy 5 <= A <= B");
  if (c.p_max < 1 || c.p_max > 20) throw UsageError("--p must be in 1..20");
  if (c.q_max < 1 || c.q_max > 1000) throw UsageError("--q must be in 1..1000");
  if (!c.m) return;
  if (has(c, Family::bracket) && *c.m < RpMuPresentation::kMinM)
    throw UsageError("--m must be at least " + std::to_string(RpMuPresentation::kMinM));
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    if (n % 2 == 0 && n >= 6 && has(c, Family::even) && *c.m <= M(n - 4) + 8)
      throw UsageError("--m must exceed M(n-4)+8 = " + std::to_string(M(n - 4) + 8) + " for n = " + std::to_string(n));
    if (n % 2 != 0 && has(c, Family::odd) && *c.m < n + 4)
      throw UsageError("--m must be at least n+4 = " + std::to_string(n + 4) + " for n = " + std::to_string(n));
  }
}

std::vector<Check> build_registry(const SuiteConfig& c) {
  validate(c);
  std::vector<Check> out;
  if (has(c, Family::m_number)) {
    for (int n = c.n_lo; n <= c.n_hi; ++n) add(out, Family::m_number, "m_number", {{"n", n}}, [n] { return m_number_check(n); });
  }
  if (has(c, Family::tables)) {
    for (unsigned p = 1; p <= c.p_max; ++p) {
      for (std::int64_t q = 1; q <= c.q_max; q += 2) {
        const Params params{{"p", static_cast<std::int64_t>(p)}, {"q", q}};
        add(out, Family::tables, "lucas_items", params, [p, q] { return lucas_items_check(p, q); });
        add(out, Family::tables, "odd_display", params, [p, q] { return odd_display_check(p, q); });
        add(out, Family::tables, "unique_zero", params, [p, q] { return unique_zero_check(p, q); });
      }
    }
  }
  if (has(c, Family::bracket)) {
    std::vector<int> ring_ms;
    std::vector<int> sweep_ms;
    if (c.m) {
      ring_ms = sweep_ms = {*c.m};
    } else {
      for (int m = 12; m <= 60; ++m) ring_ms.push_back(m);
      sweep_ms = {12, 30, 60};
    }
    for (int m : ring_ms) add(out, Family::bracket, "ring_identities", {{"m", m}}, [m] { return ring_identities_check(m); });
    for (int m : sweep_ms) {
      add(out, Family::bracket, "bracket_sweep",
          {{"l_hi", kBracketHi}, {"l_lo", kBracketLo}, {"m", m}, {"t_max", kBracketT}},
          [m] { return bracket_sweep_check(m, kBracketLo, kBracketHi, kBracketT); });
    }
    for (std::int64_t t : {3, 4, 5, 7, 11, 15}) {
      for (std::int64_t s = 0; s <= 9; ++s)
        add(out, Family::bracket, "power_identity", {{"s", s}, {"t", t}}, [t, s] { return power_identity_check(t, s); });
    }
  }
  if (has(c, Family::lemma)) {
    for (int i = 1; i <= 5; ++i) {
      add(out, Family::lemma, "lemma_membership", {{"relation", i}}, [i] { return lemma_membership_check(i); });
      for (std::string family : {"lemma", "system"})
        add(out, Family::lemma, "model_bundle", {{"family", family}, {"relation", i}},
            [family, i] { return model_bundle_check(family, i); });
    }
    for (const auto& label : derivation_step_labels())
      add(out, Family::lemma, "lemma_step", {{"step", label}}, [label] { return derivation_step_check(label); });
    add(out, Family::lemma, "w3_relation", {}, [] { return w3_relation_check(); });
  }
  if (has(c, Family::fomega)) {
    for (auto w : kPartitions4) {
      add(out, Family::fomega, "fomega_nu", {{"omega", name(w)}}, [w] { return fomega_nu_check(w); });
      add(out, Family::fomega, "fomega_lambda", {{"omega", name(w)}}, [w] { return fomega_lambda_structure(w, 4, 4); });
    }
    add(out, Family::fomega, "fomega_span", {}, [] { return span_check(); });
  }
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    if (n % 2 == 0 && n >= 6 && has(c, Family::even)) {
      const auto ms = m_values(c, n);
      for (int m : ms) {
        add(out, Family::even, "final_even_number", {{"m", m}, {"n", n}}, [n, m] { return final_even_number(n, m).report; });
      }
      const int m0 = ms.front();
      add(out, Family::even, "y_class", {{"m", m0}, {"n", n}}, [n, m0] { return y_class_check(n, m0); });
      add(out, Family::even, "y_mod_ideal", {{"m", m0}, {"n", n}}, [n, m0] { return y_mod_ideal_check(n, m0); });
      add(out, Family::even, "w2_family", {{"m", m0}, {"n", n}}, [n, m0] { return w2_family_check(n, m0); });
      add(out, Family::even, "x_dimension", {{"n", n}}, [n] { return x_dimension_check(n); });
      for (auto e : {XExtra::w0_2_fourth, XExtra::omega1, XExtra::omega2, XExtra::omega3, XExtra::omega4, XExtra::omega5})
        add(out, Family::even, "x_side_vanishing", {{"extra", name(e)}, {"n", n}}, [n, e] { return x_side_check(n, e); });
    }
    if (n % 2 != 0 && has(c, Family::odd)) {
      for (int m : m_values(c, n))
        add(out, Family::odd, "odd_case_number", {{"m", m}, {"n", n}}, [n, m] { return odd_case_check(n, m); });
    }
  }
  return out;
}

SuiteReport run_checks(const std::vector<Check>& checks, int jobs) {
  SuiteReport report;
  report.checks.resize(checks.size());
  const auto count = static_cast<std::int64_t>(checks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < count; ++i) {
    const Check& check = checks[static_cast<std::size_t>(i)];
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    try {
      r = check.run();
    } catch (const std::exception& e) {
      r = make_report(check.id, check.params, "exception");
      mark(r, Status::fail, e.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks[static_cast<std::size_t>(i)] = std::move(r);
  }
  add_m_independence(report.checks);
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  });
  return report;
}

SuiteReport run_suite(const SuiteConfig& config) { return run_checks(build_registry(config), config.jobs); }

std::size_t SuiteReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckReport& r) { return r.status == s; }));
}

int exit_code(const SuiteReport& report, bool strict_paper) {
  if (report.count(Status::fail) > 0) return 2;
  if (strict_paper && report.count(Status::paper_mismatch) > 0) return 2;
  return 0;
}

std::string to_json(const SuiteReport& report, bool timings) {
  ordered_json doc;
  doc["version"] = "invofix/1";
  doc["checks"] = ordered_json::array();
  for (const auto& r : report.checks) {
    ordered_json j;
    j["id"] = r.id;
    j["params"] = params_json(r.params);
    j["status"] = std::string(to_string(r.status));
    if (r.witness) j["witness"] = *r.witness;
    j["oracle"] = r.oracle;
    if (timings) j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
    doc["checks"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string to_markdown(const SuiteReport& report, bool timings) {
  std::ostringstream out;
  out << "# invofix report\n\n" << summary_line(report) << "\n";
  std::string current;
  for (const auto& r : report.checks) {
    if (r.id != current) {
      current = r.id;
      out << "\n## " << r.id << "\n\n| params | status | witness | oracle |" << (timings ? " ms |" : "") << "\n";
      out << "|---|---|---|---|" << (timings ? "---|" : "") << "\n";
    }
    out << "| " << md_escape(params_text(r.params)) << " | " << to_string(r.status) << " | "
        << md_escape(r.witness.value_or("")) << " | " << md_escape(r.oracle) << " |";
    if (timings) out << " " << std::lround(r.elapsed_ms) << " |";
    out << "\n";
  }
  return out.str();
}

std::string summary_line(const SuiteReport& report) {
  return "checks " + std::to_string(report.checks.size()) + ", pass " + std::to_string(report.count(Status::pass)) +
         ", fail " + std::to_string(report.count(Status::fail)) + ", paper_mismatch " +
         std::to_string(report.count(Status::paper_mismatch));
}

}  // namespace invofix
