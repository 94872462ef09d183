// Product kernels. `mul` splits the outer loop across OpenMP threads, each
// thread sorts and cancels its own partial products, and the partial sums are
// merged by symmetric difference. `mul_serial` is the plain reference.

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "invofix/gf2core.hpp"

namespace invofix {

namespace {

// Below this many monomial products the thread team costs more than it saves.
constexpr std::size_t kParallelWork = std::size_t{1} << 15;

struct TermDegrees {
  std::vector<int> total;
  std::vector<int> base;
};

TermDegrees degrees_of(const Polynomial& p) {
  TermDegrees d;
  d.total.reserve(p.size());
  d.base.reserve(p.size());
  for (const auto& m : p.terms()) {
    d.total.push_back(m.degree(*p.table()));
    d.base.push_back(m.base_degree(*p.table()));
  }
  return d;
}

void cancel_sorted_runs(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Monomial> merge_xor(std::vector<std::vector<Monomial>>& parts) {
  // Pairwise tree merge keeps the total copying at O(N log k).
  while (parts.size() > 1) {
    std::vector<std::vector<Monomial>> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      std::vector<Monomial> merged;
      merged.reserve(parts[i].size() + parts[i + 1].size());
      std::set_symmetric_difference(std::make_move_iterator(parts[i].begin()),
                                    std::make_move_iterator(parts[i].end()),
                                    std::make_move_iterator(parts[i + 1].begin()),
                                    std::make_move_iterator(parts[i + 1].end()),
                                    std::back_inserter(merged));
      next.push_back(std::move(merged));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.empty() ? std::vector<Monomial>{} : std::move(parts.front());
}

}  // namespace

Polynomial mul(const Polynomial& a, const Polynomial& b, const MulOptions& opts) {
  require_same_table(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.table());

  const TermDegrees da = degrees_of(a);
  const TermDegrees db = degrees_of(b);

  // Visit b in order of base degree so the base cap becomes an early exit.
  std::vector<std::size_t> order(b.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return db.base[x] < db.base[y]; });

  const std::size_t work = a.size() * b.size();
  const int team = work >= kParallelWork ? omp_get_max_threads() : 1;
  std::vector<std::vector<Monomial>> partial(static_cast<std::size_t>(team));
  const auto a_terms = a.terms();
  const auto b_terms = b.terms();
  const long long outer = static_cast<long long>(a.size());

#pragma omp parallel num_threads(team)
  {
    auto& out = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
    for (long long ii = 0; ii < outer; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (da.base[i] > opts.base_cap || da.total[i] > opts.degree_cap) continue;
      const int base_room = opts.base_cap == kInfiniteDegree ? kInfiniteDegree : opts.base_cap - da.base[i];
      for (std::size_t j : order) {
        if (db.base[j] > base_room) break;
        if (opts.degree_cap != kInfiniteDegree && da.total[i] + db.total[j] > opts.degree_cap) continue;
        out.push_back(a_terms[i] * b_terms[j]);
      }
    }
    cancel_sorted_runs(out);
  }
  return Polynomial::from_sorted(a.table(), merge_xor(partial));
}

Polynomial mul_serial(const Polynomial& a, const Polynomial& b, const MulOptions& opts) {
  require_same_table(a, b);
  const auto& table = *a.table();
  std::set<Monomial> acc;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      Monomial m = x * y;
      if (m.base_degree(table) > opts.base_cap || m.degree(table) > opts.degree_cap) continue;
      auto [it, inserted] = acc.insert(std::move(m));
      if (!inserted) acc.erase(it);
    }
  }
  return Polynomial::from_sorted(a.table(), std::vector<Monomial>(acc.begin(), acc.end()));
}

}  // namespace invofix
