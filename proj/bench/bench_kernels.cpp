#include <random>

#include <benchmark/benchmark.h>

#include "invofix/gf2core.hpp"
#include "invofix/rings.hpp"

using namespace invofix;

namespace {

Polynomial random_poly(const TablePtr& table, const std::vector<GenId>& gens, std::mt19937_64& rng, int terms, int max_exp) {
  std::vector<Monomial> out;
  std::uniform_int_distribution<int> e(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    std::vector<Factor> f;
    for (auto g : gens)
      if (const int k = e(rng); k > 0) f.push_back({g, static_cast<Exponent>(k)});
    out.emplace_back(std::move(f));
  }
  return Polynomial(table, std::move(out));
}

struct Operands {
  Polynomial a, b;
};

Operands operands(int terms) {
  auto table = std::make_shared<GeneratorTable>();
  std::vector<GenId> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(table->add("x_" + std::to_string(i + 1), 1 + i % 3, Stratum::base));
  gens.push_back(table->add("c", 1, Stratum::fiber));
  std::mt19937_64 rng(42);
  return {random_poly(table, gens, rng, terms, 6), random_poly(table, gens, rng, terms, 6)};
}

void BM_mul(benchmark::State& state) {
  const Operands op = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(op.a, op.b));
}

void BM_mul_serial(benchmark::State& state) {
  const Operands op = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(op.a, op.b));
}

// Dense random element with d-powers up to 3m, so most terms need reducing.
Polynomial ring_input(int m) {
  const auto& t = alpha_d_table();
  std::mt19937_64 rng(7);
  std::vector<Monomial> terms;
  for (int i = 0; i <= 6; ++i) {
    for (int j = 0; j < 3 * m; ++j) {
      if (rng() % 2 == 0) continue;
      std::vector<Factor> f;
      if (i > 0) f.push_back({t.alpha, static_cast<Exponent>(i)});
      if (j > 0) f.push_back({t.d, static_cast<Exponent>(j)});
      terms.emplace_back(std::move(f));
    }
  }
  return Polynomial(t.table, std::move(terms));
}

void BM_normal_form(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const RpMuRing ring(m);
  const Polynomial p = ring_input(m);
  for (auto _ : state) benchmark::DoNotOptimize(ring.normal_form(p));
}

void BM_rewrite_normal_form(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const RpMuPresentation pres(m);
  const Polynomial p = ring_input(m);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_normal_form(p, pres));
}

}  // namespace

BENCHMARK(BM_mul)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_mul_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_normal_form)->Arg(20)->Arg(60)->Arg(120);
BENCHMARK(BM_rewrite_normal_form)->Arg(20)->Arg(60)->Arg(120);

BENCHMARK_MAIN();
