#pragma once

#include <memory>
#include <random>
#include <vector>

#include "invofix/gf2core.hpp"

namespace test {

struct Fixture {
  std::shared_ptr<invofix::GeneratorTable> table = std::make_shared<invofix::GeneratorTable>();
  std::vector<invofix::GenId> gens;

  Fixture() {
    gens.push_back(table->add("a", 1, invofix::Stratum::base));
    gens.push_back(table->add("b", 2, invofix::Stratum::base));
    gens.push_back(table->add("c", 1, invofix::Stratum::fiber));
    gens.push_back(table->add("e", 3, invofix::Stratum::base));
  }
};

inline invofix::Monomial random_monomial(const std::vector<invofix::GenId>& gens, std::mt19937_64& rng, int max_exp) {
  std::vector<invofix::Factor> f;
  std::uniform_int_distribution<int> e(0, max_exp);
  for (auto g : gens) {
    const int k = e(rng);
    if (k > 0) f.push_back(invofix::Factor{g, static_cast<invofix::Exponent>(k)});
  }
  return invofix::Monomial(std::move(f));
}

inline invofix::Polynomial random_polynomial(const invofix::TablePtr& table, const std::vector<invofix::GenId>& gens,
                                             std::mt19937_64& rng, int max_terms = 8, int max_exp = 3) {
  std::vector<invofix::Monomial> terms;
  const int n = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int i = 0; i < n; ++i) terms.push_back(random_monomial(gens, rng, max_exp));
  return invofix::Polynomial(table, std::move(terms));
}

}  // namespace test
