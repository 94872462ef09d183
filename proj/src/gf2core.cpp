#include "invofix/gf2core.hpp"

#include <algorithm>
#include <utility>

#include "invofix/error.hpp"

namespace invofix {

GenId GeneratorTable::add(std::string name, int degree, Stratum stratum) {
  if (degree < 1) throw UsageError("generator '" + name + "' must have degree >= 1");
  if (by_name_.contains(name)) throw UsageError("duplicate generator name '" + name + "'");
  const auto id = static_cast<GenId>(gens_.size());
  by_name_.emplace(name, id);
  gens_.push_back(Generator{id, std::move(name), degree, stratum});
  return id;
}

std::optional<GenId> GeneratorTable::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GenId GeneratorTable::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw UsageError("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.gen < b.gen; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.exp == 0) continue;
    if (!merged.empty() && merged.back().gen == f.gen) {
      merged.back().exp += f.exp;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
}

Monomial Monomial::of(GenId gen, Exponent exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back(Factor{gen, exp});
  return m;
}

Exponent Monomial::exponent(GenId gen) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), gen,
                             [](const Factor& f, GenId g) { return f.gen < g; });
  return (it != factors_.end() && it->gen == gen) ? it->exp : 0;
}

int Monomial::degree(const GeneratorTable& table) const {
  int total = 0;
  for (const auto& f : factors_) total += static_cast<int>(f.exp) * table[f.gen].degree;
  return total;
}

int Monomial::base_degree(const GeneratorTable& table) const {
  int total = 0;
  for (const auto& f : factors_) {
    const auto& g = table[f.gen];
    if (g.stratum == Stratum::base) total += static_cast<int>(f.exp) * g.degree;
  }
  return total;
}

int Monomial::fiber_degree(const GeneratorTable& table) const {
  return degree(table) - base_degree(table);
}

Monomial Monomial::scaled(Exponent k) const {
  if (k == 0) return Monomial{};
  Monomial out = *this;
  for (auto& f : out.factors_) f.exp *= k;
  return out;
}

Monomial Monomial::without(GenId gen) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& f : factors_)
    if (f.gen != gen) out.factors_.push_back(f);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->gen < j->gen) {
      out.factors_.push_back(*i++);
    } else if (j->gen < i->gen) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back(Factor{i->gen, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

// -------------------------------------------------------------- Polynomial

namespace {

// Sort, then keep each monomial iff it occurs an odd number of times.
void cancel_in_place(std::vector<Monomial>& terms) {
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

std::vector<Monomial> symmetric_difference(std::span<const Monomial> a,
                                           std::span<const Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Polynomial::Polynomial(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw UsageError("polynomial needs a generator table");
}

Polynomial::Polynomial(TablePtr table, std::vector<Monomial> terms)
    : table_(std::move(table)), terms_(std::move(terms)) {
  if (!table_) throw UsageError("polynomial needs a generator table");
  for (const auto& m : terms_)
    for (const auto& f : m.factors())
      if (f.gen >= table_->size()) throw UsageError("monomial uses a generator outside the table");
  cancel_in_place(terms_);
}

Polynomial Polynomial::one(TablePtr table) { return monomial(std::move(table), Monomial{}); }

Polynomial Polynomial::gen(TablePtr table, GenId id, Exponent exp) {
  if (id >= table->size()) throw UsageError("generator id out of range");
  return monomial(std::move(table), Monomial::of(id, exp));
}

Polynomial Polynomial::gen(TablePtr table, std::string_view name, Exponent exp) {
  const GenId id = table->id(name);
  return gen(std::move(table), id, exp);
}

Polynomial Polynomial::monomial(TablePtr table, Monomial m) {
  Polynomial p(std::move(table));
  p.terms_.push_back(std::move(m));
  return p;
}

Polynomial Polynomial::from_sorted(TablePtr table, std::vector<Monomial> terms) {
  Polynomial p(std::move(table));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_table(*this, other);
  terms_ = symmetric_difference(terms_, other.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = mul(*this, other);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.table_ == b.table_ && a.terms_ == b.terms_;
}

void require_same_table(const Polynomial& a, const Polynomial& b) {
  if (a.table() != b.table()) throw UsageError("polynomials over different generator tables");
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  require_same_table(a, b);
  return Polynomial::from_sorted(a.table(), symmetric_difference(a.terms(), b.terms()));
}

Polynomial pow(const Polynomial& p, std::uint64_t e, const MulOptions& opts) {
  Polynomial result = Polynomial::one(p.table());
  if (opts.degree_cap < 0 || opts.base_cap < 0) return Polynomial(p.table());
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result = mul(result, base, opts);
    e >>= 1U;
    if (e > 0) base = mul(base, base, opts);
  }
  return result;
}

Polynomial frobenius(const Polynomial& p, unsigned k) {
  const Exponent scale = Exponent{1} << k;
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (const auto& m : p.terms()) terms.push_back(m.scaled(scale));
  // Scaling every exponent by the same factor preserves the lexicographic order.
  return Polynomial::from_sorted(p.table(), std::move(terms));
}

Polynomial filter(const Polynomial& p, const std::function<bool(const Monomial&)>& keep) {
  std::vector<Monomial> terms;
  for (const auto& m : p.terms())
    if (keep(m)) terms.push_back(m);
  return Polynomial::from_sorted(p.table(), std::move(terms));
}

Polynomial component(const Polynomial& p, int degree) {
  const auto& t = *p.table();
  return filter(p, [&](const Monomial& m) { return m.degree(t) == degree; });
}

Polynomial truncate_degree(const Polynomial& p, int cap) {
  const auto& t = *p.table();
  return filter(p, [&](const Monomial& m) { return m.degree(t) <= cap; });
}

Polynomial truncate_base_degree(const Polynomial& p, int cap) {
  const auto& t = *p.table();
  return filter(p, [&](const Monomial& m) { return m.base_degree(t) <= cap; });
}

int min_base_degree(const Polynomial& p) {
  int best = kInfiniteDegree;
  for (const auto& m : p.terms()) best = std::min(best, m.base_degree(*p.table()));
  return best;
}

int max_degree(const Polynomial& p) {
  int best = -1;
  for (const auto& m : p.terms()) best = std::max(best, m.degree(*p.table()));
  return best;
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const int d = p.terms().front().degree(*p.table());
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const Monomial& m) { return m.degree(*p.table()) == d; });
}

Exponent max_exponent(const Polynomial& p, GenId gen) {
  Exponent best = 0;
  for (const auto& m : p.terms()) best = std::max(best, m.exponent(gen));
  return best;
}

Polynomial coefficient_of(const Polynomial& p, GenId gen, Exponent exp) {
  std::vector<Monomial> terms;
  for (const auto& m : p.terms())
    if (m.exponent(gen) == exp) terms.push_back(m.without(gen));
  return Polynomial(p.table(), std::move(terms));
}

Polynomial substitute(const Polynomial& p, const std::map<GenId, Polynomial>& assignment,
                      const TablePtr& target) {
  const auto& source = *p.table();
  for (const auto& [id, image] : assignment) {
    if (id >= source.size()) throw UsageError("assignment names a generator outside the table");
    if (image.table() != target) throw UsageError("assignment image over the wrong table");
    if (!image.is_zero() && (!is_homogeneous(image) ||
                             image.terms().front().degree(*target) != source[id].degree)) {
      throw UsageError("image of '" + source[id].name + "' is not homogeneous of degree " +
                       std::to_string(source[id].degree));
    }
  }
  // Powers are cached per (generator, exponent) since the same ones recur.
  std::map<std::pair<GenId, Exponent>, Polynomial> powers;
  auto power_of = [&](GenId id, Exponent e) -> const Polynomial& {
    auto key = std::make_pair(id, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = assignment.find(id);
    if (img == assignment.end())
      throw UsageError("generator '" + source[id].name + "' has no assigned image");
    return powers.emplace(key, pow(img->second, e)).first->second;
  };
  Polynomial result(target);
  for (const auto& m : p.terms()) {
    Polynomial term = Polynomial::one(target);
    for (const auto& f : m.factors()) {
      term = mul(term, power_of(f.gen, f.exp));
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

}  // namespace invofix
