#pragma once

// Sparse multivariate polynomials over GF(2) in named, graded generators.
//
// Every generator carries a cohomological degree and a stratum (BASE for
// classes pulled back from the base manifold, FIBER for the tautological
// line class). A polynomial is a canonical set of monomials: coefficients
// are implicitly 1 and addition is symmetric difference.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invofix {

using GenId = std::uint32_t;
using Exponent = std::uint32_t;

// Stand-in for "no terms at all" in degree queries.
inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

enum class Stratum : std::uint8_t { base, fiber };

struct Generator {
  GenId id = 0;
  std::string name;
  int degree = 1;
  Stratum stratum = Stratum::base;
};

class GeneratorTable {
 public:
  // Throws UsageError on a duplicate name or a degree < 1.
  GenId add(std::string name, int degree, Stratum stratum);

  const Generator& operator[](GenId id) const { return gens_.at(id); }
  std::optional<GenId> find(std::string_view name) const;
  GenId id(std::string_view name) const;
  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, GenId, std::less<>> by_name_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

struct Factor {
  GenId gen = 0;
  Exponent exp = 0;
  auto operator<=>(const Factor&) const = default;
};

// Power product of generators, factors sorted by generator id with no zero
// exponents. Ordering is lexicographic on the (id, exponent) sequence.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial of(GenId gen, Exponent exp = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Exponent exponent(GenId gen) const;

  int degree(const GeneratorTable& table) const;
  int base_degree(const GeneratorTable& table) const;
  int fiber_degree(const GeneratorTable& table) const;

  // Every exponent multiplied by k.
  Monomial scaled(Exponent k) const;
  // The monomial with generator `gen` removed.
  Monomial without(GenId gen) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

class Polynomial {
 public:
  explicit Polynomial(TablePtr table);
  // Canonicalizes: sorts and cancels repeated monomials in pairs.
  Polynomial(TablePtr table, std::vector<Monomial> terms);

  static Polynomial one(TablePtr table);
  static Polynomial gen(TablePtr table, GenId id, Exponent exp = 1);
  static Polynomial gen(TablePtr table, std::string_view name, Exponent exp = 1);
  static Polynomial monomial(TablePtr table, Monomial m);
  // Trusts the caller: terms must already be sorted and distinct.
  static Polynomial from_sorted(TablePtr table, std::vector<Monomial> terms);

  const TablePtr& table() const { return table_; }
  std::span<const Monomial> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  TablePtr table_;
  std::vector<Monomial> terms_;
};

// Terms outside the caps are dropped from products. Both caps are
// compatible with repeated multiplication because degrees only grow.
struct MulOptions {
  int base_cap = kInfiniteDegree;
  int degree_cap = kInfiniteDegree;
};

void require_same_table(const Polynomial& a, const Polynomial& b);

Polynomial add(const Polynomial& a, const Polynomial& b);

// Product with GF(2) cancellation. Large products are split over OpenMP
// threads; the result is canonical and independent of the thread count.
Polynomial mul(const Polynomial& a, const Polynomial& b, const MulOptions& opts = {});

// Single-threaded reference product; kept for tests and benchmarks.
Polynomial mul_serial(const Polynomial& a, const Polynomial& b, const MulOptions& opts = {});

Polynomial pow(const Polynomial& p, std::uint64_t e, const MulOptions& opts = {});

// p^(2^k), computed by scaling every exponent (characteristic 2).
Polynomial frobenius(const Polynomial& p, unsigned k);

Polynomial component(const Polynomial& p, int degree);
// Sum of the components of degree <= cap.
Polynomial truncate_degree(const Polynomial& p, int cap);
Polynomial truncate_base_degree(const Polynomial& p, int cap);
Polynomial filter(const Polynomial& p, const std::function<bool(const Monomial&)>& keep);

// kInfiniteDegree for the zero polynomial.
int min_base_degree(const Polynomial& p);
// -1 for the zero polynomial.
int max_degree(const Polynomial& p);
bool is_homogeneous(const Polynomial& p);

Exponent max_exponent(const Polynomial& p, GenId gen);
// Sum of terms whose exponent of `gen` is exactly `exp`, with gen^exp removed.
Polynomial coefficient_of(const Polynomial& p, GenId gen, Exponent exp);

// Ring homomorphism sending each generator of p to a polynomial over
// `target`. Every generator occurring in p must be assigned, and each image
// must be homogeneous of the generator's degree (or zero).
Polynomial substitute(const Polynomial& p, const std::map<GenId, Polynomial>& assignment,
                      const TablePtr& target);

// Canonical text: "theta_2*c^3 + u_1*c"; "0" and "1" for the constants.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const GeneratorTable& table);
Polynomial parse_polynomial(const TablePtr& table, std::string_view text);

}  // namespace invofix
