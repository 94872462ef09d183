#include <cctype>
#include <charconv>
#include <optional>

#include "invofix/error.hpp"
#include "invofix/gf2core.hpp"

namespace invofix {

std::string to_string(const Monomial& m, const GeneratorTable& table) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += table[f.gen].name;
    if (f.exp != 1) {
      out += '^';
      out += std::to_string(f.exp);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(m, *p.table());
  }
  return out;
}

namespace {

// term := factor ('*' factor)* ; factor := name ('^' number)? | number
class Parser {
 public:
  Parser(const TablePtr& table, std::string_view text) : table_(table), text_(text) {}

  Polynomial run() {
    std::vector<Monomial> terms;
    skip_space();
    if (at_end()) fail("empty polynomial text");
    do {
      if (auto term = parse_term()) terms.push_back(std::move(*term));
    } while (consume('+'));
    skip_space();
    if (!at_end()) fail("unexpected trailing text");
    return Polynomial(table_, std::move(terms));
  }

 private:
  // nullopt for a term with an even numeric factor, i.e. zero over GF(2).
  std::optional<Monomial> parse_term() {
    std::vector<Factor> factors;
    bool zero = false;
    do {
      skip_space();
      if (peek_digit()) {
        if (parse_number() % 2 == 0) zero = true;
        continue;
      }
      const GenId id = parse_name();
      Exponent e = 1;
      if (consume('^')) {
        skip_space();
        e = static_cast<Exponent>(parse_number());
      }
      factors.push_back(Factor{id, e});
    } while (consume('*'));
    if (zero) return std::nullopt;
    return Monomial(std::move(factors));
  }

  GenId parse_name() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a generator name");
    return table_->id(text_.substr(start, pos_ - start));
  }

  unsigned long long parse_number() {
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  const TablePtr& table_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const TablePtr& table, std::string_view text) {
  return Parser(table, text).run();
}

}  // namespace invofix
