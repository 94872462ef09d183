#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace invofix {

// pass: the computation agrees with every oracle and with the printed value.
// fail: two independent computations disagree (an implementation bug).
// paper_mismatch: the oracles agree with each other but not with the printed value.
enum class Status { pass, fail, paper_mismatch };

std::string_view to_string(Status s);

using ParamValue = std::variant<std::int64_t, std::string>;
using Params = std::map<std::string, ParamValue>;

struct CheckReport {
  std::string id;
  Params params;
  Status status = Status::pass;
  std::optional<std::string> witness;  // present exactly when status != pass
  std::string oracle;
  double elapsed_ms = 0.0;
};

std::string to_string(const ParamValue& v);

// Helpers that keep the witness invariant.
inline CheckReport make_report(std::string id, Params params, std::string oracle) {
  return CheckReport{std::move(id), std::move(params), Status::pass, std::nullopt, std::move(oracle), 0.0};
}
inline void mark(CheckReport& r, Status s, std::string witness) {
  // A fail always wins over a mismatch with the printed value.
  if (r.status == Status::fail) {
    if (s == Status::fail) *r.witness += "; " + witness;
    return;
  }
  if (r.status == Status::paper_mismatch && s == Status::paper_mismatch) {
    *r.witness += "; " + witness;
    return;
  }
  r.status = s;
  r.witness = std::move(witness);
}

}  // namespace invofix
