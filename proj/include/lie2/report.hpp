#pragma once

#include "lambda_poly.hpp"
#include "matrix.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lie2 {

// Input rejected by a precondition (not a shape error).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A basis argument: kind 'e' for g_0 (or a single ungraded space), 'f' for g_{-1}.
struct Arg {
  char kind;
  std::size_t index;
  friend bool operator==(const Arg&, const Arg&) = default;
};

inline std::string describe(const std::vector<Arg>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i].kind + std::to_string(args[i].index + 1);
  }
  return s + ")";
}

template <class S>
struct BasicViolation {
  std::vector<Arg> args;
  std::vector<S> residual;
};

template <class S>
struct BasicCondition {
  std::string name;
  std::string statement;
  std::size_t checked = 0;
  std::vector<BasicViolation<S>> violations;

  bool pass() const { return violations.empty(); }

  void record(std::vector<Arg> args, std::vector<S> residual) {
    ++checked;
    if (!is_zero(residual)) violations.push_back({std::move(args), std::move(residual)});
  }
};

template <class S>
struct BasicReport {
  std::deque<BasicCondition<S>> conditions;  // deque: references from add() stay valid
  std::vector<std::string> warnings;

  bool pass() const {
    for (const auto& c : conditions)
      if (!c.pass()) return false;
    return true;
  }

  BasicCondition<S>& add(std::string name, std::string statement) {
    conditions.push_back({std::move(name), std::move(statement), 0, {}});
    return conditions.back();
  }

  const BasicCondition<S>* first_failure() const {
    for (const auto& c : conditions)
      if (!c.pass()) return &c;
    return nullptr;
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
      if (!c.pass()) out.push_back(c.name);
    return out;
  }

  const BasicCondition<S>& condition(std::string_view name) const {
    for (const auto& c : conditions)
      if (c.name == name) return c;
    throw std::out_of_range("no condition named " + std::string(name));
  }

  void append(const BasicReport& other, const std::string& prefix = "") {
    for (auto c : other.conditions) {
      c.name = prefix + c.name;
      conditions.push_back(std::move(c));
    }
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }
};

template <class S>
std::string format_vector(const std::vector<S>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

// "condition <name> fails at (e1,f2): residual [...]", or "" when passing.
template <class S>
std::string failure_summary(const BasicReport<S>& r) {
  const auto* c = r.first_failure();
  if (!c) return "";
  const auto& v = c->violations.front();
  return "condition " + c->name + " fails at " + describe(v.args) + ": residual " + format_vector(v.residual);
}

using AxiomReport = BasicReport<Rational>;
using LambdaReport = BasicReport<LambdaPoly>;

// Coefficient of λ^k in every residual; conditions with no residual at that
// order are kept with an empty violation list.
inline AxiomReport coefficient_report(const LambdaReport& r, std::size_t k) {
  AxiomReport out;
  for (const auto& c : r.conditions) {
    auto& oc = out.add(c.name, c.statement);
    oc.checked = c.checked;
    for (const auto& v : c.violations) {
      Vector res;
      for (const auto& p : v.residual) res.push_back(p.coefficient(k));
      if (!is_zero(res)) oc.violations.push_back({v.args, std::move(res)});
    }
  }
  out.warnings = r.warnings;
  return out;
}

}  // namespace lie2
