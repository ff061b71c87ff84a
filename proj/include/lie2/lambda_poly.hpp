#pragma once

#include "rational.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace lie2 {

// Polynomial in the deformation parameter; coefficient k multiplies λ^k.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(int c) : LambdaPoly(Rational(c)) {}
  LambdaPoly(const Rational& c) {
    if (!is_zero(c)) coeffs_.push_back(c);
  }
  explicit LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static LambdaPoly lambda() { return LambdaPoly(std::vector<Rational>{0, 1}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  LambdaPoly& operator*=(const LambdaPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator-(LambdaPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LambdaPoly(std::move(out));
  }
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (is_zero(coeffs_[k])) continue;
      std::string c = coeffs_[k].get_str();
      if (!s.empty()) s += c[0] == '-' ? " - " : " + ";
      if (!s.empty() && c[0] == '-') c.erase(0, 1);
      s += k == 0 ? c : (c == "1" ? "" : c == "-1" ? "-" : c + "*") + (k == 1 ? std::string("λ") : "λ^" + std::to_string(k));
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const LambdaPoly& p) { return p.degree() < 0; }
inline std::string to_string(const LambdaPoly& p) { return p.str(); }
inline std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.str(); }

}  // namespace lie2
