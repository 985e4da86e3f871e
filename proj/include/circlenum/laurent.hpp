#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "circlenum/errors.hpp"

// Exact integer Laurent polynomials in one variable A.

namespace circlenum {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(long long coefficient, int exponent) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_[exponent] = coefficient;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  long long coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int min_exponent() const {
    if (is_zero()) throw error("min_exponent of the zero polynomial");
    return terms_.begin()->first;
  }

  int max_exponent() const {
    if (is_zero()) throw error("max_exponent of the zero polynomial");
    return terms_.rbegin()->first;
  }

  // Difference between the extreme degrees; 0 for a monomial.
  int span() const {
    if (is_zero()) throw error("span of the zero polynomial");
    return max_exponent() - min_exponent();
  }

  const std::map<int, long long>& terms() const { return terms_; }

  void add_term(int exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_[exponent] = coefficient;
    } else if ((it->second += coefficient) == 0) {
      terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (auto [ea, ca] : a.terms_) {
      for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  // Multiplication by c * A^e.
  LaurentPolynomial scaled(long long c, int e) const {
    LaurentPolynomial out;
    if (c == 0) return out;
    for (auto [exp, coef] : terms_) out.terms_[exp + e] = coef * c;
    return out;
  }

  // The image under A -> A^{-1}.
  LaurentPolynomial with_negated_exponents() const {
    LaurentPolynomial out;
    for (auto [e, c] : terms_) out.terms_[-e] = c;
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (!s.empty()) {
        s += c > 0 ? " + " : " - ";
      } else if (c < 0) {
        s += "-";
      }
      long long mag = c > 0 ? c : -c;
      if (mag != 1 || e == 0) s += std::to_string(mag);
      if (e != 0) {
        s += "A";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  std::map<int, long long> terms_;  // exponent -> nonzero coefficient
};

inline LaurentPolynomial pow(const LaurentPolynomial& base, int exponent) {
  LaurentPolynomial out = LaurentPolynomial::monomial(1, 0);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

}  // namespace circlenum
