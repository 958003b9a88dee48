#pragma once

#include "einstrength/numpoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace einstrength {

// Power product of named symbols, sorted by name, exponents positive.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

// Lexicographic order with the alphabetically first symbol most significant.
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
 public:
  using Terms = std::map<Monomial, Rational, LexLess>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(implicit)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(implicit)
  static MPoly symbol(const std::string& name, unsigned power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  const Terms& terms() const { return terms_; }

  std::set<std::string> symbols() const;
  unsigned degree_in(const std::string& v) const;
  MPoly coefficient_in(const std::string& v, unsigned k) const;
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly scaled(const Rational& c) const;
  MPoly times_monomial(const Monomial& m, const Rational& c) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator<(const MPoly& o) const;

  // Exact division; throws if b does not divide *this.
  MPoly exact_div(const MPoly& b) const;
  // Rational content with the sign of the leading coefficient.
  Rational content() const;
  MPoly primitive() const;

  Rational evaluate(const std::map<std::string, Rational>& values) const;
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

MPoly gcd(const MPoly& a, const MPoly& b);

// Element of the ground field: a reduced rational function in named constants.
class ConstantExpr {
 public:
  ConstantExpr() : num_(), den_(1) {}
  ConstantExpr(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  ConstantExpr(long c) : ConstantExpr(Rational(c)) {}    // NOLINT(implicit)
  ConstantExpr(int c) : ConstantExpr(Rational(c)) {}     // NOLINT(implicit)
  ConstantExpr(MPoly num, MPoly den = MPoly(1));
  static ConstantExpr symbol(const std::string& name);

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> rational_value() const;
  std::set<std::string> symbols() const;
  // True when the leading numerator coefficient is negative.
  bool looks_negative() const;

  ConstantExpr operator-() const;
  friend ConstantExpr operator+(const ConstantExpr& a, const ConstantExpr& b);
  friend ConstantExpr operator-(const ConstantExpr& a, const ConstantExpr& b);
  friend ConstantExpr operator*(const ConstantExpr& a, const ConstantExpr& b);
  friend ConstantExpr operator/(const ConstantExpr& a, const ConstantExpr& b);
  ConstantExpr& operator+=(const ConstantExpr& o) { return *this = *this + o; }
  ConstantExpr& operator-=(const ConstantExpr& o) { return *this = *this - o; }
  ConstantExpr& operator*=(const ConstantExpr& o) { return *this = *this * o; }
  ConstantExpr pow(int e) const;
  friend bool operator==(const ConstantExpr& a, const ConstantExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws if the denominator vanishes under the binding.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  std::string to_string() const;
  // Adds parentheses when the text is not a single factor.
  std::string to_factor_string() const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

ConstantExpr parse_constant(const std::string& text);

}  // namespace einstrength
