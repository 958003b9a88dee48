#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace einstrength {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Cmp { Less, Equal, Greater };

const char* to_string(Cmp c);

class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  explicit NumericalPolynomial(std::vector<Rational> power_coefficients);

  static NumericalPolynomial constant(const Rational& c);
  static NumericalPolynomial monomial(const Rational& c, std::size_t k);
  // C(t+m-b, m) expanded in t.
  static NumericalPolynomial shifted_binomial(unsigned m, long b);
  static NumericalPolynomial from_binomial_basis(std::span<const Rational> a);

  bool is_zero() const { return coeffs_.empty(); }
  // nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& r) const;
  Rational evaluate(long r) const { return evaluate(Rational(r)); }

  std::vector<Rational> binomial_basis() const;

  NumericalPolynomial operator+(const NumericalPolynomial& g) const;
  NumericalPolynomial operator-(const NumericalPolynomial& g) const;
  NumericalPolynomial operator*(const NumericalPolynomial& g) const;
  NumericalPolynomial& operator+=(const NumericalPolynomial& g);
  NumericalPolynomial scaled(const Rational& c) const;

  bool operator==(const NumericalPolynomial& g) const { return coeffs_ == g.coeffs_; }

  std::string to_string() const;
  std::string to_binomial_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

NumericalPolynomial add(const NumericalPolynomial& f, const NumericalPolynomial& g);
NumericalPolynomial scale(const NumericalPolynomial& f, const Rational& c);
Cmp eventual_compare(const NumericalPolynomial& f, const NumericalPolynomial& g);

// Parses the expanded display form, e.g. "2t^2 + 7t + 1" or "6t - 1".
NumericalPolynomial parse_numpoly(const std::string& text);

Integer binomial(long n, long k);
Integer factorial(unsigned n);

}  // namespace einstrength
