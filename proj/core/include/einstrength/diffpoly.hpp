#pragma once

#include "einstrength/constant_expr.hpp"
#include "einstrength/lattice.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace einstrength {

class Shift {
 public:
  Shift() = default;
  explicit Shift(Coords exponents) : k_(std::move(exponents)) {}
  static Shift identity(std::size_t m) { return Shift(Coords(m, 0)); }
  static Shift unit(std::size_t m, std::size_t i, long power = 1);

  const Coords& exponents() const { return k_; }
  std::size_t dim() const { return k_.size(); }
  long order() const;
  bool is_identity() const;
  Shift compose(const Shift& o) const;
  Shift inverse() const;
  Shift operator*(const Shift& o) const { return compose(o); }
  auto operator<=>(const Shift&) const = default;

 private:
  Coords k_;
};

struct Term {
  Shift shift;
  std::size_t ind = 0;
  auto operator<=>(const Term&) const = default;
};

// Translation and indeterminate names used for display.
struct Naming {
  std::vector<std::string> translations;
  std::vector<std::string> indeterminates;

  static Naming standard(std::size_t m, std::size_t n);
  std::string shift(const Shift& g) const;
  std::string term(const Term& t) const;
};

class Ranking {
 public:
  // Empty vectors mean the identity permutation of whatever size is in use.
  Ranking() = default;
  Ranking(std::vector<std::size_t> translation_priority, std::vector<std::size_t> indeterminate_priority);
  static Ranking standard() { return Ranking(); }

  // Translations listed from most to least significant.
  const std::vector<std::size_t>& translation_priority() const { return tp_; }
  // Indeterminates listed from lowest to highest.
  const std::vector<std::size_t>& indeterminate_priority() const { return ip_; }
  bool is_standard() const;
  void validate(std::size_t m, std::size_t n) const;

  std::vector<long> key(const Term& t) const;
  Cmp compare(const Term& u, const Term& v) const;
  bool less(const Term& u, const Term& v) const { return compare(u, v) == Cmp::Less; }
  std::string to_string() const;

  bool operator==(const Ranking&) const = default;

 private:
  std::size_t weight(std::size_t ind) const;
  std::vector<std::size_t> tp_;
  std::vector<std::size_t> ip_;
  std::vector<std::size_t> ip_weight_;
};

Cmp compare_terms(const Ranking& rk, const Term& u, const Term& v);

enum class TransformKind { No, Improper, Proper };
TransformKind is_transform(const Term& u, const Term& v);

// Factors sorted by decreasing standard ranking.
using PowerProduct = std::vector<std::pair<Term, unsigned>>;

struct PowerProductLess {
  bool operator()(const PowerProduct& a, const PowerProduct& b) const;
};

class SigmaPolynomial {
 public:
  using Monomials = std::map<PowerProduct, ConstantExpr, PowerProductLess>;

  SigmaPolynomial() = default;
  SigmaPolynomial(std::size_t m, std::size_t n) : m_(m), n_(n) {}
  static SigmaPolynomial constant(std::size_t m, std::size_t n, const ConstantExpr& c);
  static SigmaPolynomial term(std::size_t m, std::size_t n, const Term& t, const ConstantExpr& c = 1,
                              unsigned power = 1);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const Monomials& monomials() const { return mons_; }
  std::size_t size() const { return mons_.size(); }
  bool is_zero() const { return mons_.empty(); }
  // True when no term occurs (an element of the ground field).
  bool is_constant() const;
  ConstantExpr constant_part() const;
  ConstantExpr coefficient(const PowerProduct& pp) const;

  void add_monomial(PowerProduct pp, const ConstantExpr& c);

  SigmaPolynomial operator-() const;
  SigmaPolynomial operator+(const SigmaPolynomial& o) const;
  SigmaPolynomial operator-(const SigmaPolynomial& o) const;
  SigmaPolynomial operator*(const SigmaPolynomial& o) const;
  SigmaPolynomial& operator+=(const SigmaPolynomial& o);
  SigmaPolynomial& operator-=(const SigmaPolynomial& o);
  SigmaPolynomial scaled(const ConstantExpr& c) const;
  SigmaPolynomial pow(unsigned e) const;
  bool operator==(const SigmaPolynomial& o) const;

  SigmaPolynomial shifted(const Shift& g) const;

  std::set<Term> terms() const;
  std::set<std::size_t> indeterminates() const;
  long max_order() const;

  Term leader(const Ranking& rk) const;
  unsigned degree_in(const Term& u) const;
  unsigned degree_in_leader(const Ranking& rk) const;
  SigmaPolynomial initial(const Ranking& rk) const;

  bool is_linear() const;
  bool is_quasi_linear(const Ranking& rk) const;

  // Replaces named constants by rationals; throws on unbound or vanishing denominators.
  SigmaPolynomial bind(const std::map<std::string, Rational>& values) const;
  std::set<std::string> constant_symbols() const;

  std::string to_string(const Naming& names) const;
  std::string to_string() const;

 private:
  void check_dims(const SigmaPolynomial& o) const;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  Monomials mons_;
};

SigmaPolynomial apply_shift(const Shift& g, const SigmaPolynomial& a);

}  // namespace einstrength
