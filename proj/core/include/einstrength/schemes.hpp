#pragma once

#include "einstrength/strength.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace einstrength {

enum class SchemeKind { Forward, Symmetric, CrankNicholson };

std::string to_string(SchemeKind s);
SchemeKind parse_scheme(const std::string& s);

enum class Derivative { None, X, XX, T };

struct JetVar {
  std::size_t unknown = 0;
  Derivative d = Derivative::None;
  auto operator<=>(const JetVar&) const = default;
};

// Polynomial in the unknowns and their first/second x-derivatives and first t-derivatives.
class PDEPolynomial {
 public:
  using Key = std::vector<std::pair<JetVar, unsigned>>;

  PDEPolynomial() = default;
  PDEPolynomial(const ConstantExpr& c);  // NOLINT(implicit)
  PDEPolynomial(long c) : PDEPolynomial(ConstantExpr(c)) {}  // NOLINT(implicit)
  static PDEPolynomial var(std::size_t unknown, Derivative d = Derivative::None);

  const std::map<Key, ConstantExpr>& terms() const { return terms_; }

  friend PDEPolynomial operator+(const PDEPolynomial& a, const PDEPolynomial& b);
  friend PDEPolynomial operator-(const PDEPolynomial& a, const PDEPolynomial& b);
  friend PDEPolynomial operator*(const PDEPolynomial& a, const PDEPolynomial& b);
  PDEPolynomial operator-() const;
  bool operator==(const PDEPolynomial&) const = default;

 private:
  void add(Key k, const ConstantExpr& c);
  std::map<Key, ConstantExpr> terms_;
};

struct PDESpec {
  std::vector<std::string> unknowns;
  std::vector<PDEPolynomial> equations;
  std::vector<ConstantDecl> constants;
};

DifferenceSystem discretize(const PDESpec& pde, SchemeKind scheme);

// The family u_xx + (a u + b) u_x + c u_t + F(u) = 0.
PDESpec reaction_diffusion_family(const ConstantExpr& a, const ConstantExpr& b, const ConstantExpr& c,
                                  const PDEPolynomial& f, std::vector<ConstantDecl> constants);

struct CatalogEntry {
  std::string name;
  std::string title;
  PDESpec pde;
  std::size_t components = 1;
  std::map<SchemeKind, DifferenceSystem> forms;
  // Per component pair for chromatography, whole system otherwise.
  std::map<SchemeKind, NumericalPolynomial> expected_psi;
  std::map<SchemeKind, Ranking> ranking;
  std::vector<std::string> notes;

  std::vector<SchemeKind> schemes() const;
  const DifferenceSystem& form(SchemeKind s) const;
  NumericalPolynomial expected_total(SchemeKind s) const;
  // Linear after binding constants; these are the forms the grid oracle accepts.
  bool is_linear(SchemeKind s) const;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_lookup(const std::string& name, std::size_t components = 1);

// Linear part of the reaction-kinetics system (its first two equations).
DifferenceSystem reaction_linear_subsystem(SchemeKind s);
// FitzHugh-Nagumo without a time derivative (c = 0).
PDESpec fitzhugh_nagumo_literal();

}  // namespace einstrength
