#pragma once

#include "einstrength/charset.hpp"
#include "einstrength/lattice.hpp"
#include "einstrength/numpoly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace einstrength {

struct ConstantDecl {
  std::string name;
  bool nonzero = true;
  bool operator==(const ConstantDecl&) const = default;
};

struct DifferenceSystem {
  std::vector<std::string> translations;
  std::vector<std::string> indeterminates;
  std::vector<ConstantDecl> constants;
  std::vector<SigmaPolynomial> polynomials;
  std::optional<Ranking> ranking;

  std::size_t m() const { return translations.size(); }
  std::size_t n() const { return indeterminates.size(); }
  Naming naming() const { return Naming{translations, indeterminates}; }
  // Checks dimensions and that every coefficient symbol is declared.
  void validate() const;
};

enum class BlockRoute { Linear, QuasiLinear };

struct BlockReport {
  BlockRoute route = BlockRoute::Linear;
  std::vector<std::size_t> generators;
  std::vector<std::size_t> leader_indeterminates;
  std::vector<std::size_t> indeterminates;
  AutoreducedSet charset;
  // Shifts carrying the generator to each element (quasi-linear blocks only).
  std::vector<Shift> shifts;
};

struct StrengthReport {
  AutoreducedSet charset;
  std::map<std::size_t, LatticeSet> leader_sets;
  std::map<std::size_t, NumericalPolynomial> per_indeterminate;
  NumericalPolynomial psi;
  long sigma_tr_deg = 0;
  std::vector<BlockReport> blocks;
  Ranking ranking;
};

std::map<std::size_t, LatticeSet> leader_exponent_sets(const AutoreducedSet& phi, std::size_t n, std::size_t m);
long sigma_tr_deg(const NumericalPolynomial& psi, std::size_t m);

StrengthReport strength_of_system(const DifferenceSystem& sys, const Ranking& rk);
StrengthReport strength_of_system(const DifferenceSystem& sys);

}  // namespace einstrength
