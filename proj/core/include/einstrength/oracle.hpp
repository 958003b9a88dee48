#pragma once

#include "einstrength/schemes.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace einstrength {

constexpr std::uint64_t kMaxEnumeration = 10'000'000;

Integer count_V(const LatticeSet& e, long r);
Integer count_W(const LatticeSet& a, long r);

struct GridInstance {
  // Every coefficient must already be a rational.
  DifferenceSystem system;
  long r = 0;
  // Starting padding radius; zero or less means r plus the largest shift order.
  long R = 0;
};

struct GridResult {
  long strength = 0;
  long relations = 0;
  long radius = 0;
};

constexpr long kMaxPaddingOverR = 10;

GridResult grid_strength_detailed(const GridInstance& g);
long grid_strength(const GridInstance& g);

struct VerificationCheck {
  std::size_t trial = 0;
  long r = 0;
  Integer expected;
  long observed = 0;
  long radius = 0;
  std::map<std::string, Rational> bindings;
  bool ok() const { return expected == observed; }
};

struct VerificationReport {
  std::string label;
  SchemeKind scheme = SchemeKind::Forward;
  NumericalPolynomial expected_psi;
  std::uint64_t seed = 0;
  std::vector<VerificationCheck> checks;

  std::size_t passed() const;
  bool ok() const { return passed() == checks.size(); }
  std::string summary() const;
};

std::map<std::string, Rational> random_bindings(const DifferenceSystem& sys, std::mt19937_64& rng);

VerificationReport randomized_verify(const DifferenceSystem& sys, const NumericalPolynomial& expected,
                                     long r_min, long r_max, std::size_t trials, std::uint64_t seed);
VerificationReport randomized_verify(const CatalogEntry& entry, SchemeKind scheme, long r_min, long r_max,
                                     std::size_t trials, std::uint64_t seed);

}  // namespace einstrength
