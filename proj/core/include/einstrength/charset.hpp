#pragma once

#include "einstrength/diffpoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace einstrength {

// Def. rank: leader first, then degree in the leader.
Cmp rank_compare(const Ranking& rk, const SigmaPolynomial& a, const SigmaPolynomial& b);

class AutoreducedSet {
 public:
  AutoreducedSet() = default;
  // Sorts by increasing rank; rejects ground-field elements and repeated leaders.
  AutoreducedSet(std::vector<SigmaPolynomial> elements, Ranking rk);

  const std::vector<SigmaPolynomial>& elements() const { return elems_; }
  const Ranking& ranking() const { return rk_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const SigmaPolynomial& operator[](std::size_t i) const { return elems_[i]; }
  std::vector<Term> leaders() const;
  // Full mutual-reduction check.
  bool is_autoreduced() const;

 private:
  std::vector<SigmaPolynomial> elems_;
  Ranking rk_;
};

Cmp set_rank_compare(const AutoreducedSet& a, const AutoreducedSet& b);

bool is_reduced(const Ranking& rk, const SigmaPolynomial& a, const SigmaPolynomial& b);

struct InitialFactor {
  Shift shift;
  std::size_t element;
};

struct CombinationTerm {
  SigmaPolynomial cofactor;
  Shift shift;
  std::size_t element;
};

struct Reduction {
  SigmaPolynomial remainder;
  // Shifted initials multiplied into D, in order.
  std::vector<InitialFactor> initials;
  // Product of those shifted initials (1 when every initial is a constant).
  SigmaPolynomial multiplier;
  // multiplier * D - remainder = sum of cofactor * (shift applied to element); filled on request.
  std::vector<CombinationTerm> combination;
};

Reduction reduce(const Ranking& rk, const SigmaPolynomial& d, const std::vector<SigmaPolynomial>& set,
                 bool with_witness = false);
Reduction reduce(const SigmaPolynomial& d, const AutoreducedSet& a, bool with_witness = false);

// Checks multiplier * D - remainder against the recorded combination.
bool check_witness(const SigmaPolynomial& d, const std::vector<SigmaPolynomial>& set, const Reduction& r);

AutoreducedSet autoreduce(std::vector<SigmaPolynomial> b, const Ranking& rk);

std::vector<Term> least_common_transforms(const Term& u, const Term& v);

struct CompletionOptions {
  int max_rounds = 64;
  // Box radius for shift candidates; negative selects spread + 2.
  int radius = -1;
};

AutoreducedSet coherence_complete(const AutoreducedSet& a, const CompletionOptions& opt = {});
bool is_coherent(const AutoreducedSet& a, int radius = -1);

struct OrbitCharset {
  AutoreducedSet set;
  // shifts[i] carries the input polynomial to set[i].
  std::vector<Shift> shifts;
  int radius = 0;
};

OrbitCharset orbit_charset(const SigmaPolynomial& a, const Ranking& rk);
AutoreducedSet charset_quasilinear(const SigmaPolynomial& a, const Ranking& rk);

// Largest coordinate spread of the term exponents of the given polynomials.
long exponent_spread(const std::vector<SigmaPolynomial>& polys);

}  // namespace einstrength
