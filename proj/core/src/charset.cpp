#include "einstrength/charset.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace einstrength {

namespace {

SigmaPolynomial one_like(const SigmaPolynomial& p) { return SigmaPolynomial::constant(p.m(), p.n(), 1); }

// Coefficient of u^e in p, as a polynomial free of u^e.
SigmaPolynomial coefficient_of_power(const SigmaPolynomial& p, const Term& u, unsigned e) {
  SigmaPolynomial r(p.m(), p.n());
  for (const auto& [pp, c] : p.monomials()) {
    auto it = std::find_if(pp.begin(), pp.end(), [&](const auto& f) { return f.first == u; });
    unsigned have = it == pp.end() ? 0 : it->second;
    if (have != e) continue;
    PowerProduct rest;
    for (const auto& f : pp)
      if (!(f.first == u)) rest.push_back(f);
    r.add_monomial(std::move(rest), c);
  }
  return r;
}

Shift difference(const Shift& to, const Shift& from) { return to.compose(from.inverse()); }

bool shift_key_less(const Shift& a, const Shift& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.exponents() < b.exponents();
}

std::vector<Shift> box_shifts(std::size_t m, long radius) {
  std::vector<Shift> out;
  Coords k(m, -radius);
  if (m == 0) return {Shift(Coords{})};
  while (true) {
    out.emplace_back(k);
    std::size_t i = 0;
    while (i < m && k[i] == radius) k[i++] = -radius;
    if (i == m) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), shift_key_less);
  return out;
}

long max_abs(const Shift& g) {
  long r = 0;
  for (long x : g.exponents()) r = std::max(r, std::abs(x));
  return r;
}

struct ElementInfo {
  Term leader;
  unsigned degree;
  SigmaPolynomial initial;
  std::optional<ConstantExpr> constant_initial;
};

ElementInfo info_of(const Ranking& rk, const SigmaPolynomial& a) {
  ElementInfo e{a.leader(rk), 0, {}, std::nullopt};
  e.degree = a.degree_in(e.leader);
  e.initial = coefficient_of_power(a, e.leader, e.degree);
  if (e.initial.is_constant()) e.constant_initial = e.initial.constant_part();
  return e;
}

}  // namespace

Cmp rank_compare(const Ranking& rk, const SigmaPolynomial& a, const SigmaPolynomial& b) {
  Term ua = a.leader(rk), ub = b.leader(rk);
  Cmp c = rk.compare(ua, ub);
  if (c != Cmp::Equal) return c;
  unsigned da = a.degree_in(ua), db = b.degree_in(ub);
  if (da == db) return Cmp::Equal;
  return da < db ? Cmp::Less : Cmp::Greater;
}

AutoreducedSet::AutoreducedSet(std::vector<SigmaPolynomial> elements, Ranking rk)
    : elems_(std::move(elements)), rk_(std::move(rk)) {
  for (const auto& e : elems_)
    if (e.is_constant()) throw UnsupportedSystem("autoreduced set contains an element of the ground field");
  std::stable_sort(elems_.begin(), elems_.end(), [&](const SigmaPolynomial& a, const SigmaPolynomial& b) {
    return rank_compare(rk_, a, b) == Cmp::Less;
  });
  for (std::size_t i = 1; i < elems_.size(); ++i)
    if (elems_[i].leader(rk_) == elems_[i - 1].leader(rk_))
      throw UnsupportedSystem("autoreduced set has two elements with the same leader");
}

std::vector<Term> AutoreducedSet::leaders() const {
  std::vector<Term> out;
  for (const auto& e : elems_) out.push_back(e.leader(rk_));
  return out;
}

bool AutoreducedSet::is_autoreduced() const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j)
      if (i != j && !is_reduced(rk_, elems_[i], elems_[j])) return false;
  return true;
}

Cmp set_rank_compare(const AutoreducedSet& a, const AutoreducedSet& b) {
  const Ranking& rk = a.ranking();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = rank_compare(rk, a[i], b[i]);
    if (c != Cmp::Equal) return c;
  }
  if (a.size() == b.size()) return Cmp::Equal;
  return a.size() > b.size() ? Cmp::Less : Cmp::Greater;
}

bool is_reduced(const Ranking& rk, const SigmaPolynomial& a, const SigmaPolynomial& b) {
  Term u = b.leader(rk);
  unsigned d = b.degree_in(u);
  for (const auto& [pp, c] : a.monomials())
    for (const auto& [t, e] : pp)
      if (e >= d && is_transform(u, t) != TransformKind::No) return false;
  return true;
}

Reduction reduce(const Ranking& rk, const SigmaPolynomial& d, const std::vector<SigmaPolynomial>& set,
                 bool with_witness) {
  std::vector<ElementInfo> infos;
  infos.reserve(set.size());
  for (const auto& a : set) infos.push_back(info_of(rk, a));

  Reduction r;
  r.remainder = d;
  r.multiplier = one_like(d.is_zero() && !set.empty() ? set.front() : d);
  while (true) {
    std::optional<Term> best;
    std::size_t best_i = 0;
    for (const auto& [pp, c] : r.remainder.monomials())
      for (const auto& [t, e] : pp) {
        if (best) {
          Cmp cmp = rk.compare(t, *best);
          if (cmp == Cmp::Less) continue;
          if (cmp == Cmp::Equal) continue;
        }
        for (std::size_t i = 0; i < infos.size(); ++i)
          if (e >= infos[i].degree && is_transform(infos[i].leader, t) != TransformKind::No) {
            best = t;
            best_i = i;
            break;
          }
      }
    if (!best) break;
    // Prefer the lowest index among elements whose leader reaches the chosen term.
    unsigned e_max = r.remainder.degree_in(*best);
    for (std::size_t i = 0; i < infos.size(); ++i)
      if (e_max >= infos[i].degree && is_transform(infos[i].leader, *best) != TransformKind::No) {
        best_i = i;
        break;
      }
    const ElementInfo& info = infos[best_i];
    Shift g = difference(best->shift, info.leader.shift);
    SigmaPolynomial b = set[best_i].shifted(g);
    if (!(b.leader(rk) == *best))
      throw std::logic_error("ranking does not carry leaders along transforms");
    SigmaPolynomial h = coefficient_of_power(r.remainder, *best, e_max);
    SigmaPolynomial factor = h;
    if (e_max > info.degree)
      factor = h * SigmaPolynomial::term(d.m(), d.n(), *best, 1, e_max - info.degree);
    if (info.constant_initial) {
      SigmaPolynomial cof = factor.scaled(ConstantExpr(1) / *info.constant_initial);
      r.remainder -= cof * b;
      if (with_witness) r.combination.push_back({cof, g, best_i});
    } else {
      SigmaPolynomial ib = info.initial.shifted(g);
      r.remainder = ib * r.remainder - factor * b;
      r.multiplier = ib * r.multiplier;
      r.initials.push_back({g, best_i});
      if (with_witness) {
        for (auto& ct : r.combination) ct.cofactor = ib * ct.cofactor;
        r.combination.push_back({factor, g, best_i});
      }
    }
  }
  return r;
}

Reduction reduce(const SigmaPolynomial& d, const AutoreducedSet& a, bool with_witness) {
  return reduce(a.ranking(), d, a.elements(), with_witness);
}

bool check_witness(const SigmaPolynomial& d, const std::vector<SigmaPolynomial>& set, const Reduction& r) {
  SigmaPolynomial lhs = r.multiplier * d - r.remainder;
  SigmaPolynomial rhs(d.m(), d.n());
  for (const auto& ct : r.combination) rhs += ct.cofactor * set.at(ct.element).shifted(ct.shift);
  return lhs == rhs;
}

AutoreducedSet autoreduce(std::vector<SigmaPolynomial> b, const Ranking& rk) {
  std::vector<SigmaPolynomial> cur;
  for (auto& p : b) {
    if (p.is_zero()) continue;
    if (p.is_constant()) throw UnsupportedSystem("inconsistent system: a nonzero constant lies in the ideal");
    cur.push_back(std::move(p));
  }
  auto by_rank = [&](const SigmaPolynomial& x, const SigmaPolynomial& y) {
    return rank_compare(rk, x, y) == Cmp::Less;
  };
  std::stable_sort(cur.begin(), cur.end(), by_rank);
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < cur.size() && !changed; ++j) {
        if (is_reduced(rk, cur[j], cur[i])) continue;
        SigmaPolynomial rem = reduce(rk, cur[j], {cur[i]}).remainder;
        cur.erase(cur.begin() + static_cast<long>(j));
        if (!rem.is_zero()) {
          if (rem.is_constant())
            throw UnsupportedSystem("inconsistent system: a nonzero constant lies in the ideal");
          cur.push_back(std::move(rem));
        }
        std::stable_sort(cur.begin(), cur.end(), by_rank);
        changed = true;
      }
    if (!changed) break;
  }
  return AutoreducedSet(std::move(cur), rk);
}

std::vector<Term> least_common_transforms(const Term& u, const Term& v) {
  if (u.ind != v.ind) return {};
  const auto& a = u.shift.exponents();
  const auto& b = v.shift.exponents();
  if (a.size() != b.size()) throw DimensionMismatch("terms of different dimension");
  Coords w(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] > 0 && b[k] < 0) || (a[k] < 0 && b[k] > 0)) return {};
    long mag = std::max(std::abs(a[k]), std::abs(b[k]));
    w[k] = (a[k] < 0 || b[k] < 0) ? -mag : mag;
  }
  return {Term{Shift(std::move(w)), u.ind}};
}

long exponent_spread(const std::vector<SigmaPolynomial>& polys) {
  long spread = 0;
  std::size_t m = polys.empty() ? 0 : polys.front().m();
  for (std::size_t k = 0; k < m; ++k) {
    bool any = false;
    long lo = 0, hi = 0;
    for (const auto& p : polys)
      for (const auto& t : p.terms()) {
        long x = t.shift.exponents()[k];
        if (!any) {
          lo = hi = x;
          any = true;
        }
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    spread = std::max(spread, hi - lo);
  }
  return spread;
}

namespace {

struct Candidate {
  SigmaPolynomial rem;
  int kind;  // 0: shifted element, 1: common-transform pair
  Shift key;
  std::size_t element;
};

// Remainders that witness a failure of coherence; stops after the first when asked.
std::vector<Candidate> coherence_candidates(const AutoreducedSet& phi, long radius, bool first_only) {
  const Ranking& rk = phi.ranking();
  std::vector<Candidate> out;
  if (phi.empty()) return out;
  const std::size_t m = phi[0].m();
  auto shifts = box_shifts(m, radius);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Term u = phi[i].leader(rk);
    for (const auto& g : shifts) {
      if (g.is_identity()) continue;
      Term gu{u.shift.compose(g), u.ind};
      if (is_transform(u, gu) != TransformKind::No) continue;
      SigmaPolynomial rem = reduce(phi[i].shifted(g), phi).remainder;
      if (rem.is_zero()) continue;
      out.push_back({std::move(rem), 0, g, i});
      if (first_only) return out;
    }
  }
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = i + 1; j < phi.size(); ++j) {
      Term ui = phi[i].leader(rk), uj = phi[j].leader(rk);
      for (const auto& w : least_common_transforms(ui, uj)) {
        Shift g1 = difference(w.shift, ui.shift), g2 = difference(w.shift, uj.shift);
        SigmaPolynomial ii = phi[i].initial(rk), ij = phi[j].initial(rk);
        SigmaPolynomial s = ij.shifted(g2) * phi[i].shifted(g1) - ii.shifted(g1) * phi[j].shifted(g2);
        SigmaPolynomial rem = reduce(s, phi).remainder;
        if (rem.is_zero()) continue;
        out.push_back({std::move(rem), 1, w.shift, i});
        if (first_only) return out;
      }
    }
  return out;
}

long completion_radius(const AutoreducedSet& a, int radius) {
  if (radius >= 0) return radius;
  return exponent_spread(a.elements()) + 2;
}

}  // namespace

AutoreducedSet coherence_complete(const AutoreducedSet& a, const CompletionOptions& opt) {
  AutoreducedSet phi = a;
  const Ranking& rk = a.ranking();
  const long radius = completion_radius(a, opt.radius);
  for (int round = 0; round < opt.max_rounds; ++round) {
    auto cands = coherence_candidates(phi, radius, false);
    if (cands.empty()) return phi;
    auto best = std::min_element(cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
      Cmp c = rank_compare(rk, x.rem, y.rem);
      if (c != Cmp::Equal) return c == Cmp::Less;
      if (x.kind != y.kind) return x.kind < y.kind;
      if (!(x.key == y.key)) return shift_key_less(x.key, y.key);
      return x.element < y.element;
    });
    std::vector<SigmaPolynomial> next = phi.elements();
    next.push_back(best->rem);
    phi = autoreduce(std::move(next), rk);
  }
  throw ResourceGuard("coherence completion did not close after " + std::to_string(opt.max_rounds) +
                      " rounds; current set has " + std::to_string(phi.size()) + " elements");
}

bool is_coherent(const AutoreducedSet& a, int radius) {
  return coherence_candidates(a, completion_radius(a, radius), true).empty();
}

OrbitCharset orbit_charset(const SigmaPolynomial& a, const Ranking& rk) {
  if (a.is_constant()) throw UnsupportedSystem("element of the ground field has no characteristic set");
  if (!a.is_quasi_linear(rk))
    throw UnsupportedSystem("polynomial is not quasi-linear under ranking " + rk.to_string());
  const std::size_t m = a.m();
  constexpr long kMaxRadius = 10;
  for (long radius = exponent_spread({a}) + 2;; ++radius) {
    if (radius > kMaxRadius)
      throw ResourceGuard("orbit search for a minimal characteristic set did not close within radius " +
                          std::to_string(kMaxRadius));
    std::vector<std::pair<Shift, Term>> seen;
    for (const auto& g : box_shifts(m, radius)) seen.emplace_back(g, a.shifted(g).leader(rk));
    std::vector<std::pair<Shift, Term>> kept;
    for (const auto& [g, u] : seen) {
      bool minimal = true;
      for (const auto& [h, v] : seen)
        if (is_transform(v, u) == TransformKind::Proper) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      bool dup = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return k.second == u; });
      if (!dup) kept.emplace_back(g, u);
    }
    bool closed = true;
    for (const auto& g : box_shifts(m, radius + 1)) {
      if (max_abs(g) != radius + 1) continue;
      Term u = a.shifted(g).leader(rk);
      bool covered = std::any_of(kept.begin(), kept.end(),
                                 [&](const auto& k) { return is_transform(k.second, u) != TransformKind::No; });
      if (!covered) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    std::vector<std::pair<SigmaPolynomial, Shift>> items;
    for (const auto& [g, u] : kept) items.emplace_back(a.shifted(g), g);
    std::stable_sort(items.begin(), items.end(),
                     [&](const auto& x, const auto& y) { return rank_compare(rk, x.first, y.first) == Cmp::Less; });
    OrbitCharset out;
    std::vector<SigmaPolynomial> elems;
    for (auto& [p, g] : items) {
      elems.push_back(p);
      out.shifts.push_back(g);
    }
    out.set = AutoreducedSet(std::move(elems), rk);
    out.radius = static_cast<int>(radius);
    return out;
  }
}

AutoreducedSet charset_quasilinear(const SigmaPolynomial& a, const Ranking& rk) { return orbit_charset(a, rk).set; }

}  // namespace einstrength
