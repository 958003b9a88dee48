#include "properties.hpp"

#include "einstrength/charset.hpp"
#include "einstrength/errors.hpp"
#include "einstrength/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace einstrength::testing {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational nonzero_rational(Rng& rng) {
  long a = 0;
  while (a == 0) a = uniform(rng, -9, 9);
  Rational q(a, uniform(rng, 1, 5));
  q.canonicalize();
  return q;
}

std::vector<Ranking> rankings_for(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Ranking> out;
  do {
    out.emplace_back(p, std::vector<std::size_t>{});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Coords in_orthant(Rng& rng, const std::vector<int>& signs, long bound) {
  Coords c;
  for (int s : signs) c.push_back(s * uniform(rng, 0, bound));
  return c;
}

Coords add(const Coords& a, const Coords& b) {
  Coords c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

std::string describe(const Term& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.shift.dim(); ++i) os << (i ? "," : "") << t.shift.exponents()[i];
  os << ")y" << t.ind + 1;
  return os.str();
}

SigmaPolynomial random_linear(Rng& rng, std::size_t m, std::size_t n, std::size_t terms, long bound) {
  SigmaPolynomial p(m, n);
  for (std::size_t k = 0; k < terms; ++k) {
    Coords c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(uniform(rng, -bound, bound));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    p += SigmaPolynomial::term(m, n, Term{Shift(c), j}, nonzero_rational(rng));
  }
  if (uniform(rng, 0, 2) == 0) p += SigmaPolynomial::constant(m, n, nonzero_rational(rng));
  return p;
}

}  // namespace

PropertyResult ranking_axioms(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  PropertyResult res;
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 2, 3));
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto ranks = rankings_for(m);
    const Ranking& rk = ranks[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks.size()) - 1))];
    std::vector<int> signs;
    for (std::size_t i = 0; i < m; ++i) signs.push_back(uniform(rng, 0, 1) ? 1 : -1);
    auto ind = [&] { return static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1)); };
    Term u{Shift(in_orthant(rng, signs, 3)), ind()};
    Term v{Shift(in_orthant(rng, signs, 3)), ind()};
    if (rk.less(v, u)) std::swap(u, v);
    Coords g = in_orthant(rng, signs, 3);
    Term gu{Shift(add(g, u.shift.exponents())), u.ind};
    Term gv{Shift(add(g, v.shift.exponents())), v.ind};
    const bool first = !rk.less(gu, u);
    const bool second = !rk.less(gv, gu);
    ++res.total;
    if (first && second) {
      ++res.passed;
    } else if (res.first_failure.empty()) {
      res.first_failure = "ranking " + rk.to_string() + ": u = " + describe(u) + ", v = " + describe(v) +
                          (first ? " (monotonicity)" : " (u <= gamma u)");
    }
  }
  return res;
}

PropertyResult reduce_witness(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  PropertyResult res;
  while (res.total < cases) {
    const std::size_t m = 2;
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::vector<SigmaPolynomial> gens;
    const long count = uniform(rng, 1, 3);
    for (long i = 0; i < count; ++i)
      gens.push_back(random_linear(rng, m, n, static_cast<std::size_t>(uniform(rng, 2, 4)), 2));
    AutoreducedSet a;
    try {
      a = autoreduce(gens, Ranking());
    } catch (const UnsupportedSystem&) {
      continue;
    }
    SigmaPolynomial d = random_linear(rng, m, n, static_cast<std::size_t>(uniform(rng, 2, 6)), 3);
    Reduction r = reduce(d, a, true);
    bool reduced = std::all_of(a.elements().begin(), a.elements().end(),
                               [&](const auto& b) { return is_reduced(a.ranking(), r.remainder, b); });
    bool witness = check_witness(d, a.elements(), r);
    ++res.total;
    if (reduced && witness && a.is_autoreduced()) {
      ++res.passed;
    } else if (res.first_failure.empty()) {
      res.first_failure = "D = " + d.to_string() + (reduced ? "" : " remainder not reduced") +
                          (witness ? "" : " witness identity fails");
    }
  }
  return res;
}

PropertyResult leader_containment(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  PropertyResult res;
  const Ranking rk;
  while (res.total < cases) {
    const std::size_t m = 2;
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 2));
    auto random_term = [&] {
      Coords c{uniform(rng, -2, 2), uniform(rng, -2, 2)};
      return Term{Shift(c), static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))};
    };
    std::vector<Term> ts;
    for (int i = 0; i < 4; ++i) ts.push_back(random_term());
    std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) { return rk.less(x, y); });
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (ts.size() < 2) continue;
    const Term leader = ts.back();
    SigmaPolynomial a = SigmaPolynomial::term(m, n, leader, nonzero_rational(rng));
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      a += SigmaPolynomial::term(m, n, ts[i], nonzero_rational(rng), static_cast<unsigned>(uniform(rng, 1, 3)));
    if (ts.size() > 2) a += SigmaPolynomial::term(m, n, ts[0], nonzero_rational(rng)) *
                           SigmaPolynomial::term(m, n, ts[1], 1);
    if (!a.is_quasi_linear(rk)) continue;

    const long p = uniform(rng, 1, 3);
    std::set<Coords> shifts;
    while (static_cast<long>(shifts.size()) < p) shifts.insert(Coords{uniform(rng, -2, 2), uniform(rng, -2, 2)});
    SigmaPolynomial combo(m, n);
    for (const auto& g : shifts) combo += a.shifted(Shift(g)).scaled(nonzero_rational(rng));
    const auto terms = combo.terms();
    bool found = std::any_of(shifts.begin(), shifts.end(), [&](const Coords& g) {
      return terms.count(Term{Shift(add(g, leader.shift.exponents())), leader.ind}) != 0;
    });
    ++res.total;
    if (found) {
      ++res.passed;
    } else if (res.first_failure.empty()) {
      res.first_failure = "A = " + a.to_string() + ", combination " + combo.to_string();
    }
  }
  return res;
}

PropertyResult binomial_round_trip(std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  PropertyResult res;
  for (std::size_t k = 0; k < cases; ++k) {
    std::vector<Rational> c;
    const long deg = uniform(rng, 0, 6);
    for (long i = 0; i <= deg; ++i) c.push_back(uniform(rng, 0, 3) == 0 ? Rational(0) : nonzero_rational(rng));
    NumericalPolynomial f(c);
    auto basis = f.binomial_basis();
    NumericalPolynomial g = NumericalPolynomial::from_binomial_basis(basis);
    ++res.total;
    if (f == g) {
      ++res.passed;
    } else if (res.first_failure.empty()) {
      res.first_failure = f.to_string() + " came back as " + g.to_string();
    }
  }
  return res;
}

PropertyResult lattice_oracle(bool naturals, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  PropertyResult res;
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    const long count = uniform(rng, 0, 5);
    std::vector<Coords> pts;
    long threshold = 0;
    for (long i = 0; i < count; ++i) {
      Coords c;
      for (std::size_t j = 0; j < m; ++j) {
        c.push_back(naturals ? uniform(rng, 0, 4) : uniform(rng, -4, 4));
        threshold += std::labs(c.back());
      }
      pts.push_back(c);
    }
    LatticeSet s(naturals ? Ambient::Naturals : Ambient::Integers, m, pts);
    NumericalPolynomial p = naturals ? omega(s) : phi(s);
    bool ok = true;
    std::string why;
    for (long r = threshold; r <= threshold + static_cast<long>(m) + 2; ++r) {
      Integer counted = naturals ? count_V(s, r) : count_W(s, r);
      if (Rational(counted) != p.evaluate(r)) {
        ok = false;
        why = s.to_string() + " at r = " + std::to_string(r) + ": polynomial " + p.evaluate(r).get_str() +
              ", enumeration " + counted.get_str();
        break;
      }
    }
    ++res.total;
    if (ok) {
      ++res.passed;
    } else if (res.first_failure.empty()) {
      res.first_failure = why;
    }
  }
  return res;
}

}  // namespace einstrength::testing
