#include "einstrength/oracle.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace einstrength {

namespace {

Integer simplex_size(std::size_t m, long r) { return binomial(r + static_cast<long>(m), static_cast<long>(m)); }

Integer cross_size(std::size_t m, long r) {
  Integer total = 0;
  for (std::size_t k = 0; k <= m && static_cast<long>(k) <= r; ++k) {
    Integer p2 = 1;
    p2 <<= k;
    total += p2 * binomial(static_cast<long>(m), static_cast<long>(k)) * binomial(r, static_cast<long>(k));
  }
  return total;
}

void guard(const Integer& size) {
  if (size > Integer(static_cast<unsigned long>(kMaxEnumeration)))
    throw ResourceGuard("enumeration budget exceeded: " + size.get_str() + " points");
}

// Visits points of order at most r in lexicographic order.
void enumerate(std::size_t m, long r, bool integers, const std::function<void(const Coords&)>& visit) {
  Coords p(m, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == m) {
      visit(p);
      return;
    }
    for (long v = integers ? -left : 0; v <= left; ++v) {
      p[i] = v;
      rec(i + 1, left - std::labs(v));
    }
  };
  rec(0, r);
}

}  // namespace

Integer count_V(const LatticeSet& e, long r) {
  if (e.ambient() != Ambient::Naturals) throw DimensionMismatch("count_V needs a set in the naturals");
  if (r < 0) return 0;
  guard(simplex_size(e.dim(), r));
  Integer n = 0;
  enumerate(e.dim(), r, false, [&](const Coords& v) {
    for (const auto& p : e.points())
      if (leq_product(p, v)) return;
    ++n;
  });
  return n;
}

Integer count_W(const LatticeSet& a, long r) {
  if (a.ambient() != Ambient::Integers) throw DimensionMismatch("count_W needs a set in the integers");
  if (r < 0) return 0;
  guard(cross_size(a.dim(), r));
  Integer n = 0;
  enumerate(a.dim(), r, true, [&](const Coords& w) {
    for (const auto& p : a.points())
      if (leq_orthant(p, w)) return;
    ++n;
  });
  return n;
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

long order_of(const Coords& c) {
  long s = 0;
  for (long x : c) s += std::labs(x);
  return s;
}

struct LinearForm {
  std::vector<std::pair<Term, Rational>> entries;
};

LinearForm homogeneous_part(const SigmaPolynomial& p) {
  LinearForm f;
  for (const auto& [pp, c] : p.monomials()) {
    if (pp.empty()) continue;
    if (pp.size() != 1 || pp[0].second != 1) throw UnsupportedSystem("grid oracle needs a linear system");
    auto v = c.rational_value();
    if (!v) throw UnsupportedSystem("grid oracle needs numeric coefficients; bind constants first");
    f.entries.emplace_back(pp[0].first, *v);
  }
  return f;
}

long relations_inside(const std::vector<LinearForm>& forms, std::size_t m, std::size_t n, long r, long R) {
  std::vector<Coords> nodes;
  enumerate(m, R, true, [&](const Coords& c) { nodes.push_back(c); });
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](const Coords& a, const Coords& b) { return order_of(a) > order_of(b); });
  std::map<std::pair<Coords, std::size_t>, std::size_t> column;
  std::size_t first_inside = 0;
  for (const auto& c : nodes)
    for (std::size_t j = 0; j < n; ++j) {
      if (order_of(c) > r) ++first_inside;
      column.emplace(std::make_pair(c, j), column.size());
    }

  std::map<std::size_t, SparseRow> pivots;
  auto insert_row = [&](SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead->first, std::move(row));
        return;
      }
      Rational factor = lead->second;
      for (const auto& [c, v] : it->second) {
        Rational& x = row[c];
        x -= factor * v;
        if (x == 0) row.erase(c);
      }
    }
  };

  long reach = 0;
  for (const auto& f : forms)
    for (const auto& [t, v] : f.entries) reach = std::max(reach, t.shift.order());
  std::vector<Coords> gammas;
  enumerate(m, R + reach, true, [&](const Coords& c) { gammas.push_back(c); });
  for (const auto& f : forms) {
    if (f.entries.empty()) continue;
    for (const auto& g : gammas) {
      SparseRow row;
      bool fits = true;
      for (const auto& [t, v] : f.entries) {
        Coords s = t.shift.exponents();
        for (std::size_t i = 0; i < m; ++i) s[i] += g[i];
        if (order_of(s) > R) {
          fits = false;
          break;
        }
        row[column.at({s, t.ind})] += v;
      }
      if (!fits) continue;
      std::erase_if(row, [](const auto& e) { return e.second == 0; });
      insert_row(std::move(row));
    }
  }
  return static_cast<long>(std::count_if(pivots.begin(), pivots.end(),
                                         [&](const auto& p) { return p.first >= first_inside; }));
}

}  // namespace

GridResult grid_strength_detailed(const GridInstance& g) {
  const auto& sys = g.system;
  const std::size_t m = sys.m(), n = sys.n();
  if (g.r < 0) throw DimensionMismatch("grid order must be nonnegative");
  std::vector<LinearForm> forms;
  long max_order = 0;
  for (const auto& p : sys.polynomials) {
    if (p.m() != m || p.n() != n) throw DimensionMismatch("polynomial dimensions disagree with the system");
    forms.push_back(homogeneous_part(p));
    max_order = std::max(max_order, p.max_order());
  }
  long R = g.R > g.r ? g.R : g.r + std::max(max_order, 1L);
  const long cap = g.r + kMaxPaddingOverR;
  guard(cross_size(m, cap + 1) * n);
  long cells = static_cast<long>(cross_size(m, g.r).get_si()) * static_cast<long>(n);
  long d = relations_inside(forms, m, n, g.r, R);
  while (true) {
    if (R + 1 > cap) throw ResourceGuard("grid relations did not stabilize within padding r + 10");
    long next = relations_inside(forms, m, n, g.r, R + 1);
    if (next == d) return GridResult{cells - d, d, R};
    d = next;
    ++R;
  }
}

long grid_strength(const GridInstance& g) { return grid_strength_detailed(g).strength; }

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); }));
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "OK: " << passed() << "/" << checks.size() << " checks";
    return os.str();
  }
  os << "MISMATCH: " << (checks.size() - passed()) << "/" << checks.size() << " checks failed";
  for (const auto& c : checks)
    if (!c.ok()) {
      os << "; first at trial " << c.trial << ", r = " << c.r << ": expected " << c.expected.get_str()
         << ", grid gives " << c.observed;
      break;
    }
  return os.str();
}

std::map<std::string, Rational> random_bindings(const DifferenceSystem& sys, std::mt19937_64& rng) {
  std::set<std::string> names;
  for (const auto& c : sys.constants) names.insert(c.name);
  for (const auto& p : sys.polynomials)
    for (const auto& s : p.constant_symbols()) names.insert(s);
  std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<std::string, Rational> values;
    std::set<Rational> used;
    for (const auto& s : names) {
      Rational v;
      do {
        long a = 0;
        while (a == 0) a = num(rng);
        v = Rational(a, den(rng));
        v.canonicalize();
      } while (used.count(v));
      used.insert(v);
      values[s] = v;
    }
    bool degenerate = false;
    try {
      for (const auto& p : sys.polynomials)
        if (p.bind(values).size() != p.size()) degenerate = true;
    } catch (const Error&) {
      degenerate = true;
    }
    if (!degenerate) return values;
  }
  throw ResourceGuard("could not find a nondegenerate constant binding");
}

VerificationReport randomized_verify(const DifferenceSystem& sys, const NumericalPolynomial& expected, long r_min,
                                     long r_max, std::size_t trials, std::uint64_t seed) {
  for (const auto& p : sys.polynomials)
    if (!p.is_linear()) throw UnsupportedSystem("grid oracle needs a linear system");
  VerificationReport rep;
  rep.expected_psi = expected;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 1; t <= trials; ++t) {
    auto values = random_bindings(sys, rng);
    GridInstance g;
    g.system = sys;
    for (auto& p : g.system.polynomials) p = p.bind(values);
    for (long r = r_min; r <= r_max; ++r) {
      g.r = r;
      GridResult res = grid_strength_detailed(g);
      VerificationCheck c;
      c.trial = t;
      c.r = r;
      Rational e = expected.evaluate(Rational(r));
      c.expected = e.get_num();
      c.observed = res.strength;
      c.radius = res.radius;
      c.bindings = values;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

VerificationReport randomized_verify(const CatalogEntry& entry, SchemeKind scheme, long r_min, long r_max,
                                     std::size_t trials, std::uint64_t seed) {
  VerificationReport rep =
      randomized_verify(entry.form(scheme), entry.expected_total(scheme), r_min, r_max, trials, seed);
  rep.label = entry.name;
  rep.scheme = scheme;
  return rep;
}

}  // namespace einstrength
