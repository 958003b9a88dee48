#include "einstrength/strength.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace einstrength {

void DifferenceSystem::validate() const {
  std::set<std::string> declared;
  for (const auto& c : constants) declared.insert(c.name);
  for (std::size_t k = 0; k < polynomials.size(); ++k) {
    const auto& p = polynomials[k];
    if (p.is_zero()) continue;
    if (p.m() != m() || p.n() != n())
      throw DimensionMismatch("polynomial " + std::to_string(k) + " has the wrong ambient dimensions");
    for (const auto& s : p.constant_symbols())
      if (!declared.count(s))
        throw ParseError("polynomial " + std::to_string(k) + " uses undeclared constant '" + s + "'");
  }
  if (ranking) ranking->validate(m(), n());
}

std::map<std::size_t, LatticeSet> leader_exponent_sets(const AutoreducedSet& phi, std::size_t n, std::size_t m) {
  std::map<std::size_t, LatticeSet> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace(i, LatticeSet(Ambient::Integers, m));
  for (const auto& u : phi.leaders()) out.at(u.ind).insert(u.shift.exponents());
  return out;
}

long sigma_tr_deg(const NumericalPolynomial& psi, std::size_t m) {
  auto d = psi.degree();
  if (d && *d > m) throw Error("dimension polynomial has degree above the number of translations");
  if (!d || *d < m) return 0;
  Rational a = psi.binomial_basis().back() / Rational(Integer(1) << m);
  if (a.get_den() != 1) throw Error("leading binomial coefficient is not divisible by 2^m");
  return a.get_num().get_si();
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

}  // namespace

StrengthReport strength_of_system(const DifferenceSystem& sys) {
  return strength_of_system(sys, sys.ranking.value_or(Ranking()));
}

StrengthReport strength_of_system(const DifferenceSystem& sys, const Ranking& rk) {
  sys.validate();
  rk.validate(sys.m(), sys.n());
  const std::size_t m = sys.m(), n = sys.n();

  std::vector<std::size_t> linear, quasi;
  for (std::size_t k = 0; k < sys.polynomials.size(); ++k) {
    const auto& p = sys.polynomials[k];
    if (p.is_zero()) continue;
    if (p.is_constant()) throw UnsupportedSystem("inconsistent system: generator " + std::to_string(k + 1) + " is a nonzero constant");
    if (p.is_linear())
      linear.push_back(k);
    else if (p.is_quasi_linear(rk))
      quasi.push_back(k);
    else
      throw UnsupportedSystem("unsupported system class: generator " + std::to_string(k + 1) +
                              " is neither linear nor quasi-linear under ranking " + rk.to_string());
  }

  std::vector<BlockReport> blocks;
  UnionFind uf(n);
  for (std::size_t k : linear) {
    auto inds = sys.polynomials[k].indeterminates();
    for (std::size_t i : inds) uf.unite(*inds.begin(), i);
  }
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t k : linear) {
    std::size_t root = uf.find(*sys.polynomials[k].indeterminates().begin());
    auto [it, fresh] = block_of_root.emplace(root, blocks.size());
    if (fresh) blocks.push_back(BlockReport{});
    blocks[it->second].generators.push_back(k);
  }
  for (auto& b : blocks) {
    std::vector<SigmaPolynomial> gens;
    for (std::size_t k : b.generators) gens.push_back(sys.polynomials[k]);
    b.route = BlockRoute::Linear;
    b.charset = coherence_complete(autoreduce(gens, rk));
  }
  for (std::size_t k : quasi) {
    BlockReport b;
    b.route = BlockRoute::QuasiLinear;
    b.generators = {k};
    OrbitCharset oc = orbit_charset(sys.polynomials[k], rk);
    b.charset = oc.set;
    b.shifts = oc.shifts;
    blocks.push_back(std::move(b));
  }
  for (auto& b : blocks) {
    std::set<std::size_t> inds, lead;
    for (std::size_t k : b.generators) {
      auto s = sys.polynomials[k].indeterminates();
      inds.insert(s.begin(), s.end());
    }
    for (const auto& u : b.charset.leaders()) lead.insert(u.ind);
    b.indeterminates.assign(inds.begin(), inds.end());
    b.leader_indeterminates.assign(lead.begin(), lead.end());
  }

  const std::size_t nb = blocks.size();
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = a + 1; b < nb; ++b)
      for (std::size_t i : blocks[a].leader_indeterminates)
        if (std::count(blocks[b].leader_indeterminates.begin(), blocks[b].leader_indeterminates.end(), i))
          throw UnsupportedSystem("unsupported system class: generator blocks {" + join(blocks[a].generators) + "} and {" +
                                  join(blocks[b].generators) + "} have leaders in the same indeterminate");

  // b depends on c when b mentions an indeterminate that leads in c.
  std::vector<std::vector<bool>> dep(nb, std::vector<bool>(nb, false));
  std::vector<std::size_t> indegree(nb, 0);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t c = 0; c < nb; ++c) {
      if (b == c) continue;
      for (std::size_t i : blocks[b].indeterminates)
        if (std::count(blocks[c].leader_indeterminates.begin(), blocks[c].leader_indeterminates.end(), i)) {
          dep[b][c] = true;
          ++indegree[b];
          break;
        }
    }
  std::vector<std::size_t> order;
  std::vector<bool> done(nb, false);
  while (order.size() < nb) {
    std::size_t pick = nb;
    for (std::size_t b = 0; b < nb && pick == nb; ++b)
      if (!done[b] && indegree[b] == 0) pick = b;
    if (pick == nb) throw UnsupportedSystem("unsupported system class: generator blocks depend on each other cyclically");
    done[pick] = true;
    order.push_back(pick);
    for (std::size_t b = 0; b < nb; ++b)
      if (dep[b][pick]) --indegree[b];
  }

  std::vector<SigmaPolynomial> all;
  for (std::size_t b : order) {
    std::vector<SigmaPolynomial> elems;
    for (const auto& e : blocks[b].charset.elements())
      elems.push_back(all.empty() ? e : reduce(rk, e, all).remainder);
    blocks[b].charset = AutoreducedSet(elems, rk);
    all.insert(all.end(), elems.begin(), elems.end());
  }
  std::vector<BlockReport> ordered;
  for (std::size_t b : order) ordered.push_back(std::move(blocks[b]));

  StrengthReport rep;
  rep.ranking = rk;
  rep.charset = AutoreducedSet(all, rk);
  rep.blocks = std::move(ordered);
  rep.leader_sets = leader_exponent_sets(rep.charset, n, m);
  for (const auto& [i, e] : rep.leader_sets) {
    NumericalPolynomial p = e.empty() ? phi_empty(m) : phi(e);
    rep.per_indeterminate.emplace(i, p);
    rep.psi += p;
  }
  rep.sigma_tr_deg = sigma_tr_deg(rep.psi, m);
  return rep;
}

}  // namespace einstrength
