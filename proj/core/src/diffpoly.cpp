#include "einstrength/diffpoly.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>
#include <numeric>

namespace einstrength {

Shift Shift::unit(std::size_t m, std::size_t i, long power) {
  Coords k(m, 0);
  k.at(i) = power;
  return Shift(std::move(k));
}

long Shift::order() const {
  long s = 0;
  for (long x : k_) s += x < 0 ? -x : x;
  return s;
}

bool Shift::is_identity() const {
  return std::all_of(k_.begin(), k_.end(), [](long x) { return x == 0; });
}

Shift Shift::compose(const Shift& o) const {
  if (o.k_.size() != k_.size()) throw DimensionMismatch("shifts of different dimension");
  Coords r(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) r[i] = k_[i] + o.k_[i];
  return Shift(std::move(r));
}

Shift Shift::inverse() const {
  Coords r(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) r[i] = -k_[i];
  return Shift(std::move(r));
}

Naming Naming::standard(std::size_t m, std::size_t n) {
  Naming nm;
  for (std::size_t i = 0; i < m; ++i) nm.translations.push_back("a" + std::to_string(i + 1));
  if (n == 1)
    nm.indeterminates.push_back("y");
  else
    for (std::size_t i = 0; i < n; ++i) nm.indeterminates.push_back("y" + std::to_string(i + 1));
  return nm;
}

std::string Naming::shift(const Shift& g) const {
  std::string out;
  const auto& k = g.exponents();
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += i < translations.size() ? translations[i] : "a" + std::to_string(i + 1);
    if (k[i] != 1) out += "^" + std::to_string(k[i]);
  }
  return out;
}

std::string Naming::term(const Term& t) const {
  std::string s = shift(t.shift);
  std::string y = t.ind < indeterminates.size() ? indeterminates[t.ind] : "y" + std::to_string(t.ind + 1);
  return s.empty() ? y : s + " " + y;
}

Ranking::Ranking(std::vector<std::size_t> tp, std::vector<std::size_t> ip) : tp_(std::move(tp)), ip_(std::move(ip)) {
  auto is_perm = [](const std::vector<std::size_t>& p) {
    std::vector<std::size_t> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != i) return false;
    return true;
  };
  if (!is_perm(tp_)) throw ParseError("translation priority is not a permutation");
  if (!is_perm(ip_)) throw ParseError("indeterminate priority is not a permutation");
  ip_weight_.assign(ip_.size(), 0);
  for (std::size_t w = 0; w < ip_.size(); ++w) ip_weight_[ip_[w]] = w;
}

bool Ranking::is_standard() const {
  for (std::size_t i = 0; i < tp_.size(); ++i)
    if (tp_[i] != i) return false;
  for (std::size_t i = 0; i < ip_.size(); ++i)
    if (ip_[i] != i) return false;
  return true;
}

void Ranking::validate(std::size_t m, std::size_t n) const {
  if (!tp_.empty() && tp_.size() != m)
    throw DimensionMismatch("translation priority has " + std::to_string(tp_.size()) + " entries, expected " +
                            std::to_string(m));
  if (!ip_.empty() && ip_.size() != n)
    throw DimensionMismatch("indeterminate priority has " + std::to_string(ip_.size()) + " entries, expected " +
                            std::to_string(n));
}

std::size_t Ranking::weight(std::size_t ind) const { return ind < ip_weight_.size() ? ip_weight_[ind] : ind; }

std::vector<long> Ranking::key(const Term& t) const {
  const auto& k = t.shift.exponents();
  const std::size_t m = k.size();
  std::vector<long> out;
  out.reserve(2 * m + 2);
  out.push_back(t.shift.order());
  for (std::size_t j = 0; j < m; ++j) {
    long x = k[j < tp_.size() ? tp_[j] : j];
    out.push_back(x < 0 ? -x : x);
  }
  for (std::size_t j = 0; j < m; ++j) out.push_back(k[j < tp_.size() ? tp_[j] : j]);
  out.push_back(static_cast<long>(weight(t.ind)));
  return out;
}

Cmp Ranking::compare(const Term& u, const Term& v) const {
  const auto& a = u.shift.exponents();
  const auto& b = v.shift.exponents();
  if (a.size() != b.size()) throw DimensionMismatch("terms of different dimension");
  long oa = u.shift.order(), ob = v.shift.order();
  if (oa != ob) return oa < ob ? Cmp::Less : Cmp::Greater;
  const std::size_t m = a.size();
  auto at = [&](std::size_t j) { return j < tp_.size() ? tp_[j] : j; };
  for (std::size_t j = 0; j < m; ++j) {
    long x = std::abs(a[at(j)]), y = std::abs(b[at(j)]);
    if (x != y) return x < y ? Cmp::Less : Cmp::Greater;
  }
  for (std::size_t j = 0; j < m; ++j) {
    long x = a[at(j)], y = b[at(j)];
    if (x != y) return x < y ? Cmp::Less : Cmp::Greater;
  }
  std::size_t wu = weight(u.ind), wv = weight(v.ind);
  if (wu != wv) return wu < wv ? Cmp::Less : Cmp::Greater;
  return Cmp::Equal;
}

std::string Ranking::to_string() const {
  if (is_standard()) return "standard";
  auto identity = [](const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  };
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  std::string s;
  if (!identity(tp_)) s = "translations:" + list(tp_);
  if (!identity(ip_)) s += (s.empty() ? "" : " ") + std::string("indeterminates:") + list(ip_);
  return s;
}

Cmp compare_terms(const Ranking& rk, const Term& u, const Term& v) { return rk.compare(u, v); }

TransformKind is_transform(const Term& u, const Term& v) {
  if (u.ind != v.ind) return TransformKind::No;
  if (!leq_orthant(u.shift.exponents(), v.shift.exponents())) return TransformKind::No;
  return u.shift == v.shift ? TransformKind::Improper : TransformKind::Proper;
}

namespace {

const Ranking kStandard;

bool factor_greater(const std::pair<Term, unsigned>& a, const std::pair<Term, unsigned>& b) {
  return kStandard.compare(a.first, b.first) == Cmp::Greater;
}

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      out.push_back(b[j++]);
      continue;
    }
    Cmp c = kStandard.compare(a[i].first, b[j].first);
    if (c == Cmp::Greater) {
      out.push_back(a[i++]);
    } else if (c == Cmp::Less) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool PowerProductLess::operator()(const PowerProduct& a, const PowerProduct& b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = kStandard.compare(a[i].first, b[i].first);
    if (c != Cmp::Equal) return c == Cmp::Less;
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

SigmaPolynomial SigmaPolynomial::constant(std::size_t m, std::size_t n, const ConstantExpr& c) {
  SigmaPolynomial p(m, n);
  p.add_monomial({}, c);
  return p;
}

SigmaPolynomial SigmaPolynomial::term(std::size_t m, std::size_t n, const Term& t, const ConstantExpr& c,
                                      unsigned power) {
  if (t.shift.dim() != m) throw DimensionMismatch("term shift has wrong dimension");
  if (t.ind >= n) throw DimensionMismatch("indeterminate index out of range");
  SigmaPolynomial p(m, n);
  if (power == 0)
    p.add_monomial({}, c);
  else
    p.add_monomial({{t, power}}, c);
  return p;
}

bool SigmaPolynomial::is_constant() const {
  return mons_.empty() || (mons_.size() == 1 && mons_.begin()->first.empty());
}

ConstantExpr SigmaPolynomial::constant_part() const { return coefficient({}); }

ConstantExpr SigmaPolynomial::coefficient(const PowerProduct& pp) const {
  auto it = mons_.find(pp);
  return it == mons_.end() ? ConstantExpr() : it->second;
}

void SigmaPolynomial::add_monomial(PowerProduct pp, const ConstantExpr& c) {
  if (c.is_zero()) return;
  std::sort(pp.begin(), pp.end(), factor_greater);
  auto it = mons_.find(pp);
  if (it == mons_.end()) {
    mons_.emplace(std::move(pp), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) mons_.erase(it);
  }
}

void SigmaPolynomial::check_dims(const SigmaPolynomial& o) const {
  if (o.m_ != m_ || o.n_ != n_) {
    if (o.mons_.empty() || mons_.empty()) return;
    throw DimensionMismatch("difference polynomials over different rings");
  }
}

SigmaPolynomial SigmaPolynomial::operator-() const { return scaled(-1); }

SigmaPolynomial& SigmaPolynomial::operator+=(const SigmaPolynomial& o) {
  check_dims(o);
  if (mons_.empty()) {
    m_ = std::max(m_, o.m_);
    n_ = std::max(n_, o.n_);
  }
  for (const auto& [pp, c] : o.mons_) {
    auto it = mons_.find(pp);
    if (it == mons_.end()) {
      mons_.emplace(pp, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) mons_.erase(it);
    }
  }
  return *this;
}

SigmaPolynomial& SigmaPolynomial::operator-=(const SigmaPolynomial& o) { return *this += -o; }

SigmaPolynomial SigmaPolynomial::operator+(const SigmaPolynomial& o) const {
  SigmaPolynomial r = *this;
  r += o;
  return r;
}

SigmaPolynomial SigmaPolynomial::operator-(const SigmaPolynomial& o) const {
  SigmaPolynomial r = *this;
  r -= o;
  return r;
}

SigmaPolynomial SigmaPolynomial::operator*(const SigmaPolynomial& o) const {
  check_dims(o);
  SigmaPolynomial r(std::max(m_, o.m_), std::max(n_, o.n_));
  for (const auto& [p1, c1] : mons_)
    for (const auto& [p2, c2] : o.mons_) {
      PowerProduct pp = multiply(p1, p2);
      ConstantExpr c = c1 * c2;
      auto it = r.mons_.find(pp);
      if (it == r.mons_.end()) {
        if (!c.is_zero()) r.mons_.emplace(std::move(pp), c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.mons_.erase(it);
      }
    }
  return r;
}

SigmaPolynomial SigmaPolynomial::scaled(const ConstantExpr& c) const {
  SigmaPolynomial r(m_, n_);
  if (c.is_zero()) return r;
  for (const auto& [pp, x] : mons_) r.mons_.emplace_hint(r.mons_.end(), pp, x * c);
  return r;
}

SigmaPolynomial SigmaPolynomial::pow(unsigned e) const {
  SigmaPolynomial r = constant(m_, n_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool SigmaPolynomial::operator==(const SigmaPolynomial& o) const {
  if (mons_.empty() && o.mons_.empty()) return true;
  return m_ == o.m_ && n_ == o.n_ && mons_ == o.mons_;
}

SigmaPolynomial SigmaPolynomial::shifted(const Shift& g) const {
  if (g.dim() != m_) throw DimensionMismatch("shift has wrong dimension");
  SigmaPolynomial r(m_, n_);
  for (const auto& [pp, c] : mons_) {
    PowerProduct q;
    q.reserve(pp.size());
    for (const auto& [t, e] : pp) q.emplace_back(Term{t.shift.compose(g), t.ind}, e);
    std::sort(q.begin(), q.end(), factor_greater);
    r.mons_.emplace(std::move(q), c);
  }
  return r;
}

SigmaPolynomial apply_shift(const Shift& g, const SigmaPolynomial& a) { return a.shifted(g); }

std::set<Term> SigmaPolynomial::terms() const {
  std::set<Term> s;
  for (const auto& [pp, c] : mons_)
    for (const auto& f : pp) s.insert(f.first);
  return s;
}

std::set<std::size_t> SigmaPolynomial::indeterminates() const {
  std::set<std::size_t> s;
  for (const auto& [pp, c] : mons_)
    for (const auto& f : pp) s.insert(f.first.ind);
  return s;
}

long SigmaPolynomial::max_order() const {
  long r = 0;
  for (const auto& [pp, c] : mons_)
    for (const auto& f : pp) r = std::max(r, f.first.shift.order());
  return r;
}

Term SigmaPolynomial::leader(const Ranking& rk) const {
  const Term* best = nullptr;
  for (const auto& [pp, c] : mons_)
    for (const auto& f : pp)
      if (!best || rk.compare(f.first, *best) == Cmp::Greater) best = &f.first;
  if (!best) throw UnsupportedSystem("element of the ground field has no leader");
  return *best;
}

unsigned SigmaPolynomial::degree_in(const Term& u) const {
  unsigned d = 0;
  for (const auto& [pp, c] : mons_)
    for (const auto& f : pp)
      if (f.first == u) d = std::max(d, f.second);
  return d;
}

unsigned SigmaPolynomial::degree_in_leader(const Ranking& rk) const { return degree_in(leader(rk)); }

SigmaPolynomial SigmaPolynomial::initial(const Ranking& rk) const {
  Term u = leader(rk);
  unsigned d = degree_in(u);
  SigmaPolynomial r(m_, n_);
  for (const auto& [pp, c] : mons_) {
    auto it = std::find_if(pp.begin(), pp.end(), [&](const auto& f) { return f.first == u; });
    if (it == pp.end() || it->second != d) continue;
    PowerProduct rest;
    for (const auto& f : pp)
      if (!(f.first == u)) rest.push_back(f);
    r.add_monomial(std::move(rest), c);
  }
  return r;
}

bool SigmaPolynomial::is_linear() const {
  for (const auto& [pp, c] : mons_)
    if (pp.size() > 1 || (pp.size() == 1 && pp[0].second != 1)) return false;
  return true;
}

bool SigmaPolynomial::is_quasi_linear(const Ranking& rk) const {
  if (is_constant()) return false;
  Term u = leader(rk);
  int hits = 0;
  for (const auto& [pp, c] : mons_)
    for (const auto& f : pp)
      if (f.first == u) {
        ++hits;
        if (f.second != 1 || pp.size() != 1) return false;
      }
  return hits == 1;
}

SigmaPolynomial SigmaPolynomial::bind(const std::map<std::string, Rational>& values) const {
  SigmaPolynomial r(m_, n_);
  for (const auto& [pp, c] : mons_) {
    Rational v = c.evaluate(values);
    if (v != 0) r.mons_.emplace(pp, ConstantExpr(v));
  }
  return r;
}

std::set<std::string> SigmaPolynomial::constant_symbols() const {
  std::set<std::string> s;
  for (const auto& [pp, c] : mons_) {
    auto x = c.symbols();
    s.insert(x.begin(), x.end());
  }
  return s;
}

std::string SigmaPolynomial::to_string(const Naming& names) const {
  if (mons_.empty()) return "0";
  std::string out;
  for (auto it = mons_.rbegin(); it != mons_.rend(); ++it) {
    const auto& [pp, c] = *it;
    bool negative = c.looks_negative();
    ConstantExpr a = negative ? -c : c;
    std::string body;
    if (pp.empty()) {
      body = a.to_string();
      if (a.denominator() == MPoly(1) ? a.numerator().terms().size() > 1 : true)
        if (!out.empty()) body = "(" + body + ")";
    } else {
      if (!(a == ConstantExpr(1))) body = a.to_factor_string() + "*";
      for (std::size_t i = 0; i < pp.size(); ++i) {
        if (i) body += "*";
        body += "[" + names.term(pp[i].first) + "]";
        if (pp[i].second > 1) body += "^" + std::to_string(pp[i].second);
      }
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::string SigmaPolynomial::to_string() const { return to_string(Naming::standard(m_, n_)); }

}  // namespace einstrength
