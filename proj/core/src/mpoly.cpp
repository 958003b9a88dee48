#include "einstrength/constant_expr.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>

namespace einstrength {

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) return false;
    if (i >= a.size()) return true;
    if (a[i].first < b[j].first) return false;
    if (b[j].first < a[i].first) return true;
    if (a[i].second != b[j].second) return a[i].second < b[j].second;
    ++i;
    ++j;
  }
  return false;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

// a / b if b divides a.
std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (i >= a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

MPoly content_in(const MPoly& p, const std::string& v) {
  unsigned d = p.degree_in(v);
  MPoly g;
  for (unsigned k = 0; k <= d; ++k) {
    MPoly c = p.coefficient_in(v, k);
    if (c.is_zero()) continue;
    if (c.is_constant()) return MPoly(1);
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly pseudo_remainder(MPoly a, const MPoly& b, const std::string& v) {
  unsigned db = b.degree_in(v);
  MPoly lb = b.coefficient_in(v, db);
  while (!a.is_zero()) {
    unsigned da = a.degree_in(v);
    if (da < db) break;
    MPoly la = a.coefficient_in(v, da);
    Monomial shift;
    if (da > db) shift.emplace_back(v, da - db);
    a = lb * a - (la * b).times_monomial(shift, 1);
  }
  return a;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::symbol(const std::string& name, unsigned power) {
  MPoly p;
  if (power == 0)
    p.terms_.emplace(Monomial{}, Rational(1));
  else
    p.terms_.emplace(Monomial{{name, power}}, Rational(1));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

std::set<std::string> MPoly::symbols() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) s.insert(v);
  return s;
}

unsigned MPoly::degree_in(const std::string& v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [w, e] : m)
      if (w == v) d = std::max(d, e);
  return d;
}

MPoly MPoly::coefficient_in(const std::string& v, unsigned k) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    for (const auto& f : m) {
      if (f.first == v)
        e = f.second;
      else
        rest.push_back(f);
    }
    if (e == k) out.add_term(rest, c);
  }
  return out;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const { return scaled(-1); }

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(multiply(m1, m2), c1 * c2);
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  MPoly r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

MPoly MPoly::times_monomial(const Monomial& mono, const Rational& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(multiply(m, mono), x * c);
  return r;
}

bool MPoly::operator<(const MPoly& o) const {
  auto a = terms_.rbegin(), b = o.terms_.rbegin();
  for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
    if (a->first != b->first) return LexLess{}(a->first, b->first);
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.rend() && b != o.terms_.rend();
}

MPoly MPoly::exact_div(const MPoly& b) const {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (auto c = b.constant_value()) return scaled(1 / *c);
  MPoly q, r = *this;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    auto t = divide(r.leading_monomial(), lb);
    if (!t) throw Error("inexact polynomial division");
    Rational c = r.leading_coefficient() / cb;
    q.add_term(*t, c);
    r -= b.times_monomial(*t, c);
  }
  return q;
}

Rational MPoly::content() const {
  if (terms_.empty()) return 0;
  Integer l = 1, g = 0;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  if (leading_coefficient() < 0) r = -r;
  return r;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return {};
  return scaled(1 / content());
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw Error("no value bound for constant '" + v + "'");
      for (unsigned k = 0; k < e; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    std::string body;
    if (m.empty()) {
      body = a.get_str();
    } else {
      if (a != 1) body = a.get_str() + "*";
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) body += "*";
        body += m[i].first;
        if (m[i].second > 1) body += "^" + std::to_string(m[i].second);
      }
    }
    if (out.empty())
      out = c < 0 ? "-" + body : body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

MPoly gcd(const MPoly& a0, const MPoly& b0) {
  if (a0.is_zero()) return b0.primitive();
  if (b0.is_zero()) return a0.primitive();
  if (a0.is_constant() || b0.is_constant()) return MPoly(1);
  MPoly a = a0.primitive(), b = b0.primitive();
  if (a == b) return a;
  std::set<std::string> vars = a.symbols();
  auto sb = b.symbols();
  vars.insert(sb.begin(), sb.end());
  const std::string v = *vars.begin();
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
  MPoly ca = content_in(a, v), cb = content_in(b, v);
  MPoly pa = a.exact_div(ca), pb = b.exact_div(cb);
  MPoly c = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = MPoly();
    } else if (r.degree_in(v) == 0) {
      pa = MPoly(1);
      pb = MPoly();
    } else {
      pb = r.exact_div(content_in(r, v)).primitive();
    }
  }
  MPoly g = pa.degree_in(v) == 0 ? MPoly(1) : pa.exact_div(content_in(pa, v));
  return (c * g).primitive();
}

}  // namespace einstrength
