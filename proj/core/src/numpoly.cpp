#include "einstrength/numpoly.hpp"

#include "einstrength/errors.hpp"

#include <cctype>
#include <sstream>

namespace einstrength {

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "Less";
    case Cmp::Equal: return "Equal";
    case Cmp::Greater: return "Greater";
  }
  return "?";
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

NumericalPolynomial::NumericalPolynomial(std::vector<Rational> power_coefficients)
    : coeffs_(std::move(power_coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void NumericalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NumericalPolynomial NumericalPolynomial::constant(const Rational& c) {
  return NumericalPolynomial(std::vector<Rational>{c});
}

NumericalPolynomial NumericalPolynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return NumericalPolynomial(std::move(v));
}

NumericalPolynomial NumericalPolynomial::shifted_binomial(unsigned m, long b) {
  // product over j = 1..m of (t - b + j), divided by m!
  std::vector<Rational> p{Rational(1)};
  for (unsigned j = 1; j <= m; ++j) {
    Rational c0 = Rational(static_cast<long>(j) - b);
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * c0;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  Rational inv(Integer(1), factorial(m));
  for (auto& c : p) c *= inv;
  return NumericalPolynomial(std::move(p));
}

NumericalPolynomial NumericalPolynomial::from_binomial_basis(std::span<const Rational> a) {
  NumericalPolynomial f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    f += shifted_binomial(static_cast<unsigned>(i), 0).scaled(a[i]);
  }
  return f;
}

std::optional<std::size_t> NumericalPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational NumericalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational NumericalPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational NumericalPolynomial::evaluate(const Rational& r) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * r + coeffs_[i];
  return acc;
}

std::vector<Rational> NumericalPolynomial::binomial_basis() const {
  if (is_zero()) return {};
  std::size_t d = *degree();
  std::vector<Rational> a(d + 1, Rational(0));
  NumericalPolynomial rest = *this;
  for (std::size_t i = d + 1; i-- > 0;) {
    Rational lc = rest.coefficient(i);
    if (lc == 0) continue;
    a[i] = lc * Rational(factorial(static_cast<unsigned>(i)));
    rest = rest - shifted_binomial(static_cast<unsigned>(i), 0).scaled(a[i]);
  }
  return a;
}

NumericalPolynomial NumericalPolynomial::operator+(const NumericalPolynomial& g) const {
  NumericalPolynomial r = *this;
  r += g;
  return r;
}

NumericalPolynomial& NumericalPolynomial::operator+=(const NumericalPolynomial& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  normalize();
  return *this;
}

NumericalPolynomial NumericalPolynomial::operator-(const NumericalPolynomial& g) const {
  return *this + g.scaled(-1);
}

NumericalPolynomial NumericalPolynomial::operator*(const NumericalPolynomial& g) const {
  if (is_zero() || g.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + g.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * g.coeffs_[j];
  return NumericalPolynomial(std::move(v));
}

NumericalPolynomial NumericalPolynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  NumericalPolynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

NumericalPolynomial add(const NumericalPolynomial& f, const NumericalPolynomial& g) { return f + g; }
NumericalPolynomial scale(const NumericalPolynomial& f, const Rational& c) { return f.scaled(c); }

Cmp eventual_compare(const NumericalPolynomial& f, const NumericalPolynomial& g) {
  NumericalPolynomial d = g - f;
  if (d.is_zero()) return Cmp::Equal;
  return d.leading_coefficient() > 0 ? Cmp::Less : Cmp::Greater;
}

namespace {

// Appends " + x", " - x" or a leading "x" / "-x".
void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty())
    out = negative ? "-" + body : body;
  else
    out += (negative ? " - " : " + ") + body;
}

std::string coefficient_prefix(const Rational& absval, bool unit_allowed) {
  if (absval == 1 && unit_allowed) return "";
  if (absval.get_den() == 1) return absval.get_num().get_str();
  return "(" + absval.get_str() + ")";
}

}  // namespace

std::string NumericalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    std::string body;
    if (i == 0) {
      body = a.get_str();
    } else {
      body = coefficient_prefix(a, true) + "t";
      if (i > 1) body += "^" + std::to_string(i);
    }
    append_signed(out, c < 0, body);
  }
  return out;
}

std::string NumericalPolynomial::to_binomial_string() const {
  if (is_zero()) return "0";
  auto a = binomial_basis();
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    Rational v = abs(a[i]);
    std::string body;
    if (i == 0) {
      body = v.get_str();
    } else {
      std::string pre = coefficient_prefix(v, true);
      body = (pre.empty() ? "" : pre + "*") + "C(t+" + std::to_string(i) + "," + std::to_string(i) + ")";
    }
    append_signed(out, a[i] < 0, body);
  }
  return out;
}

NumericalPolynomial parse_numpoly(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, 1, static_cast<int>(pos) + 1);
  };
  auto read_int = [&]() -> Integer {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected digits");
    return Integer(text.substr(start, pos - start));
  };
  auto read_rational = [&]() -> Rational {
    Integer num = read_int();
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      den = read_int();
      if (den == 0) throw fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  };

  NumericalPolynomial f;
  skip();
  if (text.substr(pos) == "0") return f;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational c = 1;
    bool have_coeff = false;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      c = read_rational();
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
      have_coeff = true;
    } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      c = read_rational();
      have_coeff = true;
    }
    std::size_t power = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = read_int().get_ui();
      }
    } else if (!have_coeff) {
      throw fail("expected a term");
    }
    f += NumericalPolynomial::monomial(negative ? Rational(-c) : c, power);
  }
  if (first) throw fail("empty polynomial");
  return f;
}

}  // namespace einstrength
