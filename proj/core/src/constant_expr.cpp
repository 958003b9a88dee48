#include "einstrength/constant_expr.hpp"

#include "einstrength/errors.hpp"

#include <cctype>

namespace einstrength {

ConstantExpr::ConstantExpr(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("constant expression with zero denominator");
  normalize();
}

ConstantExpr ConstantExpr::symbol(const std::string& name) { return ConstantExpr(MPoly::symbol(name)); }

void ConstantExpr::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (auto c = den_.constant_value()) {
    if (*c != 1) {
      num_ = num_.scaled(1 / *c);
      den_ = MPoly(1);
    }
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational c = den_.content();
  num_ = num_.scaled(1 / c);
  den_ = den_.scaled(1 / c);
}

std::optional<Rational> ConstantExpr::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return *num_.constant_value() / *den_.constant_value();
}

std::set<std::string> ConstantExpr::symbols() const {
  auto s = num_.symbols();
  auto d = den_.symbols();
  s.insert(d.begin(), d.end());
  return s;
}

bool ConstantExpr::looks_negative() const { return !num_.is_zero() && num_.leading_coefficient() < 0; }

ConstantExpr ConstantExpr::operator-() const {
  ConstantExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

ConstantExpr operator+(const ConstantExpr& self, const ConstantExpr& o) {
  if (o.is_zero()) return self;
  if (self.is_zero()) return o;
  if (self.den_ == o.den_) return ConstantExpr(self.num_ + o.num_, self.den_);
  return ConstantExpr(self.num_ * o.den_ + o.num_ * self.den_, self.den_ * o.den_);
}

ConstantExpr operator-(const ConstantExpr& self, const ConstantExpr& o) { return self + (-o); }

ConstantExpr operator*(const ConstantExpr& self, const ConstantExpr& o) {
  if (self.is_zero() || o.is_zero()) return ConstantExpr();
  if (auto c = o.rational_value()) {
    ConstantExpr r = self;
    r.num_ = r.num_.scaled(*c);
    return r;
  }
  if (auto c = self.rational_value()) {
    ConstantExpr r = o;
    r.num_ = r.num_.scaled(*c);
    return r;
  }
  return ConstantExpr(self.num_ * o.num_, self.den_ * o.den_);
}

ConstantExpr operator/(const ConstantExpr& self, const ConstantExpr& o) {
  if (o.is_zero()) throw Error("division by a zero constant");
  if (auto c = o.rational_value()) {
    ConstantExpr r = self;
    r.num_ = r.num_.scaled(1 / *c);
    return r;
  }
  return ConstantExpr(self.num_ * o.den_, self.den_ * o.num_);
}

ConstantExpr ConstantExpr::pow(int e) const {
  if (e < 0) return ConstantExpr(1) / pow(-e);
  ConstantExpr r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Rational ConstantExpr::evaluate(const std::map<std::string, Rational>& values) const {
  Rational d = den_.evaluate(values);
  if (d == 0) throw Error("constant expression " + to_string() + " has a vanishing denominator");
  return num_.evaluate(values) / d;
}

namespace {

bool single_factor(const MPoly& p) {
  if (p.terms().size() != 1) return false;
  const auto& [m, c] = *p.terms().begin();
  return m.empty() ? c.get_den() == 1 : c == 1 && m.size() == 1;
}

}  // namespace

std::string ConstantExpr::to_string() const {
  if (den_ == MPoly(1)) return num_.to_string();
  std::string n = num_.terms().size() == 1 ? num_.to_string() : "(" + num_.to_string() + ")";
  std::string d = single_factor(den_) ? den_.to_string() : "(" + den_.to_string() + ")";
  return n + "/" + d;
}

std::string ConstantExpr::to_factor_string() const {
  if (den_ == MPoly(1) && num_.terms().size() == 1) {
    const auto& c = num_.terms().begin()->second;
    if (c.get_den() == 1 || !num_.terms().begin()->first.empty()) return to_string();
  }
  return "(" + to_string() + ")";
}

namespace {

class ConstantParser {
 public:
  explicit ConstantParser(const std::string& s) : s_(s) {}

  ConstantExpr parse() {
    ConstantExpr e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("in constant \"" + s_ + "\": " + msg, 1, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ConstantExpr expr() {
    ConstantExpr e = term();
    while (true) {
      if (accept('+'))
        e += term();
      else if (accept('-'))
        e -= term();
      else
        return e;
    }
  }

  ConstantExpr term() {
    ConstantExpr e = unary();
    while (true) {
      if (accept('*')) {
        e *= unary();
      } else if (accept('/')) {
        ConstantExpr d = unary();
        if (d.is_zero()) fail("division by zero");
        e = e / d;
      } else {
        return e;
      }
    }
  }

  ConstantExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ConstantExpr power() {
    ConstantExpr base = primary();
    if (accept('^')) {
      skip();
      bool neg = false;
      if (accept('-')) neg = true;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (neg && base.is_zero()) fail("zero raised to a negative power");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  ConstantExpr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ConstantExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ConstantExpr(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return ConstantExpr::symbol(s_.substr(start, pos_ - start));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstantExpr parse_constant(const std::string& text) { return ConstantParser(text).parse(); }

}  // namespace einstrength
