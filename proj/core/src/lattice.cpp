#include "einstrength/lattice.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>

namespace einstrength {

PointN::PointN(Coords c) : c_(std::move(c)) {
  for (long x : c_)
    if (x < 0) throw DimensionMismatch("negative coordinate in a point of N^m");
}

long PointN::order() const {
  long s = 0;
  for (long x : c_) s += x;
  return s;
}

long PointZ::order() const {
  long s = 0;
  for (long x : c_) s += x < 0 ? -x : x;
  return s;
}

LatticeSet::LatticeSet(Ambient ambient, std::size_t m) : ambient_(ambient), m_(m) {}

LatticeSet::LatticeSet(Ambient ambient, std::size_t m, const std::vector<Coords>& points)
    : ambient_(ambient), m_(m) {
  for (const auto& p : points) insert(p);
}

void LatticeSet::insert(Coords p) {
  if (p.size() != m_)
    throw DimensionMismatch("point has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(m_));
  if (ambient_ == Ambient::Naturals)
    for (long x : p)
      if (x < 0) throw DimensionMismatch("negative coordinate in a subset of N^m");
  points_.insert(std::move(p));
}

std::string LatticeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& p : points_) {
    if (!first) out += ", ";
    first = false;
    out += "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(p[i]);
    }
    out += ")";
  }
  return out + "}";
}

bool leq_product(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw DimensionMismatch("points of different dimension");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool leq_orthant(const Coords& a, const Coords& w) {
  if (a.size() != w.size()) throw DimensionMismatch("points of different dimension");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && w[i] < a[i]) return false;
    if (a[i] < 0 && w[i] > a[i]) return false;
  }
  return true;
}

bool leq_product(const PointN& a, const PointN& b) { return leq_product(a.coords(), b.coords()); }
bool leq_orthant(const PointZ& a, const PointZ& w) { return leq_orthant(a.coords(), w.coords()); }

LatticeSet minimal_elements(const LatticeSet& s) {
  auto leq = s.ambient() == Ambient::Naturals
                 ? static_cast<bool (*)(const Coords&, const Coords&)>(&leq_product)
                 : static_cast<bool (*)(const Coords&, const Coords&)>(&leq_orthant);
  LatticeSet out(s.ambient(), s.dim());
  for (const auto& p : s.points()) {
    bool dominated = false;
    for (const auto& q : s.points()) {
      if (q != p && leq(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(p);
  }
  return out;
}

NumericalPolynomial omega(const LatticeSet& e) {
  if (e.ambient() != Ambient::Naturals) throw DimensionMismatch("omega expects a subset of N^m");
  LatticeSet mn = minimal_elements(e);
  std::vector<Coords> pts(mn.points().begin(), mn.points().end());
  const std::size_t q = pts.size();
  if (q > kMaxInclusionExclusion)
    throw ResourceGuard("omega: " + std::to_string(q) + " minimal points exceed the limit of " +
                        std::to_string(kMaxInclusionExclusion));
  const std::size_t m = e.dim();
  // Accumulate signed multiplicities per value of b, then expand once per b.
  std::map<long, long> weight;
  Coords top(m);
  const std::uint64_t subsets = std::uint64_t{1} << q;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(top.begin(), top.end(), 0);
    for (std::size_t j = 0; j < q; ++j)
      if (mask >> j & 1)
        for (std::size_t k = 0; k < m; ++k) top[k] = std::max(top[k], pts[j][k]);
    long b = 0;
    for (long x : top) b += x;
    weight[b] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  NumericalPolynomial result;
  for (const auto& [b, w] : weight)
    if (w != 0) result += NumericalPolynomial::shifted_binomial(static_cast<unsigned>(m), b).scaled(w);
  return result;
}

PointN rho(const PointZ& a) {
  const auto& c = a.coords();
  Coords out(2 * c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = std::max(c[i], 0L);
    out[c.size() + i] = std::max(-c[i], 0L);
  }
  return PointN(std::move(out));
}

NumericalPolynomial phi(const LatticeSet& a) {
  if (a.ambient() != Ambient::Integers) throw DimensionMismatch("phi expects a subset of Z^m");
  const std::size_t m = a.dim();
  LatticeSet b(Ambient::Naturals, 2 * m);
  const LatticeSet mn = minimal_elements(a);
  for (const auto& p : mn.points()) b.insert(rho(PointZ(p)).coords());
  for (std::size_t i = 0; i < m; ++i) {
    Coords e(2 * m, 0);
    e[i] = 1;
    e[m + i] = 1;
    b.insert(std::move(e));
  }
  return omega(b);
}

NumericalPolynomial phi_empty(std::size_t m) {
  NumericalPolynomial f;
  for (std::size_t i = 0; i <= m; ++i) {
    Integer c = binomial(static_cast<long>(m), static_cast<long>(i)) << i;
    if ((m - i) % 2) c = -c;
    f += NumericalPolynomial::shifted_binomial(static_cast<unsigned>(i), 0).scaled(Rational(c));
  }
  return f;
}

std::vector<Coords> parse_points(const std::string& text) {
  std::vector<Coords> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) advance();
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", line, col);
    advance();
    Coords p;
    while (true) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance();
      if (i < text.size() && text[i] == ')') {
        advance();
        break;
      }
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) advance();
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance();
      std::string tok = text.substr(start, i - start);
      if (tok.empty() || tok == "-" || tok == "+") throw ParseError("expected an integer", line, col);
      p.push_back(std::stol(tok));
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance();
      if (i < text.size() && text[i] == ',') {
        advance();
      } else if (i >= text.size() || text[i] != ')') {
        throw ParseError("expected ',' or ')'", line, col);
      }
    }
    if (p.empty()) throw ParseError("empty point", line, col);
    if (!out.empty() && p.size() != out.front().size())
      throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                           std::to_string(out.front().size()),
                       line, col);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace einstrength
