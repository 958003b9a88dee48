#pragma once

#include "einstrength/numpoly.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace einstrength {

enum class Ambient { Naturals, Integers };

using Coords = std::vector<long>;

class PointN {
 public:
  explicit PointN(Coords c);
  const Coords& coords() const { return c_; }
  std::size_t dim() const { return c_.size(); }
  long order() const;
  auto operator<=>(const PointN&) const = default;

 private:
  Coords c_;
};

class PointZ {
 public:
  explicit PointZ(Coords c) : c_(std::move(c)) {}
  const Coords& coords() const { return c_; }
  std::size_t dim() const { return c_.size(); }
  long order() const;
  auto operator<=>(const PointZ&) const = default;

 private:
  Coords c_;
};

class LatticeSet {
 public:
  LatticeSet(Ambient ambient, std::size_t m);
  LatticeSet(Ambient ambient, std::size_t m, const std::vector<Coords>& points);

  void insert(Coords p);
  Ambient ambient() const { return ambient_; }
  std::size_t dim() const { return m_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::set<Coords>& points() const { return points_; }
  bool contains(const Coords& p) const { return points_.count(p) != 0; }
  bool operator==(const LatticeSet&) const = default;

  std::string to_string() const;

 private:
  Ambient ambient_;
  std::size_t m_;
  std::set<Coords> points_;
};

bool leq_product(const PointN& a, const PointN& b);
bool leq_orthant(const PointZ& a, const PointZ& w);
bool leq_product(const Coords& a, const Coords& b);
bool leq_orthant(const Coords& a, const Coords& w);

LatticeSet minimal_elements(const LatticeSet& s);

constexpr std::size_t kMaxInclusionExclusion = 25;

NumericalPolynomial omega(const LatticeSet& e);
PointN rho(const PointZ& a);
NumericalPolynomial phi(const LatticeSet& a);
NumericalPolynomial phi_empty(std::size_t m);

// Parses "(2,0) (-1,1)" into points; an empty string yields no points.
std::vector<Coords> parse_points(const std::string& text);

}  // namespace einstrength
