#pragma once

#include "tverberg/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace tverberg {

/// A point with exact rational coordinates. The ambient dimension is the
/// coordinate count; containers of points are expected to agree on it.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(int dimension) {
    return Point(std::vector<Rational>(static_cast<std::size_t>(dimension)));
  }

  int dimension() const { return static_cast<int>(coords_.size()); }

  Rational& operator[](int j) { return coords_[static_cast<std::size_t>(j)]; }
  const Rational& operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }

  const std::vector<Rational>& coords() const { return coords_; }

  bool is_origin() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  Point& operator+=(const Point& o) {
    require_same_dimension(o);
    for (int j = 0; j < dimension(); ++j) coords_[static_cast<std::size_t>(j)] += o[j];
    return *this;
  }
  Point& operator-=(const Point& o) {
    require_same_dimension(o);
    for (int j = 0; j < dimension(); ++j) coords_[static_cast<std::size_t>(j)] -= o[j];
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rational& s, const Point& p) {
    Point q = p;
    for (auto& c : q.coords_) c *= s;
    return q;
  }

 private:
  void require_same_dimension(const Point& o) const {
    if (o.dimension() != dimension())
      throw std::invalid_argument("Point: dimension mismatch");
  }

  std::vector<Rational> coords_;
};

/// Comma-separated coordinate list, e.g. "0,-1/2". Matches the syntax the
/// command line accepts for witness points.
inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  for (int j = 0; j < p.dimension(); ++j) {
    if (j > 0) os << ',';
    os << p[j];
  }
  return os;
}

}  // namespace tverberg
