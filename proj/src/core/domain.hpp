#pragma once

#include <array>

namespace hq {

inline constexpr double kPi = 3.14159265358979323846;

enum class DomainKind { Interval, Sphere };

// A point of the manifold embedded in R^3; interval points use x[0] only.
using Point = std::array<double, 3>;

// Approximation manifold tag carrying the total measure V = int dω.
struct Domain {
  DomainKind kind;
  double total_measure;

  static Domain interval() { return {DomainKind::Interval, 2.0}; }
  static Domain sphere() { return {DomainKind::Sphere, 4.0 * kPi}; }

  int point_dim() const { return kind == DomainKind::Interval ? 1 : 3; }
};

inline bool operator==(const Domain& a, const Domain& b) {
  return a.kind == b.kind;
}

}  // namespace hq
