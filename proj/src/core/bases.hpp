#pragma once

#include <span>
#include <utility>
#include <vector>

#include "domain.hpp"

namespace hq {

// dim P_n: n+1 on the interval, (n+1)^2 on the sphere.
long long dim_poly_space(const Domain& domain, int n);

// Legendre polynomial of the given degree scaled to unit L2 norm on
// [-1,1], i.e. sqrt((2l+1)/2) * P_l(x). Requires |x| <= 1 + 1e-12.
double legendre_normalized(int degree, double x);

// All normalized Legendre values of degree 0..n at x.
void legendre_normalized_all(int n, double x, std::span<double> out);

// Flat basis index (1-based) <-> (degree, order) on the sphere,
// order in [1, 2*degree+1]: flat = degree^2 + order.
long long sphere_flat_index(int degree, int order);
std::pair<int, int> sphere_degree_order(long long flat);

// Real orthonormal spherical harmonic Y_{degree,order} at a unit point
// (tolerance 1e-12 on the norm).
double sph_harmonic(int degree, int order, const Point& p);

// Evaluates the full degree-n spherical-harmonic basis at a point.
// Holds scratch storage, so give each thread its own instance.
class SphereBasisEval {
 public:
  explicit SphereBasisEval(int n);
  // out receives the (n+1)^2 values in flat-index order.
  void eval(const Point& p, double* out);

 private:
  int n_;
  std::vector<double> plm_;  // packed fully normalized assoc. Legendre
  std::vector<double> cosm_, sinm_;
};

// Component l of the result is the l-th orthonormal basis value at p.
void basis_vector(const Domain& domain, int n, const Point& p,
                  std::span<double> out);
std::vector<double> basis_vector(const Domain& domain, int n, const Point& p);

}  // namespace hq
