#include "bases.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace hq {

namespace {

constexpr double kPointTol = 1e-12;

void check_interval_x(double x) {
  if (!(std::abs(x) <= 1.0 + kPointTol))
    fail(errc::domain_error,
         "interval point out of range: x = " + std::to_string(x));
}

}  // namespace

long long dim_poly_space(const Domain& domain, int n) {
  if (n < 0) fail(errc::invalid_argument, "degree must be nonnegative");
  long long d = n + 1;
  return domain.kind == DomainKind::Interval ? d : d * d;
}

double legendre_normalized(int degree, double x) {
  if (degree < 0) fail(errc::invalid_argument, "degree must be nonnegative");
  check_interval_x(x);
  x = std::clamp(x, -1.0, 1.0);
  // off-diagonal Jacobi coefficients b_l = l / sqrt(4 l^2 - 1)
  double pm1 = 1.0 / std::sqrt(2.0);
  if (degree == 0) return pm1;
  double bl = 1.0 / std::sqrt(3.0);
  double p = x * pm1 / bl;
  for (int l = 1; l < degree; ++l) {
    double bl1 = (l + 1.0) / std::sqrt(4.0 * (l + 1.0) * (l + 1.0) - 1.0);
    double pn = (x * p - bl * pm1) / bl1;
    pm1 = p;
    p = pn;
    bl = bl1;
  }
  return p;
}

void legendre_normalized_all(int n, double x, std::span<double> out) {
  if (n < 0) fail(errc::invalid_argument, "degree must be nonnegative");
  check_interval_x(x);
  x = std::clamp(x, -1.0, 1.0);
  out[0] = 1.0 / std::sqrt(2.0);
  if (n == 0) return;
  double bl = 1.0 / std::sqrt(3.0);
  out[1] = x * out[0] / bl;
  for (int l = 1; l < n; ++l) {
    double bl1 = (l + 1.0) / std::sqrt(4.0 * (l + 1.0) * (l + 1.0) - 1.0);
    out[l + 1] = (x * out[l] - bl * out[l - 1]) / bl1;
    bl = bl1;
  }
}

long long sphere_flat_index(int degree, int order) {
  if (degree < 0 || order < 1 || order > 2 * degree + 1)
    fail(errc::invalid_argument, "order must lie in [1, 2*degree+1]");
  return static_cast<long long>(degree) * degree + order;
}

std::pair<int, int> sphere_degree_order(long long flat) {
  if (flat < 1) fail(errc::invalid_argument, "flat index must be positive");
  auto l = static_cast<long long>(std::sqrt(static_cast<double>(flat - 1)));
  while (l * l >= flat) --l;
  while ((l + 1) * (l + 1) < flat) ++l;
  return {static_cast<int>(l), static_cast<int>(flat - l * l)};
}

SphereBasisEval::SphereBasisEval(int n) : n_(n) {
  if (n < 0) fail(errc::invalid_argument, "degree must be nonnegative");
  plm_.resize(static_cast<size_t>(n + 1) * (n + 2) / 2);
  cosm_.resize(n + 1);
  sinm_.resize(n + 1);
}

void SphereBasisEval::eval(const Point& p, double* out) {
  const double nrm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  if (std::abs(nrm - 1.0) > kPointTol)
    fail(errc::domain_error,
         "sphere point is not unit: |p| = " + std::to_string(nrm));
  const double z = std::clamp(p[2] / nrm, -1.0, 1.0);
  const double s = std::hypot(p[0], p[1]) / nrm;
  // cos/sin of m*phi by rotation composition; poles have s == 0 and only
  // m == 0 terms survive, so the arbitrary phi there is harmless.
  const double cphi = s > 0.0 ? p[0] / (nrm * s) : 1.0;
  const double sphi = s > 0.0 ? p[1] / (nrm * s) : 0.0;
  cosm_[0] = 1.0;
  sinm_[0] = 0.0;
  for (int m = 1; m <= n_; ++m) {
    cosm_[m] = cphi * cosm_[m - 1] - sphi * sinm_[m - 1];
    sinm_[m] = sphi * cosm_[m - 1] + cphi * sinm_[m - 1];
  }

  // Fully normalized associated Legendre table, normalization carried
  // inside the recurrences (no factorials, stable for large degrees).
  auto at = [this](int l, int m) -> double& {
    return plm_[static_cast<size_t>(l) * (l + 1) / 2 + m];
  };
  at(0, 0) = 1.0 / std::sqrt(4.0 * kPi);
  for (int m = 1; m <= n_; ++m)
    at(m, m) = s * std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * at(m - 1, m - 1);
  for (int m = 0; m < n_; ++m)
    at(m + 1, m) = z * std::sqrt(2.0 * m + 3.0) * at(m, m);
  for (int m = 0; m <= n_; ++m) {
    for (int l = m + 2; l <= n_; ++l) {
      const double a =
          std::sqrt((4.0 * l * l - 1.0) /
                    (static_cast<double>(l) * l - static_cast<double>(m) * m));
      const double b = std::sqrt(
          ((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
          (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
      at(l, m) = a * (z * at(l - 1, m) - b * at(l - 2, m));
    }
  }

  const double sqrt2 = std::sqrt(2.0);
  for (int l = 0; l <= n_; ++l) {
    const long long base = static_cast<long long>(l) * l + l;  // 0-based m=0
    out[base] = at(l, 0);
    for (int m = 1; m <= l; ++m) {
      const double v = sqrt2 * at(l, m);
      out[base + m] = v * cosm_[m];
      out[base - m] = v * sinm_[m];
    }
  }
}

double sph_harmonic(int degree, int order, const Point& p) {
  if (degree < 0) fail(errc::invalid_argument, "degree must be nonnegative");
  if (order < 1 || order > 2 * degree + 1)
    fail(errc::invalid_argument, "order must lie in [1, 2*degree+1]");
  SphereBasisEval ev(degree);
  std::vector<double> all(static_cast<size_t>(degree + 1) * (degree + 1));
  ev.eval(p, all.data());
  return all[static_cast<size_t>(degree) * degree + order - 1];
}

void basis_vector(const Domain& domain, int n, const Point& p,
                  std::span<double> out) {
  if (domain.kind == DomainKind::Interval) {
    legendre_normalized_all(n, p[0], out);
  } else {
    SphereBasisEval ev(n);
    ev.eval(p, out.data());
  }
}

std::vector<double> basis_vector(const Domain& domain, int n, const Point& p) {
  std::vector<double> out(static_cast<size_t>(dim_poly_space(domain, n)));
  basis_vector(domain, n, p, out);
  return out;
}

}  // namespace hq
