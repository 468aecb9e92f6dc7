#include "singlet6/random.hpp"

#include <cmath>

namespace singlet6 {

Mat2 haar_su2(Rng& rng) {
  double x0, x1, x2, x3, n2;
  do {
    x0 = rng.gaussian();
    x1 = rng.gaussian();
    x2 = rng.gaussian();
    x3 = rng.gaussian();
    n2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
  } while (n2 < 1e-30);
  const double inv = 1.0 / std::sqrt(n2);
  x0 *= inv;
  x1 *= inv;
  x2 *= inv;
  x3 *= inv;
  Mat2 u;
  u(0, 0) = {x0, x1};
  u(0, 1) = {x2, x3};
  u(1, 0) = {-x2, x3};
  u(1, 1) = {x0, -x1};
  return u;
}

std::vector<Complex> random_unit_vector(int dim, Rng& rng) {
  std::vector<Complex> v(dim);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& x : v) {
      x = {rng.gaussian(), rng.gaussian()};
      n2 += std::norm(x);
    }
  } while (n2 < 1e-30);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& x : v) x *= inv;
  return v;
}

Matrix ginibre_density(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = {rng.gaussian(), rng.gaussian()};
  }
  Matrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= Complex{1.0 / tr, 0};
  // Symmetrize away multiplication dust.
  for (int r = 0; r < dim; ++r) {
    for (int c = r + 1; c < dim; ++c) {
      const Complex m = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      rho(r, c) = m;
      rho(c, r) = std::conj(m);
    }
    rho(r, r) = {rho(r, r).real(), 0.0};
  }
  return rho;
}

Matrix random_hermitian(int dim, Rng& rng) {
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    a(r, r) = {rng.gaussian(), 0.0};
    for (int c = r + 1; c < dim; ++c) {
      const Complex x{rng.gaussian() * 0.5, rng.gaussian() * 0.5};
      a(r, c) = x;
      a(c, r) = std::conj(x);
    }
  }
  return a;
}

}  // namespace singlet6
