#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace singlet6::oracle {

FockVector apply_creation(const FockVector& v, PolMode mode) {
  FockVector out;
  for (const auto& [ket, amp] : v.terms()) {
    const int n = ket.occupation(mode);
    FockKet::Occupations occ = ket.occupations();
    occ.emplace_back(mode, 1);
    out.add(FockKet(occ), amp * std::sqrt(static_cast<double>(n) + 1.0));
  }
  return out;
}

FockVector apply_to_vacuum_sequential(const CreationPolynomial& p) {
  FockVector vacuum;
  vacuum.add(FockKet{}, {1, 0});
  return apply_polynomial_sequential(p, vacuum);
}

FockVector apply_polynomial_sequential(const CreationPolynomial& p, const FockVector& v) {
  FockVector out;
  for (const auto& [powers, coeff] : p.monomials()) {
    FockVector term = v;
    term *= coeff;
    for (const auto& [mode, power] : powers) {
      for (int k = 0; k < power; ++k) term = apply_creation(term, mode);
    }
    out += term;
  }
  return out;
}

CreationPolynomial poly_power_multinomial(const CreationPolynomial& p, int n) {
  std::vector<std::pair<CreationPolynomial::Powers, Complex>> monos(
      p.monomials().begin(), p.monomials().end());
  const int m = static_cast<int>(monos.size());

  const std::function<double(int)> fact = [&](int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };

  CreationPolynomial out;
  std::vector<int> k(m, 0);
  const std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == m - 1) {
      k[index] = remaining;
      double multinomial = fact(n);
      Complex coeff{1, 0};
      CreationPolynomial::Powers powers;
      for (int i = 0; i < m; ++i) {
        multinomial /= fact(k[i]);
        for (int rep = 0; rep < k[i]; ++rep) {
          coeff *= monos[i].second;
          for (const auto& mp : monos[i].first) powers.push_back(mp);
        }
      }
      out += CreationPolynomial::monomial(coeff * multinomial, powers);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      k[index] = take;
      rec(index + 1, remaining - take);
    }
  };
  if (m == 0) return out;
  rec(0, n);
  return out;
}

double power_iteration_max(const Matrix& a, Rng& rng, int max_iters) {
  const int dim = a.rows();
  const double shift = a.frobenius_norm();  // >= spectral radius
  Matrix b = a;
  Matrix shift_m = Matrix::identity(dim);
  shift_m *= Complex{shift, 0};
  b += shift_m;

  std::vector<Complex> v(dim);
  double n2 = 0.0;
  for (auto& x : v) {
    x = {rng.gaussian(), rng.gaussian()};
    n2 += std::norm(x);
  }
  for (auto& x : v) x *= 1.0 / std::sqrt(n2);

  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<Complex> w = b.apply(v);
    double wn = 0.0;
    Complex ray{0, 0};
    for (int i = 0; i < dim; ++i) {
      wn += std::norm(w[i]);
      ray += std::conj(v[i]) * w[i];
    }
    lambda = ray.real();
    const double wnorm = std::sqrt(wn);
    double residual = 0.0;
    for (int i = 0; i < dim; ++i) {
      residual += std::norm(w[i] - lambda * v[i]);
      v[i] = w[i] / wnorm;
    }
    if (std::sqrt(residual) < 1e-11 * std::max(1.0, std::abs(lambda))) break;
  }
  return lambda - shift;
}

std::vector<double> power_iteration_top(const Matrix& a, int k, Rng& rng) {
  Matrix deflated = a;
  const int dim = a.rows();
  std::vector<double> eigs;
  for (int j = 0; j < k; ++j) {
    // Re-run power iteration, keeping the final vector for deflation.
    const double shift = deflated.frobenius_norm();
    Matrix b = deflated;
    Matrix shift_m = Matrix::identity(dim);
    shift_m *= Complex{shift, 0};
    b += shift_m;

    std::vector<Complex> v(dim);
    double n2 = 0.0;
    for (auto& x : v) {
      x = {rng.gaussian(), rng.gaussian()};
      n2 += std::norm(x);
    }
    for (auto& x : v) x *= 1.0 / std::sqrt(n2);
    double lambda = 0.0;
    for (int it = 0; it < 8000; ++it) {
      std::vector<Complex> w = b.apply(v);
      double wn = 0.0;
      Complex ray{0, 0};
      for (int i = 0; i < dim; ++i) {
        wn += std::norm(w[i]);
        ray += std::conj(v[i]) * w[i];
      }
      lambda = ray.real();
      const double wnorm = std::sqrt(wn);
      double residual = 0.0;
      for (int i = 0; i < dim; ++i) {
        residual += std::norm(w[i] - lambda * v[i]);
        v[i] = w[i] / wnorm;
      }
      if (std::sqrt(residual) < 1e-12 * std::max(1.0, std::abs(lambda))) break;
    }
    eigs.push_back(lambda - shift);
    Matrix vv = Matrix::outer(v, v);
    vv *= Complex{lambda - shift, 0};
    deflated -= vv;
  }
  return eigs;
}

Matrix pauli_word_matrix(const std::vector<int>& word) {
  const Complex i{0, 1};
  const std::vector<std::vector<std::vector<Complex>>> singles = {
      {{1, 0}, {0, 1}},    // I
      {{0, 1}, {1, 0}},    // X
      {{0, -i}, {i, 0}},   // Y
      {{1, 0}, {0, -1}},   // Z
  };
  Matrix out(1, 1);
  out(0, 0) = {1, 0};
  for (int letter : word) {
    const auto& s = singles[letter];
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < out.rows(); ++r) {
      for (int c = 0; c < out.cols(); ++c) {
        for (int sr = 0; sr < 2; ++sr) {
          for (int sc = 0; sc < 2; ++sc) {
            next(2 * r + sr, 2 * c + sc) = out(r, c) * s[sr][sc];
          }
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

FockVector random_fock_vector(Rng& rng, const std::vector<PolMode>& modes,
                              int max_terms, int max_photons_per_mode) {
  FockVector v;
  const int n_terms = 1 + static_cast<int>(rng.uniform() * max_terms);
  for (int t = 0; t < n_terms; ++t) {
    FockKet::Occupations occ;
    for (const auto& mode : modes) {
      const int count = static_cast<int>(rng.uniform() * (max_photons_per_mode + 1));
      if (count > 0) occ.emplace_back(mode, count);
    }
    v.add(FockKet(occ), {rng.gaussian(), rng.gaussian()});
  }
  return v;
}

}  // namespace singlet6::oracle
