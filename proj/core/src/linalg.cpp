#include "singlet6/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singlet6 {

Mat2 Mat2::adjoint() const {
  Mat2 out;
  out(0, 0) = std::conj((*this)(0, 0));
  out(0, 1) = std::conj((*this)(1, 0));
  out(1, 0) = std::conj((*this)(0, 1));
  out(1, 1) = std::conj((*this)(1, 1));
  return out;
}

bool Mat2::is_unitary(double tol) const {
  const Mat2 p = adjoint() * (*this);
  return std::abs(p(0, 0) - Complex{1, 0}) < tol && std::abs(p(0, 1)) < tol &&
         std::abs(p(1, 0)) < tol && std::abs(p(1, 1) - Complex{1, 0}) < tol;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return out;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) {
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = Complex{1, 0};
  return out;
}

Matrix Matrix::outer(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  Matrix out(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      out(static_cast<int>(r), static_cast<int>(c)) = u[r] * std::conj(v[c]);
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& x : a_) x *= scale;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex Matrix::trace() const {
  Complex t{0, 0};
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

std::vector<Complex> Matrix::apply(const std::vector<Complex>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<Complex> out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Complex acc{0, 0};
    for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix operator+(Matrix a, const Matrix& b) {
  a += b;
  return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
  a -= b;
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0, 0}) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Matrix operator*(Complex scale, Matrix a) {
  a *= scale;
  return a;
}

namespace {

double offdiagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (r != c) s += std::norm(a(r, c));
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(Matrix a, double tol, int max_sweeps) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
  if (!a.is_hermitian(1e-10 * std::max(1.0, a.max_abs()))) {
    throw std::invalid_argument("eigenvalues need a Hermitian matrix");
  }

  const double scale = std::max(1.0, a.frobenius_norm());
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiagonal_norm(a) < tol * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Unitary 2x2 rotation [[c, -conj(s)], [s, c]] annihilating a(p,q),
        // with s = e^{-i arg(apq)} sin(theta) and tan(2 theta) = 2|apq|/(app-aqq).
        const double tau = (app - aqq) / (2.0 * mag);
        double t;  // tan(theta)
        if (std::abs(tau) > 1e150) {
          t = 1.0 / (2.0 * tau);
        } else {
          t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex phase = apq / mag;  // e^{i arg(apq)}
        const Complex s = std::conj(phase) * (t * c);
        const Complex sconj = std::conj(s);

        // Columns: col_p' = c col_p + s col_q ; col_q' = -conj(s) col_p + c col_q.
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + s * akq;
          a(k, q) = -sconj * akp + c * akq;
        }
        // Rows: row_p' = c row_p + conj(s) row_q ; row_q' = -s row_p + c row_q.
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + sconj * aqk;
          a(q, k) = -s * apk + c * aqk;
        }
        a(p, q) = Complex{0, 0};
        a(q, p) = Complex{0, 0};
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double max_eigenvalue(const Matrix& a) { return hermitian_eigenvalues(a).back(); }

double min_eigenvalue(const Matrix& a) { return hermitian_eigenvalues(a).front(); }

}  // namespace singlet6
