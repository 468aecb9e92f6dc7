#pragma once

#include <array>
#include <complex>
#include <vector>

namespace singlet6 {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major. Used for Jones matrices, analyzer rotations
// and local unitaries.
struct Mat2 {
  std::array<Complex, 4> m{};

  static Mat2 identity() { return {{Complex{1, 0}, {}, {}, Complex{1, 0}}}; }

  Complex& operator()(int r, int c) { return m[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return m[2 * r + c]; }

  Mat2 adjoint() const;
  bool is_unitary(double tol = 1e-12) const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
};

// Dense complex matrix, row-major; dimensions stay small (<= 64) here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  // |u><v|
  static Matrix outer(const std::vector<Complex>& u, const std::vector<Complex>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;

  std::vector<Complex> apply(const std::vector<Complex>& v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex scale, Matrix a);

// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi rotations.
// Stops when the off-diagonal Frobenius norm drops below tol relative to the
// matrix scale, or after max_sweeps sweeps. Self-contained on purpose.
std::vector<double> hermitian_eigenvalues(Matrix a, double tol = 1e-12,
                                          int max_sweeps = 100);

double max_eigenvalue(const Matrix& a);
double min_eigenvalue(const Matrix& a);

}  // namespace singlet6
