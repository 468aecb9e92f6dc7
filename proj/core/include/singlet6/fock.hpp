#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "singlet6/modes.hpp"

namespace singlet6 {

using Complex = std::complex<double>;

// Relative amplitude pruning threshold applied after every arithmetic pass.
// The states handled here have exact rational structure, so true amplitudes
// sit far above this.
inline constexpr double kPruneRel = 1e-14;

// Multi-mode photon-number ket. Stores only strictly positive occupations,
// sorted in canonical mode order, so equal kets compare equal.
class FockKet {
 public:
  using Occupations = std::vector<std::pair<PolMode, int>>;

  FockKet() = default;  // vacuum
  explicit FockKet(Occupations occupations);

  int occupation(PolMode m) const;
  int total_photons() const;
  const Occupations& occupations() const { return occ_; }

  friend auto operator<=>(const FockKet&, const FockKet&) = default;

  std::string to_string() const;  // "|3H_a0 3V_b0>"

 private:
  Occupations occ_;
};

// Sparse complex superposition of FockKets. Not automatically normalized.
class FockVector {
 public:
  using Terms = std::map<FockKet, Complex>;

  FockVector() = default;

  void add(const FockKet& ket, Complex amplitude);
  Complex amplitude(const FockKet& ket) const;

  double norm2() const;
  double norm() const;

  // Unit-norm copy plus the original norm. Throws std::domain_error on the
  // null vector.
  std::pair<FockVector, double> normalized() const;

  FockVector& prune(double relative_threshold = kPruneRel);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator*=(Complex scale);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::string to_string() const;

 private:
  Terms terms_;
};

// Conjugate-linear in the first argument.
Complex inner_product(const FockVector& u, const FockVector& v);

// Polynomial in commuting creation operators. Monomials are stored as sorted
// (mode, power>0) lists with merged coefficients, so expansion results are
// canonical and reproducible.
class CreationPolynomial {
 public:
  using Powers = std::vector<std::pair<PolMode, int>>;
  using Terms = std::map<Powers, Complex>;

  CreationPolynomial() = default;  // zero polynomial

  static CreationPolynomial constant(Complex c);
  static CreationPolynomial creation(PolMode m);
  static CreationPolynomial monomial(Complex coeff, Powers powers);

  CreationPolynomial& operator+=(const CreationPolynomial& other);
  CreationPolynomial& operator*=(Complex scale);

  const Terms& monomials() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  CreationPolynomial& prune(double relative_threshold = kPruneRel);

 private:
  Terms terms_;
};

CreationPolynomial operator*(const CreationPolynomial& p,
                             const CreationPolynomial& q);
CreationPolynomial operator+(CreationPolynomial p, const CreationPolynomial& q);

// Multinomial expansion of p^n with like terms merged; requires n >= 1.
CreationPolynomial poly_power(const CreationPolynomial& p, int n);

// Applies the polynomial to the vacuum: each monomial prod_i (a_i^dag)^{k_i}
// yields the ket with occupations k_i and amplitude coeff * prod_i sqrt(k_i!).
// The result is not normalized.
FockVector apply_to_vacuum(const CreationPolynomial& p);

}  // namespace singlet6
