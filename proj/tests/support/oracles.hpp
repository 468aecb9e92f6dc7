#pragma once

// Independent reference implementations used to check the library: these
// deliberately avoid the code paths they validate.

#include <vector>

#include "singlet6/fock.hpp"
#include "singlet6/linalg.hpp"
#include "singlet6/rng.hpp"

namespace singlet6::oracle {

// a^dag acting on a number-state superposition, one quantum at a time:
// |..n..> -> sqrt(n+1) |..n+1..>.
FockVector apply_creation(const FockVector& v, PolMode mode);

// Applies a polynomial to the vacuum via repeated single-operator application.
FockVector apply_to_vacuum_sequential(const CreationPolynomial& p);

// One application of the polynomial as an operator on an existing state,
// again one creation operator at a time.
FockVector apply_polynomial_sequential(const CreationPolynomial& p, const FockVector& v);

// p^n through the multinomial theorem: sum over compositions k of n of
// n!/(prod k_i!) prod c_i^{k_i} m^k.
CreationPolynomial poly_power_multinomial(const CreationPolynomial& p, int n);

// Largest eigenvalue by shifted power iteration (Rayleigh quotient).
double power_iteration_max(const Matrix& a, Rng& rng, int max_iters = 5000);

// Top-k eigenvalues by power iteration with deflation.
std::vector<double> power_iteration_top(const Matrix& a, int k, Rng& rng);

// Dense n-qubit Pauli word by explicit Kronecker products.
Matrix pauli_word_matrix(const std::vector<int>& word);  // 0=I 1=X 2=Y 3=Z

// Random sparse Fock vector over the given modes (for property tests).
FockVector random_fock_vector(Rng& rng, const std::vector<PolMode>& modes,
                              int max_terms, int max_photons_per_mode);

}  // namespace singlet6::oracle
