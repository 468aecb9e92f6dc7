#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "singlet6/linalg.hpp"
#include "singlet6/modes.hpp"

namespace singlet6 {

// Pure n-qubit polarization state (n between 1 and 6). Amplitudes live in the
// H/V product basis with H <-> bit 0 and V <-> bit 1; the first listed mode is
// the most significant bit.
class QubitState {
 public:
  QubitState(std::vector<Spatial> modes, std::vector<Complex> amps);

  int n_qubits() const { return static_cast<int>(modes_.size()); }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Spatial>& modes() const { return modes_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t index) const { return amps_[index]; }

  // Bit of `index` belonging to qubit `position` (0-based from the first mode).
  int bit(std::size_t index, int position) const {
    return static_cast<int>((index >> (n_qubits() - 1 - position)) & 1u);
  }

 private:
  std::vector<Spatial> modes_;
  std::vector<Complex> amps_;
};

// <a|b>; requires equal qubit count.
Complex overlap(const QubitState& a, const QubitState& b);

// |u> tensor |v>, with u occupying the most significant qubits.
QubitState tensor(const QubitState& u, const QubitState& v);

// Mixed state as a dense 2^n x 2^n matrix; Hermitian with unit trace.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix rho);
  static DensityOperator pure(const QubitState& psi);

  int n_qubits() const { return n_; }
  const Matrix& matrix() const { return rho_; }

  // Smallest eigenvalue; physical states satisfy >= -1e-9 up to numerics.
  double min_eigenvalue() const;

 private:
  Matrix rho_;
  int n_;
};

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

// One real-weighted n-qubit Pauli word.
struct PauliString {
  std::vector<Pauli> word;
  double coeff = 1.0;

  static PauliString from_string(std::string_view letters, double coeff = 1.0);
  std::string word_string() const;

  // All-X / all-Y / all-Z once identities are removed; the all-identity word
  // counts as non-mixed.
  bool is_non_mixed() const;
  bool is_identity() const;
  int weight() const;  // number of non-identity letters
};

// Hermitian operator as a list of Pauli words with unique words.
class PauliSum {
 public:
  PauliSum() = default;  // empty zero-qubit sum, assign before use
  explicit PauliSum(int n_qubits) : n_(n_qubits) {}

  void add(const PauliString& term);  // merges equal words
  const std::vector<PauliString>& terms() const { return terms_; }
  int n_qubits() const { return n_; }
  double coefficient(std::string_view word) const;  // 0 when absent

  Matrix to_matrix() const;
  double expectation(const QubitState& psi) const;
  double expectation(const DensityOperator& rho) const;

 private:
  int n_ = 0;
  std::vector<PauliString> terms_;
};

enum class StateName {
  GHZ6Minus,
  GHZ5Plus,
  GHZ5Minus,
  W3,
  W3Bar,
  Psi2Plus,
  Psi6Minus,
};

// Letter basis for the closed-form patterns: HV reads the pattern in the
// computational basis, DA reads it in the diagonal/antidiagonal basis (the
// returned amplitudes are always computational).
enum class LocalBasis { HV, DA };

QubitState named_state(StateName name, LocalBasis basis = LocalBasis::HV);

// Tensor-product action of per-qubit unitaries; throws on non-unitary input.
QubitState local_unitary(const QubitState& psi, std::span<const Mat2> us);
QubitState local_unitary(const QubitState& psi, const Mat2& u);  // same u everywhere
DensityOperator local_unitary(const DensityOperator& rho, std::span<const Mat2> us);
DensityOperator local_unitary(const DensityOperator& rho, const Mat2& u);

double pauli_expectation(const QubitState& psi, const PauliString& p);
double pauli_expectation(const DensityOperator& rho, const PauliString& p);

// <target| rho |target>
double fidelity(const DensityOperator& rho, const QubitState& target);

// (1-p) |psi><psi| + p 1/2^n
DensityOperator add_white_noise(const QubitState& psi, double p);

// Expansion coefficients tr(P_w H)/2^n over all 4^n words; requires Hermitian
// input, so the coefficients are real.
PauliSum pauli_decompose(const Matrix& h);

}  // namespace singlet6
