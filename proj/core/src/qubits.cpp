#include "singlet6/qubits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace singlet6 {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

const std::vector<Spatial> kDefaultModes = {Spatial::A, Spatial::B, Spatial::C,
                                            Spatial::D, Spatial::E, Spatial::F};

std::vector<Spatial> default_modes(int n) {
  return {kDefaultModes.begin(), kDefaultModes.begin() + n};
}

std::size_t pattern_index(std::string_view letters) {
  std::size_t idx = 0;
  for (char ch : letters) {
    idx <<= 1;
    if (ch == 'V' || ch == 'A' || ch == '1') idx |= 1;
  }
  return idx;
}

std::vector<Complex> pattern(int n,
                             std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
  for (const auto& [letters, amp] : terms) amps[pattern_index(letters)] += amp;
  return amps;
}

// Hadamard; maps D/A patterns to computational amplitudes.
const Mat2 kHadamard{{Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0},
                      Complex{kInvSqrt2, 0}, Complex{-kInvSqrt2, 0}}};

void apply_single_qubit(std::vector<Complex>& amps, int n, int position, const Mat2& u) {
  const std::size_t stride = std::size_t{1} << (n - 1 - position);
  for (std::size_t base = 0; base < amps.size(); ++base) {
    if (base & stride) continue;
    const Complex a0 = amps[base];
    const Complex a1 = amps[base | stride];
    amps[base] = u(0, 0) * a0 + u(0, 1) * a1;
    amps[base | stride] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void check_unitaries(std::span<const Mat2> us) {
  for (const auto& u : us) {
    if (!u.is_unitary(1e-12)) throw std::invalid_argument("local operator is not unitary");
  }
}

Matrix tensor_matrix(std::span<const Mat2> us) {
  const int n = static_cast<int>(us.size());
  const int dim = 1 << n;
  Matrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      Complex v{1, 0};
      for (int q = 0; q < n && v != Complex{0, 0}; ++q) {
        const int rb = (r >> (n - 1 - q)) & 1;
        const int cb = (c >> (n - 1 - q)) & 1;
        v *= us[q](rb, cb);
      }
      out(r, c) = v;
    }
  }
  return out;
}

// Phase of P|j> = phase(j) |j ^ mask>.
struct WordAction {
  std::size_t mask = 0;
  std::vector<Pauli> word;
  int n = 0;

  explicit WordAction(const std::vector<Pauli>& w) : word(w), n(static_cast<int>(w.size())) {
    for (int q = 0; q < n; ++q) {
      if (word[q] == Pauli::X || word[q] == Pauli::Y) {
        mask |= std::size_t{1} << (n - 1 - q);
      }
    }
  }

  Complex phase(std::size_t j) const {
    Complex ph{1, 0};
    for (int q = 0; q < n; ++q) {
      const int b = static_cast<int>((j >> (n - 1 - q)) & 1u);
      switch (word[q]) {
        case Pauli::I:
        case Pauli::X:
          break;
        case Pauli::Y:
          ph *= b ? Complex{0, -1} : Complex{0, 1};
          break;
        case Pauli::Z:
          if (b) ph = -ph;
          break;
      }
    }
    return ph;
  }
};

}  // namespace

QubitState::QubitState(std::vector<Spatial> modes, std::vector<Complex> amps)
    : modes_(std::move(modes)), amps_(std::move(amps)) {
  const int n = static_cast<int>(modes_.size());
  if (n < 1 || n > 6) throw std::invalid_argument("qubit count must be between 1 and 6");
  if (amps_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("amplitude count must be 2^n");
  }
  double n2 = 0.0;
  for (const auto& a : amps_) n2 += std::norm(a);
  if (n2 <= 0.0) throw std::domain_error("cannot normalize null state");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps_) a *= inv;
}

Complex overlap(const QubitState& a, const QubitState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("overlap requires equal qubit counts");
  }
  Complex out{0, 0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return out;
}

QubitState tensor(const QubitState& u, const QubitState& v) {
  std::vector<Spatial> modes = u.modes();
  modes.insert(modes.end(), v.modes().begin(), v.modes().end());
  std::vector<Complex> amps(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
      amps[i * v.dim() + j] = u.amplitude(i) * v.amplitude(j);
    }
  }
  return {std::move(modes), std::move(amps)};
}

DensityOperator::DensityOperator(Matrix rho) : rho_(std::move(rho)) {
  const int dim = rho_.rows();
  if (dim != rho_.cols() || dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("density operator dimension must be a power of two");
  }
  n_ = 0;
  while ((1 << n_) < dim) ++n_;
  if (!rho_.is_hermitian(1e-10)) {
    throw std::invalid_argument("density operator must be Hermitian");
  }
  if (std::abs(rho_.trace() - Complex{1, 0}) > 1e-10) {
    throw std::invalid_argument("density operator must have unit trace");
  }
}

DensityOperator DensityOperator::pure(const QubitState& psi) {
  return DensityOperator(Matrix::outer(psi.amplitudes(), psi.amplitudes()));
}

double DensityOperator::min_eigenvalue() const { return singlet6::min_eigenvalue(rho_); }

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::from_string(std::string_view letters, double coeff) {
  PauliString out;
  out.coeff = coeff;
  out.word.reserve(letters.size());
  for (char ch : letters) {
    switch (ch) {
      case 'I': case 'i': out.word.push_back(Pauli::I); break;
      case 'X': case 'x': out.word.push_back(Pauli::X); break;
      case 'Y': case 'y': out.word.push_back(Pauli::Y); break;
      case 'Z': case 'z': out.word.push_back(Pauli::Z); break;
      default: throw std::invalid_argument("invalid Pauli letter");
    }
  }
  return out;
}

std::string PauliString::word_string() const {
  std::string s;
  s.reserve(word.size());
  for (Pauli p : word) s.push_back(to_char(p));
  return s;
}

bool PauliString::is_non_mixed() const {
  Pauli type = Pauli::I;
  for (Pauli p : word) {
    if (p == Pauli::I) continue;
    if (type == Pauli::I) {
      type = p;
    } else if (p != type) {
      return false;
    }
  }
  return true;
}

bool PauliString::is_identity() const {
  return std::all_of(word.begin(), word.end(), [](Pauli p) { return p == Pauli::I; });
}

int PauliString::weight() const {
  return static_cast<int>(
      std::count_if(word.begin(), word.end(), [](Pauli p) { return p != Pauli::I; }));
}

void PauliSum::add(const PauliString& term) {
  if (static_cast<int>(term.word.size()) != n_) {
    throw std::invalid_argument("Pauli word length mismatch");
  }
  for (auto& existing : terms_) {
    if (existing.word == term.word) {
      existing.coeff += term.coeff;
      return;
    }
  }
  terms_.push_back(term);
}

double PauliSum::coefficient(std::string_view word) const {
  for (const auto& term : terms_) {
    if (term.word_string() == word) return term.coeff;
  }
  return 0.0;
}

Matrix PauliSum::to_matrix() const {
  const int dim = 1 << n_;
  Matrix out(dim, dim);
  for (const auto& term : terms_) {
    const WordAction action(term.word);
    for (std::size_t j = 0; j < static_cast<std::size_t>(dim); ++j) {
      out(static_cast<int>(j ^ action.mask), static_cast<int>(j)) +=
          term.coeff * action.phase(j);
    }
  }
  return out;
}

double PauliSum::expectation(const QubitState& psi) const {
  double out = 0.0;
  for (const auto& term : terms_) out += pauli_expectation(psi, term);
  return out;
}

double PauliSum::expectation(const DensityOperator& rho) const {
  double out = 0.0;
  for (const auto& term : terms_) out += pauli_expectation(rho, term);
  return out;
}

QubitState named_state(StateName name, LocalBasis basis) {
  std::vector<Complex> amps;
  int n = 0;
  const Complex h{kInvSqrt2, 0};
  switch (name) {
    case StateName::GHZ6Minus:
      n = 6;
      amps = pattern(6, {{"HHHVVV", h}, {"VVVHHH", -h}});
      break;
    case StateName::GHZ5Minus:
      n = 5;
      amps = pattern(5, {{"HHVVV", h}, {"VVHHH", -h}});
      break;
    case StateName::GHZ5Plus:
      n = 5;
      amps = pattern(5, {{"HHVVV", h}, {"VVHHH", h}});
      break;
    case StateName::W3: {
      n = 3;
      const Complex w{1.0 / std::sqrt(3.0), 0};
      amps = pattern(3, {{"HHV", w}, {"HVH", w}, {"VHH", w}});
      break;
    }
    case StateName::W3Bar: {
      n = 3;
      const Complex w{1.0 / std::sqrt(3.0), 0};
      amps = pattern(3, {{"VVH", w}, {"VHV", w}, {"HVV", w}});
      break;
    }
    case StateName::Psi2Plus:
      n = 2;
      amps = pattern(2, {{"HV", h}, {"VH", h}});
      break;
    case StateName::Psi6Minus: {
      n = 6;
      const QubitState ghz = named_state(StateName::GHZ6Minus);
      const QubitState w3 = named_state(StateName::W3);
      const QubitState w3b = named_state(StateName::W3Bar);
      const QubitState wbw = tensor(w3b, w3);
      const QubitState wwb = tensor(w3, w3b);
      amps.assign(64, Complex{0, 0});
      for (std::size_t i = 0; i < 64; ++i) {
        amps[i] = kInvSqrt2 * ghz.amplitude(i) +
                  0.5 * (wbw.amplitude(i) - wwb.amplitude(i));
      }
      break;
    }
  }
  QubitState state(default_modes(n), std::move(amps));
  if (basis == LocalBasis::DA) state = local_unitary(state, kHadamard);
  return state;
}

QubitState local_unitary(const QubitState& psi, std::span<const Mat2> us) {
  if (static_cast<int>(us.size()) != psi.n_qubits()) {
    throw std::invalid_argument("one unitary per qubit required");
  }
  check_unitaries(us);
  std::vector<Complex> amps = psi.amplitudes();
  for (int q = 0; q < psi.n_qubits(); ++q) {
    apply_single_qubit(amps, psi.n_qubits(), q, us[q]);
  }
  return {psi.modes(), std::move(amps)};
}

QubitState local_unitary(const QubitState& psi, const Mat2& u) {
  const std::vector<Mat2> us(psi.n_qubits(), u);
  return local_unitary(psi, std::span<const Mat2>(us));
}

DensityOperator local_unitary(const DensityOperator& rho, std::span<const Mat2> us) {
  if (static_cast<int>(us.size()) != rho.n_qubits()) {
    throw std::invalid_argument("one unitary per qubit required");
  }
  check_unitaries(us);
  const Matrix u = tensor_matrix(us);
  return DensityOperator(u * rho.matrix() * u.adjoint());
}

DensityOperator local_unitary(const DensityOperator& rho, const Mat2& u) {
  const std::vector<Mat2> us(rho.n_qubits(), u);
  return local_unitary(rho, std::span<const Mat2>(us));
}

double pauli_expectation(const QubitState& psi, const PauliString& p) {
  if (static_cast<int>(p.word.size()) != psi.n_qubits()) {
    throw std::invalid_argument("Pauli word length mismatch");
  }
  const WordAction action(p.word);
  Complex acc{0, 0};
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    acc += std::conj(psi.amplitude(j ^ action.mask)) * action.phase(j) * psi.amplitude(j);
  }
  acc *= p.coeff;
  if (std::abs(acc.imag()) > 1e-10) {
    throw std::runtime_error("Pauli expectation has non-real residue");
  }
  return acc.real();
}

double pauli_expectation(const DensityOperator& rho, const PauliString& p) {
  if (static_cast<int>(p.word.size()) != rho.n_qubits()) {
    throw std::invalid_argument("Pauli word length mismatch");
  }
  const WordAction action(p.word);
  Complex acc{0, 0};
  const Matrix& m = rho.matrix();
  for (std::size_t j = 0; j < static_cast<std::size_t>(m.rows()); ++j) {
    // tr(rho P) picks rho[j, j ^ mask] with the phase of column j.
    acc += m(static_cast<int>(j), static_cast<int>(j ^ action.mask)) * action.phase(j);
  }
  acc *= p.coeff;
  if (std::abs(acc.imag()) > 1e-10) {
    throw std::runtime_error("Pauli expectation has non-real residue");
  }
  return acc.real();
}

double fidelity(const DensityOperator& rho, const QubitState& target) {
  if (rho.n_qubits() != target.n_qubits()) {
    throw std::invalid_argument("fidelity dimension mismatch");
  }
  const std::vector<Complex> rv = rho.matrix().apply(target.amplitudes());
  Complex acc{0, 0};
  for (std::size_t i = 0; i < rv.size(); ++i) {
    acc += std::conj(target.amplitude(i)) * rv[i];
  }
  return acc.real();
}

DensityOperator add_white_noise(const QubitState& psi, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise fraction must be in [0, 1]");
  const int dim = static_cast<int>(psi.dim());
  Matrix rho = Matrix::outer(psi.amplitudes(), psi.amplitudes());
  rho *= Complex{1.0 - p, 0};
  Matrix mixed = Matrix::identity(dim);
  mixed *= Complex{p / dim, 0};
  rho += mixed;
  return DensityOperator(std::move(rho));
}

PauliSum pauli_decompose(const Matrix& h) {
  const int dim = h.rows();
  if (dim != h.cols() || dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("pauli_decompose needs a 2^n x 2^n matrix");
  }
  if (!h.is_hermitian(1e-10)) {
    throw std::invalid_argument("pauli_decompose needs a Hermitian matrix");
  }
  int n = 0;
  while ((1 << n) < dim) ++n;

  PauliSum sum(n);
  std::vector<Pauli> word(n, Pauli::I);
  const std::size_t n_words = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < n_words; ++code) {
    std::size_t c = code;
    for (int q = n - 1; q >= 0; --q) {
      word[q] = static_cast<Pauli>(c & 3u);
      c >>= 2;
    }
    const WordAction action(word);
    Complex acc{0, 0};
    for (std::size_t k = 0; k < static_cast<std::size_t>(dim); ++k) {
      // tr(P H) = sum_k phase(k) H[k, k ^ mask]
      acc += action.phase(k) * h(static_cast<int>(k), static_cast<int>(k ^ action.mask));
    }
    const double coeff = acc.real() / dim;
    if (std::abs(coeff) > 1e-14) {
      sum.add(PauliString{word, coeff});
    }
  }
  return sum;
}

}  // namespace singlet6
