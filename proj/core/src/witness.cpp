#include "singlet6/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace singlet6 {

namespace {

// Parity of outcome o restricted to the word's support.
double parity_estimate(const OutcomeDistribution& d, std::size_t support_mask) {
  double e = 0.0;
  for (std::size_t o = 0; o < d.probs.size(); ++o) {
    const int flips = std::popcount(o & support_mask);
    e += (flips % 2 == 0 ? 1.0 : -1.0) * d.probs[o];
  }
  return e;
}

std::size_t support_mask(const PauliString& term) {
  const int n = static_cast<int>(term.word.size());
  std::size_t mask = 0;
  for (int q = 0; q < n; ++q) {
    if (term.word[q] != Pauli::I) mask |= std::size_t{1} << (n - 1 - q);
  }
  return mask;
}

Pauli word_type(const PauliString& term) {
  for (Pauli p : term.word) {
    if (p != Pauli::I) return p;
  }
  return Pauli::I;
}

OutcomeDistribution empirical(const CountsTable& t) {
  std::vector<double> probs(t.counts.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = static_cast<double>(t.counts[i]) / static_cast<double>(t.total);
  }
  return {std::move(probs)};
}

void require_uniform_setting(const CountsTable& t, QubitBasis::Kind kind,
                             const char* name) {
  if (t.total == 0) throw std::invalid_argument("counts table has zero total");
  for (const auto& b : t.setting.bases()) {
    if (b.kind != kind) {
      throw std::invalid_argument(std::string("missing setting: expected uniform ") + name);
    }
  }
}

CountsTable resample(const CountsTable& t, Rng& rng) {
  const OutcomeDistribution freq = empirical(t);
  return sample_counts(freq, t.total, t.setting, rng);
}

}  // namespace

double WitnessOperator::expectation(const QubitState& psi) const {
  if (psi.n_qubits() != n_qubits) throw std::invalid_argument("witness dimension mismatch");
  const std::vector<Complex> wv = dense.apply(psi.amplitudes());
  Complex acc{0, 0};
  for (std::size_t i = 0; i < wv.size(); ++i) acc += std::conj(psi.amplitude(i)) * wv[i];
  return acc.real();
}

double WitnessOperator::expectation(const DensityOperator& rho) const {
  if (rho.n_qubits() != n_qubits) throw std::invalid_argument("witness dimension mismatch");
  Complex acc{0, 0};
  for (int r = 0; r < dense.rows(); ++r) {
    for (int c = 0; c < dense.cols(); ++c) acc += dense(r, c) * rho.matrix()(c, r);
  }
  return acc.real();
}

WitnessOperator witness_max_overlap(const QubitState& target, double overlap_bound) {
  if (overlap_bound <= 0.0 || overlap_bound >= 1.0) {
    throw std::invalid_argument("overlap bound must lie strictly between 0 and 1");
  }
  const int dim = static_cast<int>(target.dim());
  Matrix dense = Matrix::identity(dim);
  dense *= Complex{overlap_bound, 0};
  dense -= Matrix::outer(target.amplitudes(), target.amplitudes());

  WitnessOperator w;
  w.label = WitnessKind::MaxOverlap;
  w.n_qubits = target.n_qubits();
  w.form = pauli_decompose(dense);
  w.dense = std::move(dense);
  w.detection_scale = 1.0;
  return w;
}

WitnessOperator reduce_witness(const WitnessOperator& w) {
  if (w.label != WitnessKind::MaxOverlap) {
    throw std::invalid_argument("reduction starts from a max-overlap witness");
  }
  const int n = w.n_qubits;
  const int dim = 1 << n;

  // Non-mixed, non-identity words keep their witness coefficients.
  PauliSum kept(n);
  for (const auto& term : w.form.terms()) {
    if (term.is_identity() || !term.is_non_mixed()) continue;
    kept.add(term);
  }
  const Matrix kept_dense = kept.to_matrix();

  // P = bound*1 - W_max is the target projector; Q = -kept part.
  double bound = 0.0;
  for (const auto& term : w.form.terms()) {
    if (term.is_identity()) bound = term.coeff + 1.0 / dim;
  }
  Matrix projector = Matrix::identity(dim);
  projector *= Complex{bound, 0};
  projector -= w.dense;
  Matrix q = kept_dense;
  q *= Complex{-1, 0};

  // c(mu) = bound*mu + lambda_max(Q - mu P): convex in mu; golden-section
  // search pins the minimum well below the 1e-9 acceptance tolerances.
  const auto c_of = [&](double mu) {
    Matrix m = q;
    Matrix scaled_p = projector;
    scaled_p *= Complex{mu, 0};
    m -= scaled_p;
    return bound * mu + max_eigenvalue(m);
  };
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0, hi = 4.0;
  double m1 = hi - golden * (hi - lo);
  double m2 = lo + golden * (hi - lo);
  double f1 = c_of(m1);
  double f2 = c_of(m2);
  while (hi - lo > 1e-11) {
    if (f1 <= f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - golden * (hi - lo);
      f1 = c_of(m1);
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + golden * (hi - lo);
      f2 = c_of(m2);
    }
  }
  const double mu_star = 0.5 * (lo + hi);
  const double c = c_of(mu_star);

  WitnessOperator reduced;
  reduced.label = WitnessKind::Reduced;
  reduced.n_qubits = n;
  reduced.form = PauliSum(n);
  reduced.form.add(PauliString{std::vector<Pauli>(n, Pauli::I), c});
  for (const auto& term : kept.terms()) reduced.form.add(term);
  reduced.dense = reduced.form.to_matrix();
  reduced.detection_scale = mu_star;
  return reduced;
}

double noise_tolerance(const WitnessOperator& w, const QubitState& target) {
  const double e = w.expectation(target);
  if (e >= 0.0) throw std::invalid_argument("not a witness for this target");
  const double t = w.dense.trace().real() / static_cast<double>(w.dense.rows());
  // (1-p) e + p t = 0
  return e / (e - t);
}

double witness_expectation_from_distributions(const WitnessOperator& reduced,
                                              const OutcomeDistribution& x,
                                              const OutcomeDistribution& y,
                                              const OutcomeDistribution& z) {
  if (reduced.label != WitnessKind::Reduced) {
    throw std::invalid_argument("three-setting estimation needs the reduced witness");
  }
  double total = 0.0;
  for (const auto& term : reduced.form.terms()) {
    if (term.is_identity()) {
      total += term.coeff;
      continue;
    }
    const OutcomeDistribution* d = nullptr;
    switch (word_type(term)) {
      case Pauli::X: d = &x; break;
      case Pauli::Y: d = &y; break;
      case Pauli::Z: d = &z; break;
      case Pauli::I: break;
    }
    total += term.coeff * parity_estimate(*d, support_mask(term));
  }
  return total;
}

WitnessReport witness_expectation_from_counts(const WitnessOperator& reduced,
                                              const CountsTable& x_counts,
                                              const CountsTable& y_counts,
                                              const CountsTable& z_counts,
                                              const BootstrapConfig& config) {
  require_uniform_setting(x_counts, QubitBasis::Kind::X, "x");
  require_uniform_setting(y_counts, QubitBasis::Kind::Y, "y");
  require_uniform_setting(z_counts, QubitBasis::Kind::Z, "z");
  const std::size_t dim = std::size_t{1} << reduced.n_qubits;
  for (const CountsTable* t : {&x_counts, &y_counts, &z_counts}) {
    if (t->counts.size() != dim) throw std::invalid_argument("counts table size mismatch");
  }

  WitnessReport report;
  report.expectation = witness_expectation_from_distributions(
      reduced, empirical(x_counts), empirical(y_counts), empirical(z_counts));
  report.resamples = config.resamples;
  report.seed = config.seed;

  if (config.resamples > 1) {
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < config.resamples; ++r) {
      Rng rng(config.seed, static_cast<std::uint64_t>(r) + 1);
      const CountsTable bx = resample(x_counts, rng);
      const CountsTable by = resample(y_counts, rng);
      const CountsTable bz = resample(z_counts, rng);
      const double v = witness_expectation_from_distributions(
          reduced, empirical(bx), empirical(by), empirical(bz));
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / config.resamples;
    const double var = std::max(0.0, (sum2 - config.resamples * mean * mean) /
                                         (config.resamples - 1));
    report.std_error = std::sqrt(var);
  }

  report.verdict = report.expectation + config.significance * report.std_error < 0.0
                       ? WitnessVerdict::EntanglementDetected
                       : WitnessVerdict::Inconclusive;
  return report;
}

std::vector<WitnessTerm> load_witness_terms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open witness term file: " + path);
  std::vector<WitnessTerm> terms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    WitnessTerm term;
    if (!(ls >> term.word)) continue;  // blank line
    if (!(ls >> term.num >> term.den) || term.den == 0) {
      throw std::runtime_error("malformed witness term file at line " +
                               std::to_string(lineno));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

WitnessTermDiff diff_witness_terms(const WitnessOperator& reduced,
                                   const std::vector<WitnessTerm>& reference,
                                   double tol) {
  std::map<std::string, double> derived;
  for (const auto& term : reduced.form.terms()) {
    if (std::abs(term.coeff) > 1e-14) derived[term.word_string()] = term.coeff;
  }

  WitnessTermDiff diff;
  std::map<std::string, double> ref;
  for (const auto& term : reference) {
    ref[term.word] += static_cast<double>(term.num) / static_cast<double>(term.den);
  }
  for (const auto& [word, value] : ref) {
    auto it = derived.find(word);
    if (it == derived.end()) {
      diff.only_in_reference.push_back(word);
    } else if (std::abs(it->second - value) <= tol) {
      ++diff.matches;
    } else {
      diff.mismatches.push_back({word, value, it->second});
    }
  }
  for (const auto& [word, value] : derived) {
    if (!ref.contains(word)) diff.only_in_derived.push_back(word);
  }
  return diff;
}

}  // namespace singlet6
