#include "singlet6/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace singlet6 {

namespace {

constexpr std::string_view kSpatialNames[kSpatialCount] = {
    "a0", "b0", "a", "b", "c", "d", "e", "f", "x", "y"};

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

std::string_view to_string(Spatial s) {
  return kSpatialNames[static_cast<int>(s)];
}

char to_char(Pol p) { return p == Pol::H ? 'H' : 'V'; }

std::optional<Spatial> parse_spatial(std::string_view s) {
  for (int i = 0; i < kSpatialCount; ++i) {
    if (s == kSpatialNames[i]) return static_cast<Spatial>(i);
  }
  return std::nullopt;
}

std::string PolMode::to_string() const {
  std::string out(1, to_char(pol));
  out += '_';
  out += std::string(singlet6::to_string(spatial));
  return out;
}

FockKet::FockKet(Occupations occupations) : occ_(std::move(occupations)) {
  std::sort(occ_.begin(), occ_.end());
  Occupations merged;
  for (const auto& [mode, count] : occ_) {
    if (count < 0) throw std::invalid_argument("negative photon occupation");
    if (count == 0) continue;
    if (!merged.empty() && merged.back().first == mode) {
      merged.back().second += count;
    } else {
      merged.emplace_back(mode, count);
    }
  }
  occ_ = std::move(merged);
}

int FockKet::occupation(PolMode m) const {
  for (const auto& [mode, count] : occ_) {
    if (mode == m) return count;
  }
  return 0;
}

int FockKet::total_photons() const {
  int total = 0;
  for (const auto& [mode, count] : occ_) total += count;
  return total;
}

std::string FockKet::to_string() const {
  if (occ_.empty()) return "|vac>";
  std::ostringstream out;
  out << '|';
  bool first = true;
  for (const auto& [mode, count] : occ_) {
    if (!first) out << ' ';
    first = false;
    out << count << mode.to_string();
  }
  out << '>';
  return out.str();
}

void FockVector::add(const FockKet& ket, Complex amplitude) {
  auto [it, inserted] = terms_.try_emplace(ket, amplitude);
  if (!inserted) it->second += amplitude;
}

Complex FockVector::amplitude(const FockKet& ket) const {
  auto it = terms_.find(ket);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double FockVector::norm2() const {
  double total = 0.0;
  for (const auto& [ket, amp] : terms_) total += std::norm(amp);
  return total;
}

double FockVector::norm() const { return std::sqrt(norm2()); }

std::pair<FockVector, double> FockVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize null state");
  FockVector out = *this;
  out *= Complex{1.0 / n, 0.0};
  out.prune();
  return {std::move(out), n};
}

FockVector& FockVector::prune(double relative_threshold) {
  double max_mag = 0.0;
  for (const auto& [ket, amp] : terms_) max_mag = std::max(max_mag, std::abs(amp));
  const double cut = relative_threshold * max_mag;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= cut) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [ket, amp] : other.terms_) add(ket, amp);
  prune();
  return *this;
}

FockVector& FockVector::operator*=(Complex scale) {
  for (auto& [ket, amp] : terms_) amp *= scale;
  return *this;
}

std::string FockVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [ket, amp] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << amp.real() << (amp.imag() < 0 ? "" : "+") << amp.imag()
        << "i)" << ket.to_string();
  }
  if (first) out << "0";
  return out.str();
}

Complex inner_product(const FockVector& u, const FockVector& v) {
  // Iterate over the sparser operand.
  const FockVector& small = u.size() <= v.size() ? u : v;
  const FockVector& large = u.size() <= v.size() ? v : u;
  Complex result{0.0, 0.0};
  for (const auto& [ket, amp] : small.terms()) {
    auto it = large.terms().find(ket);
    if (it == large.terms().end()) continue;
    const Complex& ua = (&small == &u) ? amp : it->second;
    const Complex& va = (&small == &u) ? it->second : amp;
    result += std::conj(ua) * va;
  }
  return result;
}

CreationPolynomial CreationPolynomial::constant(Complex c) {
  CreationPolynomial p;
  if (c != Complex{0.0, 0.0}) p.terms_.emplace(Powers{}, c);
  return p;
}

CreationPolynomial CreationPolynomial::creation(PolMode m) {
  return monomial({1.0, 0.0}, {{m, 1}});
}

CreationPolynomial CreationPolynomial::monomial(Complex coeff, Powers powers) {
  std::sort(powers.begin(), powers.end());
  Powers merged;
  for (const auto& [mode, power] : powers) {
    if (power <= 0) throw std::invalid_argument("monomial power must be positive");
    if (!merged.empty() && merged.back().first == mode) {
      merged.back().second += power;
    } else {
      merged.emplace_back(mode, power);
    }
  }
  CreationPolynomial p;
  if (coeff != Complex{0.0, 0.0}) p.terms_.emplace(std::move(merged), coeff);
  return p;
}

CreationPolynomial& CreationPolynomial::operator+=(const CreationPolynomial& other) {
  for (const auto& [powers, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(powers, coeff);
    if (!inserted) it->second += coeff;
  }
  prune();
  return *this;
}

CreationPolynomial& CreationPolynomial::operator*=(Complex scale) {
  if (scale == Complex{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [powers, coeff] : terms_) coeff *= scale;
  return *this;
}

CreationPolynomial& CreationPolynomial::prune(double relative_threshold) {
  double max_mag = 0.0;
  for (const auto& [powers, coeff] : terms_) max_mag = std::max(max_mag, std::abs(coeff));
  const double cut = relative_threshold * max_mag;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= cut) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

CreationPolynomial operator*(const CreationPolynomial& p,
                             const CreationPolynomial& q) {
  CreationPolynomial out;
  for (const auto& [pw, pc] : p.monomials()) {
    for (const auto& [qw, qc] : q.monomials()) {
      // Merge exponent lists; both are sorted.
      CreationPolynomial::Powers merged;
      merged.reserve(pw.size() + qw.size());
      auto a = pw.begin();
      auto b = qw.begin();
      while (a != pw.end() && b != qw.end()) {
        if (a->first < b->first) {
          merged.push_back(*a++);
        } else if (b->first < a->first) {
          merged.push_back(*b++);
        } else {
          merged.emplace_back(a->first, a->second + b->second);
          ++a;
          ++b;
        }
      }
      merged.insert(merged.end(), a, pw.end());
      merged.insert(merged.end(), b, qw.end());
      out += CreationPolynomial::monomial(pc * qc, std::move(merged));
    }
  }
  out.prune();
  return out;
}

CreationPolynomial operator+(CreationPolynomial p, const CreationPolynomial& q) {
  p += q;
  return p;
}

CreationPolynomial poly_power(const CreationPolynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("poly_power requires n >= 1");
  CreationPolynomial out = p;
  for (int k = 1; k < n; ++k) out = out * p;
  return out;
}

FockVector apply_to_vacuum(const CreationPolynomial& p) {
  FockVector out;
  for (const auto& [powers, coeff] : p.monomials()) {
    double scale = 1.0;
    for (const auto& [mode, power] : powers) scale *= std::sqrt(factorial(power));
    out.add(FockKet(powers), coeff * scale);
  }
  out.prune();
  return out;
}

}  // namespace singlet6
