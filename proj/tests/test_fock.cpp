#include <doctest.h>

#include <cmath>
#include <numbers>

#include "singlet6/fock.hpp"
#include "singlet6/rng.hpp"
#include "support/oracles.hpp"

using namespace singlet6;

namespace {

const PolMode a0H{Spatial::A0, Pol::H};
const PolMode a0V{Spatial::A0, Pol::V};
const PolMode b0H{Spatial::B0, Pol::H};
const PolMode b0V{Spatial::B0, Pol::V};

CreationPolynomial emission_pair(double phi) {
  return CreationPolynomial::monomial({1, 0}, {{a0H, 1}, {b0V, 1}}) +
         CreationPolynomial::monomial(std::polar(1.0, phi), {{a0V, 1}, {b0H, 1}});
}

double max_term_diff(const CreationPolynomial& p, const CreationPolynomial& q) {
  double diff = 0.0;
  for (const auto& [powers, coeff] : p.monomials()) {
    auto it = q.monomials().find(powers);
    const Complex other = it == q.monomials().end() ? Complex{0, 0} : it->second;
    diff = std::max(diff, std::abs(coeff - other));
  }
  for (const auto& [powers, coeff] : q.monomials()) {
    if (!p.monomials().contains(powers)) diff = std::max(diff, std::abs(coeff));
  }
  return diff;
}

double max_ket_diff(const FockVector& u, const FockVector& v) {
  double diff = 0.0;
  for (const auto& [ket, amp] : u.terms()) diff = std::max(diff, std::abs(amp - v.amplitude(ket)));
  for (const auto& [ket, amp] : v.terms()) diff = std::max(diff, std::abs(amp - u.amplitude(ket)));
  return diff;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("poly_power is the identity for n = 1") {
  const CreationPolynomial p = emission_pair(0.3);
  CHECK(max_term_diff(poly_power(p, 1), p) == doctest::Approx(0.0));
  CHECK_THROWS_AS(poly_power(p, 0), std::invalid_argument);
}

TEST_CASE("cubing the emission pair gives the four known monomials") {
  const double phi = 0.7;
  const CreationPolynomial cubed = poly_power(emission_pair(phi), 3);
  REQUIRE(cubed.size() == 4);

  const auto coeff_of = [&](int k) {  // k = photons moved to the flipped term
    CreationPolynomial::Powers powers;
    if (3 - k > 0) {
      powers.push_back({a0H, 3 - k});
      powers.push_back({b0V, 3 - k});
    }
    if (k > 0) {
      powers.push_back({a0V, k});
      powers.push_back({b0H, k});
    }
    const CreationPolynomial probe = CreationPolynomial::monomial({1, 0}, powers);
    return cubed.monomials().at(probe.monomials().begin()->first);
  };

  const double binom[4] = {1, 3, 3, 1};
  for (int k = 0; k <= 3; ++k) {
    CHECK(std::abs(coeff_of(k) - binom[k] * std::polar(1.0, k * phi)) < 1e-12);
  }
}

TEST_CASE("binomial square with a shared mode") {
  const CreationPolynomial p = CreationPolynomial::creation(a0H) +
                               CreationPolynomial::creation(a0V);
  const CreationPolynomial sq = poly_power(p, 2);
  REQUIRE(sq.size() == 3);
  CHECK(std::abs(sq.monomials().at({{a0H, 2}}) - Complex{1, 0}) < 1e-14);
  CHECK(std::abs(sq.monomials().at({{a0H, 1}, {a0V, 1}}) - Complex{2, 0}) < 1e-14);
  CHECK(std::abs(sq.monomials().at({{a0V, 2}}) - Complex{1, 0}) < 1e-14);
}

TEST_CASE("apply_to_vacuum carries the sqrt(n!) factors") {
  const FockVector v = apply_to_vacuum(CreationPolynomial::monomial({1, 0}, {{a0H, 3}}));
  REQUIRE(v.size() == 1);
  CHECK(std::abs(v.amplitude(FockKet({{a0H, 3}})) - std::sqrt(6.0)) < 1e-12);

  CHECK(apply_to_vacuum(CreationPolynomial{}).empty());
}

TEST_CASE("third-order emission kets all have magnitude 6 with alternating signs") {
  const FockVector v = apply_to_vacuum(poly_power(emission_pair(std::numbers::pi), 3));
  REQUIRE(v.size() == 4);
  const double expected_sign[4] = {1, -1, 1, -1};
  for (int k = 0; k <= 3; ++k) {
    FockKet::Occupations occ;
    if (3 - k > 0) occ.insert(occ.end(), {{a0H, 3 - k}, {b0V, 3 - k}});
    if (k > 0) occ.insert(occ.end(), {{a0V, k}, {b0H, k}});
    const Complex amp = v.amplitude(FockKet(occ));
    CHECK(std::abs(amp - Complex{6.0 * expected_sign[k], 0}) < 1e-12);
  }
  CHECK(v.norm() == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("inner products on number kets") {
  FockVector three_h;
  three_h.add(FockKet({{a0H, 3}}), {1, 0});
  FockVector three_v;
  three_v.add(FockKet({{a0V, 3}}), {1, 0});
  CHECK(std::abs(inner_product(three_h, three_h) - Complex{1, 0}) < 1e-14);
  CHECK(std::abs(inner_product(three_h, three_v)) < 1e-14);

  // Opposite-phase emissions are orthogonal: signs alternate, 1 - 1 + 1 - 1.
  const FockVector pi_state = apply_to_vacuum(poly_power(emission_pair(std::numbers::pi), 3));
  const FockVector zero_state = apply_to_vacuum(poly_power(emission_pair(0.0), 3));
  CHECK(std::abs(inner_product(pi_state, zero_state)) / (pi_state.norm() * zero_state.norm()) <
        1e-12);
}

TEST_CASE("normalize returns the unit vector and the original norm") {
  FockVector v;
  v.add(FockKet({{a0H, 3}}), {2, 0});
  const auto [unit, norm] = v.normalized();
  CHECK(norm == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(unit.amplitude(FockKet({{a0H, 3}})) - Complex{1, 0}) < 1e-14);

  const FockVector emission = apply_to_vacuum(poly_power(emission_pair(std::numbers::pi), 3));
  const auto [unit_emission, emission_norm] = emission.normalized();
  CHECK(emission_norm == doctest::Approx(12.0).epsilon(1e-12));
  for (const auto& [ket, amp] : unit_emission.terms()) {
    CHECK(std::abs(std::abs(amp) - 0.5) < 1e-12);
  }

  CHECK_THROWS_WITH_AS(FockVector{}.normalized(), "cannot normalize null state",
                       std::domain_error);
}

TEST_CASE("poly_power matches the multinomial theorem") {
  Rng rng(42);
  const std::vector<PolMode> modes = {a0H, a0V, b0H, b0V};
  for (int trial = 0; trial < 12; ++trial) {
    CreationPolynomial p;
    const int n_monos = 2 + static_cast<int>(rng.uniform() * 2);
    for (int m = 0; m < n_monos; ++m) {
      CreationPolynomial::Powers powers;
      for (const auto& mode : modes) {
        const int power = static_cast<int>(rng.uniform() * 2.2);
        if (power > 0) powers.push_back({mode, power});
      }
      if (powers.empty()) powers.push_back({modes[m % modes.size()], 1});
      p += CreationPolynomial::monomial({rng.gaussian(), rng.gaussian()}, powers);
    }
    for (int n = 1; n <= 4; ++n) {
      CHECK(max_term_diff(poly_power(p, n), oracle::poly_power_multinomial(p, n)) < 1e-10);
    }
  }
}

TEST_CASE("apply_to_vacuum agrees with sequential creation") {
  for (int order = 1; order <= 4; ++order) {
    const CreationPolynomial p = poly_power(emission_pair(1.1), order);
    CHECK(max_ket_diff(apply_to_vacuum(p), oracle::apply_to_vacuum_sequential(p)) < 1e-10);
  }

  // Expanding p^n and hitting the vacuum equals applying p as an operator n
  // times, one creation operator at a time.
  const CreationPolynomial base = emission_pair(0.4);
  FockVector iterated;
  iterated.add(FockKet{}, {1, 0});
  for (int order = 1; order <= 4; ++order) {
    iterated = oracle::apply_polynomial_sequential(base, iterated);
    CHECK(max_ket_diff(apply_to_vacuum(poly_power(base, order)), iterated) < 1e-10);
  }

  Rng rng(7);
  const std::vector<PolMode> modes = {a0H, a0V, b0H, b0V, {Spatial::A, Pol::H}};
  for (int trial = 0; trial < 10; ++trial) {
    CreationPolynomial p;
    for (int m = 0; m < 3; ++m) {
      CreationPolynomial::Powers powers;
      for (const auto& mode : modes) {
        const int power = static_cast<int>(rng.uniform() * 3);
        if (power > 0) powers.push_back({mode, power});
      }
      if (powers.empty()) powers.push_back({modes[0], 2});
      p += CreationPolynomial::monomial({rng.gaussian(), rng.gaussian()}, powers);
    }
    CHECK(max_ket_diff(apply_to_vacuum(p), oracle::apply_to_vacuum_sequential(p)) < 1e-9);
  }
}

TEST_CASE("inner_product is a Hermitian positive form") {
  Rng rng(11);
  const std::vector<PolMode> modes = {a0H, a0V, b0H, b0V};
  for (int trial = 0; trial < 100; ++trial) {
    const FockVector u = oracle::random_fock_vector(rng, modes, 5, 3);
    const FockVector v = oracle::random_fock_vector(rng, modes, 5, 3);
    const Complex uv = inner_product(u, v);
    const Complex vu = inner_product(v, u);
    CHECK(std::abs(uv - std::conj(vu)) < 1e-12);
    const Complex uu = inner_product(u, u);
    CHECK(uu.real() >= 0.0);
    CHECK(std::abs(uu.imag()) < 1e-12);

    // Conjugate linearity in the first argument.
    const Complex alpha{0.3, -1.2};
    FockVector scaled = u;
    scaled *= alpha;
    CHECK(std::abs(inner_product(scaled, v) - std::conj(alpha) * uv) < 1e-10);
  }
}

TEST_CASE("kets reject negative occupations and merge duplicates") {
  CHECK_THROWS_AS(FockKet({{a0H, -1}}), std::invalid_argument);
  const FockKet merged({{a0H, 1}, {a0H, 2}, {a0V, 0}});
  CHECK(merged.occupation(a0H) == 3);
  CHECK(merged.occupations().size() == 1);
  CHECK(merged.total_photons() == 3);
}

}  // TEST_SUITE
