#include "singlet6/pdc.hpp"

#include <cmath>
#include <stdexcept>

namespace singlet6 {

CreationPolynomial pdc_emission(const PdcSpec& spec) {
  if (spec.order < 1 || spec.order > 3) {
    throw std::invalid_argument("pdc order must be 1, 2 or 3");
  }
  if (!std::isfinite(spec.phi)) throw std::invalid_argument("pdc phase must be finite");
  const CreationPolynomial pair =
      CreationPolynomial::monomial({1, 0}, {{{spec.arm_a, Pol::H}, 1}, {{spec.arm_b, Pol::V}, 1}}) +
      CreationPolynomial::monomial(std::polar(1.0, spec.phi),
                                   {{{spec.arm_a, Pol::V}, 1}, {{spec.arm_b, Pol::H}, 1}});
  return poly_power(pair, spec.order);
}

FockVector pdc_state(const PdcSpec& spec) {
  return apply_to_vacuum(pdc_emission(spec)).normalized().first;
}

}  // namespace singlet6
