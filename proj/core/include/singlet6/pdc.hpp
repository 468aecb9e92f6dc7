#pragma once

#include <numbers>

#include "singlet6/fock.hpp"

namespace singlet6 {

// n-th order type-II emission into two spatial arms. The birefringence phase
// phi defaults to pi, the value the compensation optics realize.
struct PdcSpec {
  int order = 3;
  double phi = std::numbers::pi;
  Spatial arm_a = Spatial::A0;
  Spatial arm_b = Spatial::B0;
};

// (aH^dag bV^dag + e^{i phi} aV^dag bH^dag)^order
CreationPolynomial pdc_emission(const PdcSpec& spec);

// Normalized number-state expansion of the emission; has order+1 kets with
// equal magnitudes 1/sqrt(order+1). Throws on orders outside 1..3.
FockVector pdc_state(const PdcSpec& spec);

}  // namespace singlet6
