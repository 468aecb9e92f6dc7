#pragma once

#include <array>
#include <vector>

#include "singlet6/fock.hpp"
#include "singlet6/qubits.hpp"

namespace singlet6 {

struct PostselectResult {
  QubitState state;
  double probability;
};

// Keeps exactly the kets with one photon in each listed spatial mode (either
// polarization) and none elsewhere; V maps to bit 1. Returns the normalized
// qubit register and the squared norm of the kept component. Throws
// std::domain_error("post-selection impossible") when nothing survives.
PostselectResult postselect_one_per_mode(const FockVector& v,
                                         const std::vector<Spatial>& modes);

struct ProjectionResult {
  QubitState state;
  double probability;
};

// Contracts qubit `position` with <onto| and returns the normalized remainder
// plus the contraction probability. Throws on zero probability.
ProjectionResult project_qubit(const QubitState& s, int position,
                               const std::array<Complex, 2>& onto);

// Single-qubit analyzer eigenstates by letter: H, V, D, A, L, R.
std::array<Complex, 2> polarization_ket(char letter);

// Closed-form five-qubit states for conditioning the six-qubit singlet on one
// detector outcome: mode f in the H/V basis, mode b with the rest read in the
// D/A basis. Throws for any other (mode, outcome) pair.
QubitState conditional_reference(Spatial mode, char outcome);

}  // namespace singlet6
