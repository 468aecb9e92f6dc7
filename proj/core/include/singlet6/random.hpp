#pragma once

#include "singlet6/linalg.hpp"
#include "singlet6/rng.hpp"

#include <vector>

namespace singlet6 {

// Haar-random SU(2): a unit quaternion (x0, x1, x2, x3) from four normal
// variates mapped to [[x0 + i x1, x2 + i x3], [-x2 + i x3, x0 - i x1]].
Mat2 haar_su2(Rng& rng);

std::vector<Complex> random_unit_vector(int dim, Rng& rng);

// Ginibre-induced random density operator G G^dag / tr(G G^dag).
Matrix ginibre_density(int dim, Rng& rng);

Matrix random_hermitian(int dim, Rng& rng);

}  // namespace singlet6
