#pragma once

#include <random>
#include <vector>

#include "sbrep/matrix.hpp"

namespace sbrep {

using Rng = std::mt19937_64;

// Small Gaussian rationals {0, +-1, +-2, +-1/2, +-i, 1+-i}. Chosen to hit the
// catalog's boundary conditions (b*c = 1, x + y/b = 1, l2 = -l3) deliberately.
const std::vector<GaussianRational>& sample_pool();

// pool without zero, for parameters that must be invertible
const std::vector<GaussianRational>& sample_pool_nonzero();

GaussianRational random_pool_value(Rng& rng, bool nonzero = false);

// entries drawn from the pool until the determinant is nonzero
SquareMatrix<GaussianRational> random_invertible(Rng& rng, int m);

}  // namespace sbrep
