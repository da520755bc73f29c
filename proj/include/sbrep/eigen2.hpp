#pragma once

#include <array>
#include <vector>

#include "sbrep/matrix.hpp"
#include "sbrep/quadext.hpp"

namespace sbrep {

struct EigenPair {
    QuadExt value;
    std::array<QuadExt, 2> vec;
};

struct Eigen2Result {
    bool all_vectors = false;  // scalar matrix: every direction is an eigenvector
    std::vector<EigenPair> pairs;
};

// Exact eigen decomposition of a 2x2 matrix over Q(i), with eigenvalues and
// eigenvectors in the quadratic extension by the discriminant. Returns one or
// two distinct eigen-directions, ordered (tr - sqrt(disc))/2 first.
Eigen2Result eigen_2x2(const SquareMatrix<GaussianRational>& m);

// v and w span the same line (2-dimensional cross product vanishes).
bool same_direction(const std::array<QuadExt, 2>& v, const std::array<QuadExt, 2>& w);

}  // namespace sbrep
