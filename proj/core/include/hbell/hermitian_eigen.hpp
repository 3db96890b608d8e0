#pragma once

#include <vector>

#include "hbell/complex_matrix.hpp"

namespace hbell {

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column j is the eigenvector of values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a private copy of `m`. Stops once the
/// off-diagonal Frobenius norm drops below 1e-12 ||m||_F; gives up after 100
/// sweeps (std::runtime_error). Throws std::invalid_argument when
/// ||m - m^dagger|| exceeds 1e-10.
HermitianEigen hermitian_eigs(const ComplexMatrix& m);

}  // namespace hbell
