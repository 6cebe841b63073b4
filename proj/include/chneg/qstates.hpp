// Canonical single-qubit tomography states and the decomposition of the
// matrix units E_ij in the tomography basis.
#pragma once

#include <array>
#include <cstddef>

#include "chneg/cmatrix.hpp"

namespace chneg {

/// Ordered input states for single-qubit process tomography:
/// |0><0|, |+><+|, |+i><+i|, |1><1|.
struct TomographyVector {
    std::array<Matrix, 4> states;
};

TomographyVector canonical_tomography_vector();

/// 2x2 matrix unit E_ij (1 at position (i,j), 0 elsewhere).
Matrix matrix_unit(std::size_t i, std::size_t j);

/// Expansion coefficients of each matrix unit over a tomography vector:
/// E_ij = sum_k unit(i,j)[k] * tau_k.
struct MatrixUnitDecomposition {
    std::array<std::array<Complex, 4>, 4> coefficients;  // indexed [2*i + j][k]

    const std::array<Complex, 4>& unit(std::size_t i, std::size_t j) const {
        return coefficients[2 * i + j];
    }
};

/// Solves the 4x4 linear system with the vectorized states as columns.
/// Throws ValidationError if the states are not linearly independent.
MatrixUnitDecomposition decompose_matrix_units(const TomographyVector& tv);

} // namespace chneg
