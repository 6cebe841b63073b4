// Simulated process tomography: evaluate a channel on the tomography vector,
// extend linearly to the matrix units and assemble the 4x4 Choi matrix.
#pragma once

#include <string>

#include "chneg/channelkit.hpp"
#include "chneg/cmatrix.hpp"

namespace chneg {

inline constexpr double kChoiInternalTol = 1e-10;  // pipeline-assembled matrices
inline constexpr double kChoiExternalTol = 1e-8;   // matrices loaded from files

/// Validated 4x4 Choi representation of a single-qubit channel:
/// Hermitian (symmetrized on construction) with trace 2.
struct ChoiMatrix {
    Matrix matrix;
    std::string source;  // producing (coupling, sharp) pair, or "external"
};

/// Runs the channel over the canonical tomography vector, extends linearly
/// to the matrix units and places eps(E_ij) as block (i,j).
ChoiMatrix assemble_choi(const CouplingSpec& spec, const AssignmentMap& map);

/// Checks Hermiticity and trace 2 within tol; returns the symmetrized wrapper.
/// Violations raise ValidationError naming the failed check and residual.
ChoiMatrix validate_choi(const Matrix& c, std::string source = "external",
                         double tol = kChoiExternalTol);

/// Closed-form Choi of the CZ + alpha-sharp channel:
/// corners 1, anti-diagonal x = alpha*sqrt(1-alpha^2).
ChoiMatrix analytic_choi_alpha(double alpha);

/// JSON document {"dim": 4, "entries": [[re, im], ...] row-major, "source": s}.
/// Round-trips preserve entry values to full double precision.
std::string choi_to_json(const ChoiMatrix& c);
ChoiMatrix choi_from_json(const std::string& text, double tol = kChoiExternalTol);

} // namespace chneg
