// The channel negativity and derived quantities: positivity conversion,
// negativity distance and trace distance.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chneg/choi.hpp"
#include "chneg/cmatrix.hpp"

namespace chneg {

/// Eigenvalues below -kEtaClassificationTol * ||C||_1 count as negative;
/// anything closer to zero is eigensolver noise.
inline constexpr double kEtaClassificationTol = 1e-10;

struct NegativityReport {
    std::vector<double> eigenvalues;  // ascending
    double trace = 0.0;
    double trace_norm = 0.0;          // sum |lambda_k|
    double neg_eigenvalue_sum = 0.0;  // sum |lambda_k| over negative eigenvalues
    double eta = 0.0;                 // neg_eigenvalue_sum / trace_norm, in [0, 1/2)

    /// Positivity through the inversion (1 - 2 eta) / (1 - eta).
    double positivity() const { return (1.0 - 2.0 * eta) / (1.0 - eta); }
};

NegativityReport negativity(const ChoiMatrix& c);

/// eta = (1 - rho) / (2 - rho) for rho in [0, 1].
double negativity_from_positivity(double rho);

/// Inverse conversion, rho = (1 - 2 eta) / (1 - eta) for eta in [0, 1/2).
double positivity_from_negativity(double eta);

struct DistanceReport {
    double eta_expected = 0.0;
    double eta_implemented = 0.0;
    double delta = 0.0;  // |eta_expected - eta_implemented|
    std::optional<double> trace_distance;
};

DistanceReport negativity_distance(const ChoiMatrix& expected, const ChoiMatrix& implemented);

/// ||m - n||_1 for equally sized operators.
double trace_distance(const Matrix& m, const Matrix& n);

std::string report_to_json(const NegativityReport& report);
std::string report_to_json(const DistanceReport& report);

} // namespace chneg
