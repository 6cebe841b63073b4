#include "chneg/negativity.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace chneg {

NegativityReport negativity(const ChoiMatrix& c) {
    const EigenDecomposition eig = hermitian_eig(c.matrix);

    NegativityReport report;
    report.eigenvalues = eig.eigenvalues;
    report.trace = c.matrix.trace().real();
    double norm = 0.0;
    for (double lam : eig.eigenvalues) norm += std::abs(lam);
    report.trace_norm = norm;

    const double threshold = -kEtaClassificationTol * norm;
    double neg = 0.0;
    for (double lam : eig.eigenvalues)
        if (lam < threshold) neg += -lam;
    report.neg_eigenvalue_sum = neg;
    report.eta = neg / norm;
    return report;
}

double negativity_from_positivity(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        std::ostringstream msg;
        msg << "negativity_from_positivity: positivity " << rho << " outside [0, 1]";
        throw ValidationError(msg.str());
    }
    // Extended precision keeps the quotient correctly rounded: both
    // differences are exact there, so only the division rounds.
    const long double r = rho;
    return static_cast<double>((1.0L - r) / (2.0L - r));
}

double positivity_from_negativity(double eta) {
    if (!(eta >= 0.0 && eta < 0.5)) {
        std::ostringstream msg;
        msg << "positivity_from_negativity: negativity " << eta << " outside [0, 1/2)";
        throw ValidationError(msg.str());
    }
    const long double e = eta;
    return static_cast<double>((1.0L - 2.0L * e) / (1.0L - e));
}

DistanceReport negativity_distance(const ChoiMatrix& expected, const ChoiMatrix& implemented) {
    DistanceReport report;
    report.eta_expected = negativity(expected).eta;
    report.eta_implemented = negativity(implemented).eta;
    report.delta = std::abs(report.eta_expected - report.eta_implemented);
    return report;
}

double trace_distance(const Matrix& m, const Matrix& n) {
    if (m.dim() != n.dim())
        throw ValidationError("trace_distance: dimension mismatch (" + std::to_string(m.dim()) +
                              " vs " + std::to_string(n.dim()) + ")");
    return trace_norm(m - n);
}

std::string report_to_json(const NegativityReport& report) {
    nlohmann::json doc;
    doc["eigenvalues"] = report.eigenvalues;
    doc["trace"] = report.trace;
    doc["trace_norm"] = report.trace_norm;
    doc["eta"] = report.eta;
    doc["positivity"] = report.positivity();
    return doc.dump(2) + "\n";
}

std::string report_to_json(const DistanceReport& report) {
    nlohmann::json doc;
    doc["eta_expected"] = report.eta_expected;
    doc["eta_implemented"] = report.eta_implemented;
    doc["delta"] = report.delta;
    if (report.trace_distance) doc["trace_distance"] = *report.trace_distance;
    return doc.dump(2) + "\n";
}

} // namespace chneg
