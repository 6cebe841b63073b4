#include "chneg/choi.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "chneg/qstates.hpp"

namespace chneg {

namespace {

Matrix symmetrized(const Matrix& m) {
    Matrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return out;
}

} // namespace

ChoiMatrix assemble_choi(const CouplingSpec& spec, const AssignmentMap& map) {
    static const TomographyVector tv = canonical_tomography_vector();
    static const MatrixUnitDecomposition dec = decompose_matrix_units(tv);

    const Matrix u = realize_coupling(spec);
    std::array<Matrix, 4> eps;
    for (std::size_t k = 0; k < 4; ++k) eps[k] = apply_channel(u, map, tv.states[k]);

    // eps(E_ij) by linear extension, placed as block (i,j).
    Matrix c(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Matrix block(2);
            for (std::size_t k = 0; k < 4; ++k) block += dec.unit(i, j)[k] * eps[k];
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 2; ++s) c(2 * i + r, 2 * j + s) = block(r, s);
        }

    return validate_choi(c, describe(spec) + "+" + describe(map), kChoiInternalTol);
}

ChoiMatrix validate_choi(const Matrix& c, std::string source, double tol) {
    if (c.dim() != 4)
        throw ValidationError("choi validation: expected a 4x4 matrix, got dim " +
                              std::to_string(c.dim()));
    if (!c.all_finite()) throw ValidationError("choi validation: non-finite entry");
    const double herm = c.hermiticity_residual();
    if (herm > tol) {
        std::ostringstream msg;
        msg << "choi validation: hermiticity violation, residual " << herm;
        throw ValidationError(msg.str());
    }
    const Complex tr = c.trace();
    const double trace_err = std::abs(tr - Complex(2.0));
    if (trace_err > tol) {
        std::ostringstream msg;
        msg << "choi validation: trace violation, |trace - 2| = " << trace_err;
        throw ValidationError(msg.str());
    }
    return ChoiMatrix{symmetrized(c), std::move(source)};
}

ChoiMatrix analytic_choi_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream msg;
        msg << "analytic_choi_alpha: alpha " << alpha << " outside [0, 1]";
        throw ValidationError(msg.str());
    }
    const double x = alpha * std::sqrt(1.0 - alpha * alpha);
    Matrix c(4);
    c(0, 0) = 1.0;
    c(3, 3) = 1.0;
    c(0, 3) = x;
    c(3, 0) = x;
    c(1, 2) = x;
    c(2, 1) = x;
    std::ostringstream source;
    source << "analytic_alpha(" << alpha << ")";
    return ChoiMatrix{c, source.str()};
}

std::string choi_to_json(const ChoiMatrix& c) {
    nlohmann::json doc;
    doc["dim"] = 4;
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& z : c.matrix.entries())
        entries.push_back(nlohmann::json::array({z.real(), z.imag()}));
    doc["entries"] = std::move(entries);
    doc["source"] = c.source;
    return doc.dump(2) + "\n";
}

ChoiMatrix choi_from_json(const std::string& text, double tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("choi parse: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("choi parse: document is not an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ValidationError("choi parse: missing integer field 'dim'");
    const auto dim = doc["dim"].get<std::int64_t>();
    if (dim != 4)
        throw ValidationError("choi parse: expected dim 4, got " + std::to_string(dim));
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw ValidationError("choi parse: missing array field 'entries'");
    const auto& entries = doc["entries"];
    if (entries.size() != 16)
        throw ValidationError("choi parse: expected 16 entries, got " +
                              std::to_string(entries.size()));

    Matrix m(4);
    for (std::size_t k = 0; k < 16; ++k) {
        const auto& pair = entries[k];
        // NaN round-trips through JSON as null; report it as non-finite.
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ValidationError("choi parse: non-finite entry at index " + std::to_string(k));
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ValidationError("choi parse: non-finite entry at index " + std::to_string(k));
        m(k / 4, k % 4) = Complex(re, im);
    }

    std::string source = "external";
    if (doc.contains("source") && doc["source"].is_string())
        source = doc["source"].get<std::string>();
    return validate_choi(m, std::move(source), tol);
}

} // namespace chneg
