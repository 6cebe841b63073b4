#include "chneg/qstates.hpp"

#include <cmath>
#include <sstream>

namespace chneg {

TomographyVector canonical_tomography_vector() {
    TomographyVector tv;
    tv.states[0] = Matrix(2, {1.0, 0.0, 0.0, 0.0});                                      // |0><0|
    tv.states[1] = Matrix(2, {0.5, 0.5, 0.5, 0.5});                                      // |+><+|
    tv.states[2] = Matrix(2, {0.5, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.5});         // |+i><+i|
    tv.states[3] = Matrix(2, {0.0, 0.0, 0.0, 1.0});                                      // |1><1|
    return tv;
}

Matrix matrix_unit(std::size_t i, std::size_t j) {
    Matrix e(2);
    e(i, j) = 1.0;
    return e;
}

namespace {

// Gaussian elimination with partial pivoting on the 4x4 system; the columns
// of `a` are the row-major vectorized tomography states.
std::array<Complex, 4> solve4(std::array<std::array<Complex, 4>, 4> a, std::array<Complex, 4> b) {
    constexpr std::size_t n = 4;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12)
            throw ValidationError(
                "decompose_matrix_units: tomography states are not linearly independent");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a[r][col] / a[col][col];
            if (f == Complex{}) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<Complex, 4> x{};
    for (std::size_t row = n; row-- > 0;) {
        Complex sum = b[row];
        for (std::size_t c = row + 1; c < n; ++c) sum -= a[row][c] * x[c];
        x[row] = sum / a[row][row];
    }
    return x;
}

} // namespace

MatrixUnitDecomposition decompose_matrix_units(const TomographyVector& tv) {
    std::array<std::array<Complex, 4>, 4> system{};
    for (std::size_t k = 0; k < 4; ++k) {
        const Matrix& tau = tv.states[k];
        if (tau.dim() != 2)
            throw ValidationError("decompose_matrix_units: tomography states must be 2x2");
        for (std::size_t r = 0; r < 4; ++r) system[r][k] = tau(r / 2, r % 2);
    }

    MatrixUnitDecomposition dec;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            std::array<Complex, 4> rhs{};
            rhs[2 * i + j] = 1.0;
            dec.coefficients[2 * i + j] = solve4(system, rhs);
        }
    }

    // Reconstruction check; cannot fail for the canonical vector.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Matrix rebuilt(2);
            for (std::size_t k = 0; k < 4; ++k)
                rebuilt += dec.unit(i, j)[k] * tv.states[k];
            const double res = max_abs_diff(rebuilt, matrix_unit(i, j));
            if (res > 1e-12) {
                std::ostringstream msg;
                msg << "decompose_matrix_units: reconstruction residual " << res << " for unit ("
                    << i << "," << j << ")";
                throw ValidationError(msg.str());
            }
        }
    return dec;
}

} // namespace chneg
