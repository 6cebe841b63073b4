#include <doctest.h>

#include <cmath>

#include "chneg/qstates.hpp"
#include "test_support.hpp"

using namespace chneg;
using namespace testsup;

TEST_CASE("canonical tomography states") {
    const TomographyVector tv = canonical_tomography_vector();

    CHECK(max_abs_diff(tv.states[0], Matrix(2, {1.0, 0.0, 0.0, 0.0})) == 0.0);
    CHECK(max_abs_diff(tv.states[1], Matrix(2, {0.5, 0.5, 0.5, 0.5})) == 0.0);
    CHECK(max_abs_diff(tv.states[2], Matrix(2, {0.5, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.5})) ==
          0.0);
    CHECK(max_abs_diff(tv.states[3], Matrix(2, {0.0, 0.0, 0.0, 1.0})) == 0.0);

    for (const Matrix& tau : tv.states) {
        CHECK(tau.hermiticity_residual() < 1e-12);
        CHECK(std::abs(tau.trace() - Complex(1.0)) < 1e-12);
        CHECK(max_abs_diff(tau * tau, tau) < 1e-12);  // pure
        const auto eig = hermitian_eig(tau);
        CHECK(eig.eigenvalues.front() > -1e-12);  // PSD
    }
}

TEST_CASE("matrix unit decomposition") {
    const TomographyVector tv = canonical_tomography_vector();
    const MatrixUnitDecomposition dec = decompose_matrix_units(tv);

    SUBCASE("diagonal units are tomography states") {
        const auto& c00 = dec.unit(0, 0);
        CHECK(std::abs(c00[0] - Complex(1.0)) < 1e-14);
        CHECK(std::abs(c00[1]) < 1e-14);
        CHECK(std::abs(c00[2]) < 1e-14);
        CHECK(std::abs(c00[3]) < 1e-14);

        const auto& c11 = dec.unit(1, 1);
        CHECK(std::abs(c11[3] - Complex(1.0)) < 1e-14);
        CHECK(std::abs(c11[0]) < 1e-14);
    }

    SUBCASE("off-diagonal coefficients come from the solve") {
        const auto& c01 = dec.unit(0, 1);
        CHECK(std::abs(c01[0] - Complex(-0.5, -0.5)) < 1e-12);
        CHECK(std::abs(c01[1] - Complex(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(c01[2] - Complex(0.0, 1.0)) < 1e-12);
        CHECK(std::abs(c01[3] - Complex(-0.5, -0.5)) < 1e-12);
    }

    SUBCASE("conjugation symmetry between E_01 and E_10") {
        const auto& c01 = dec.unit(0, 1);
        const auto& c10 = dec.unit(1, 0);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(std::abs(c10[k] - std::conj(c01[k])) < 1e-12);
    }

    SUBCASE("coefficient sums match traces") {
        // All tau_k have unit trace, so the coefficient sum equals Tr(E_ij).
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Complex sum = 0.0;
                for (const Complex& c : dec.unit(i, j)) sum += c;
                CHECK(std::abs(sum - Complex(i == j ? 1.0 : 0.0)) < 1e-12);
            }
    }

    SUBCASE("reconstructs every matrix unit") {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Matrix rebuilt(2);
                for (std::size_t k = 0; k < 4; ++k)
                    rebuilt += dec.unit(i, j)[k] * tv.states[k];
                CHECK(max_abs_diff(rebuilt, matrix_unit(i, j)) < 1e-12);
            }
    }
}

TEST_CASE("degenerate tomography vector is rejected") {
    TomographyVector tv = canonical_tomography_vector();
    tv.states[1] = tv.states[0];
    CHECK_THROWS_AS(decompose_matrix_units(tv), ValidationError);
}
