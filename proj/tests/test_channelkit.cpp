#include <doctest.h>

#include <cmath>
#include <vector>

#include "chneg/channelkit.hpp"
#include "chneg/qstates.hpp"
#include "test_support.hpp"

using namespace chneg;
using namespace testsup;

namespace {

std::vector<AssignmentMap> sample_sharps() {
    return {HadamardSharp{},
            RotationSharp{0.0},
            RotationSharp{1.1},
            AlphaSharp{0.0},
            AlphaSharp{0.37},
            AlphaSharp{1.0 / std::sqrt(2.0)},
            UnitaryConjugationSharp{rotation_gate(2.2)},
            ProductSharp{Matrix(2, {0.25, 0.0, 0.0, 0.75})}};
}

} // namespace

TEST_CASE("realize_coupling fixed gates") {
    CHECK(max_abs_diff(realize_coupling(RotationThetaCoupling{0.0}), Matrix::identity(4)) < 1e-15);
    CHECK(max_abs_diff(realize_coupling(CzPrimeCoupling{kPi}), realize_coupling(CzCoupling{})) <
          1e-15);

    const Matrix rsw = realize_coupling(RootSwapCoupling{});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(rsw(1, 1) - Complex(r)) < 1e-15);
    CHECK(std::abs(rsw(1, 2) - Complex(0.0, r)) < 1e-15);
    CHECK(std::abs(rsw(0, 0) - Complex(1.0)) < 1e-15);

    const Matrix czpp = realize_coupling(CzDoublePrimeCoupling{0.7, 1.9});
    CHECK(std::abs(czpp(2, 2) - std::exp(Complex(0.0, -1.9))) < 1e-15);
    CHECK(std::abs(czpp(3, 3) - std::exp(Complex(0.0, -0.7))) < 1e-15);
}

TEST_CASE("realize_coupling stays unitary over parameter grids") {
    for (int i = 0; i < 32; ++i) {
        const double v = 2.0 * kPi * i / 31.0;
        CHECK(realize_coupling(RotationThetaCoupling{v}).unitarity_residual() < 1e-10);
        CHECK(realize_coupling(CzPrimeCoupling{v}).unitarity_residual() < 1e-10);
        CHECK(realize_coupling(CzDoublePrimeCoupling{v, 2.0 * kPi - v}).unitarity_residual() <
              1e-10);
        CHECK(realize_coupling(RabiCoupling{0.0, 1.0, v, kPi / 3.0}).unitarity_residual() < 1e-10);
        CHECK(realize_coupling(RabiCoupling{0.0, 1.0, kPi / 2.0, v}).unitarity_residual() < 1e-10);
    }
    CHECK(realize_coupling(RootSwapCoupling{}).unitarity_residual() < 1e-10);
    CHECK(realize_coupling(CzCoupling{}).unitarity_residual() < 1e-10);
}

TEST_CASE("rabi coupling with kz=0 factorizes into local propagators") {
    for (double t : {0.4, 1.7}) {
        const Matrix u = expm_unitary(rabi_qubit_hamiltonian(0.0, 1.0), t);
        CHECK(max_abs_diff(realize_coupling(RabiCoupling{0.0, 1.0, 0.0, t}), kron(u, u)) < 1e-10);
    }
}

TEST_CASE("custom couplings are validated") {
    CHECK_THROWS_AS(realize_coupling(CustomCoupling{Matrix(4)}), ValidationError);
    CHECK_THROWS_AS(realize_coupling(CustomCoupling{Matrix::identity(2)}), ValidationError);
    CHECK(max_abs_diff(realize_coupling(CustomCoupling{Matrix::identity(4)}),
                       Matrix::identity(4)) == 0.0);

    auto rng = make_rng(21);
    const Matrix u = random_unitary(rng, 4);
    CHECK(max_abs_diff(realize_coupling(CustomCoupling{u}), u) == 0.0);
}

TEST_CASE("hadamard sharp reproduces the fixed composite states") {
    const TomographyVector tv = canonical_tomography_vector();
    const std::vector<std::vector<Complex>> expected = {
        kron_ket(ket0(), ket_plus()),
        kron_ket(ket_plus(), ket0()),
        kron_ket(ket_plus_i(), ket_minus_i()),
        kron_ket(ket1(), ket_minus()),
    };
    for (std::size_t k = 0; k < 4; ++k) {
        const Matrix sharp = apply_sharp(HadamardSharp{}, tv.states[k]);
        CHECK(max_abs_diff(sharp, projector(expected[k])) < 1e-14);
    }
}

TEST_CASE("sharp variants behave as stated") {
    const TomographyVector tv = canonical_tomography_vector();

    SUBCASE("rotation by zero is the plain product with itself") {
        for (const Matrix& tau : tv.states)
            CHECK(max_abs_diff(apply_sharp(RotationSharp{0.0}, tau), kron(tau, tau)) < 1e-14);
    }

    SUBCASE("product sharp attaches the given bath state") {
        const Matrix bath = Matrix(2, {1.0, 0.0, 0.0, 0.0});
        const Matrix out = apply_sharp(ProductSharp{bath}, tv.states[1]);
        CHECK(max_abs_diff(out, kron(tv.states[1], bath)) < 1e-14);
    }

    SUBCASE("alpha at 2^-1/2 coincides with the Hadamard conjugation") {
        const double root_half = 1.0 / std::sqrt(2.0);
        CHECK(max_abs_diff(alpha_unitary(root_half), hadamard_gate()) < 1e-15);
        for (const Matrix& tau : tv.states)
            CHECK(max_abs_diff(apply_sharp(AlphaSharp{root_half}, tau),
                               apply_sharp(UnitaryConjugationSharp{hadamard_gate()}, tau)) < 1e-15);
    }

    SUBCASE("alpha parameter is validated") {
        CHECK_THROWS_AS(alpha_unitary(-0.1), ValidationError);
        CHECK_THROWS_AS(alpha_unitary(1.1), ValidationError);
        CHECK_THROWS_AS(apply_sharp(AlphaSharp{2.0}, tv.states[0]), ValidationError);
        for (double alpha : {0.0, 0.3, 0.999, 1.0})
            CHECK(alpha_unitary(alpha).unitarity_residual() < 1e-12);
    }
}

TEST_CASE("sharp outputs are consistent composite states") {
    const TomographyVector tv = canonical_tomography_vector();
    for (const AssignmentMap& map : sample_sharps()) {
        for (const Matrix& tau : tv.states) {
            const Matrix sharp = apply_sharp(map, tau);
            CHECK(max_abs_diff(partial_trace_bath(sharp), tau) < 1e-12);
            CHECK(sharp.hermiticity_residual() < 1e-12);
            CHECK(std::abs(sharp.trace() - Complex(1.0)) < 1e-12);
            CHECK(hermitian_eig(sharp).eigenvalues.front() > -1e-12);
        }
    }
}

TEST_CASE("sharp maps reject states off the tomography domain") {
    const Matrix mixed = 0.5 * Matrix::identity(2);
    CHECK_THROWS_AS(apply_sharp(HadamardSharp{}, mixed), ValidationError);

    const Matrix unnormalized(2, {2.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(apply_sharp(HadamardSharp{}, unnormalized), ValidationError);

    Matrix skew(2, {1.0, 0.3, 0.0, 0.0});
    CHECK_THROWS_AS(apply_sharp(HadamardSharp{}, skew), ValidationError);

    const Matrix bad_bath(2, {2.0, 0.0, 0.0, -1.0});
    CHECK_THROWS_AS(apply_sharp(ProductSharp{bad_bath}, projector(ket0())), ValidationError);
}

TEST_CASE("apply_channel basics") {
    const TomographyVector tv = canonical_tomography_vector();

    SUBCASE("identity dynamics with a product sharp change nothing") {
        const AssignmentMap map = ProductSharp{projector(ket0())};
        const CouplingSpec spec = CustomCoupling{Matrix::identity(4)};
        for (const Matrix& tau : tv.states)
            CHECK(max_abs_diff(apply_channel(spec, map, tau), tau) < 1e-12);
    }

    SUBCASE("outputs are density matrices for all variants and couplings") {
        const std::vector<CouplingSpec> couplings = {
            RootSwapCoupling{}, CzCoupling{}, CzPrimeCoupling{1.3}, RotationThetaCoupling{2.1},
            RabiCoupling{0.0, 1.0, kPi / 2.0, 1.4}};
        for (const CouplingSpec& spec : couplings) {
            const Matrix u = realize_coupling(spec);
            for (const AssignmentMap& map : sample_sharps()) {
                for (const Matrix& tau : tv.states) {
                    const Matrix out = apply_channel(u, map, tau);
                    CHECK(out.hermiticity_residual() < 1e-10);
                    CHECK(std::abs(out.trace() - Complex(1.0)) < 1e-10);
                    CHECK(hermitian_eig(out).eigenvalues.front() > -1e-10);
                }
            }
        }
    }

    SUBCASE("CZ with the Hadamard sharp fixes the computational projectors") {
        // The control qubit is untouched by CZ, so |0><0| and |1><1| map to
        // themselves; consistency with the alpha-family closed form pins the
        // same blocks.
        CHECK(max_abs_diff(apply_channel(CzCoupling{}, HadamardSharp{}, tv.states[0]),
                           tv.states[0]) < 1e-12);
        CHECK(max_abs_diff(apply_channel(CzCoupling{}, HadamardSharp{}, tv.states[3]),
                           tv.states[3]) < 1e-12);
    }
}
