// Assignment (sharp) maps, coupling unitaries and the reduced channel
// evaluation eps(tau) = Tr_B(U tau^sharp U^dag).
#pragma once

#include <string>
#include <variant>

#include "chneg/cmatrix.hpp"

namespace chneg {

inline constexpr double kSharpDomainTol = 1e-10;   // purity / trace / hermiticity of sharp inputs
inline constexpr double kCouplingUnitaryTol = 1e-10;

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard_gate();
/// R(phi) = [[cos phi, -sin phi], [sin phi, cos phi]].
Matrix rotation_gate(double phi);
/// U_alpha = alpha*sigma_x + sqrt(1-alpha^2)*sigma_z, unitary for alpha in [0,1].
Matrix alpha_unitary(double alpha);

// --- assignment maps ------------------------------------------------------

struct RotationSharp { double phi = 0.0; };
struct UnitaryConjugationSharp { Matrix u; };
struct HadamardSharp {};
struct AlphaSharp { double alpha = 0.0; };
struct ProductSharp { Matrix bath_state; };

using AssignmentMap =
    std::variant<RotationSharp, UnitaryConjugationSharp, HadamardSharp, AlphaSharp, ProductSharp>;

// --- coupling unitaries ----------------------------------------------------

struct RootSwapCoupling {};
struct CzCoupling {};
struct CzPrimeCoupling { double delta = 0.0; };
struct CzDoublePrimeCoupling { double delta = 0.0; double xi = 0.0; };
struct RotationThetaCoupling { double theta = 0.0; };
struct RabiCoupling {
    double nu = 0.0;     // detuning
    double omega = 1.0;  // Rabi frequency
    double kz = 0.0;     // sigma_z x sigma_z coupling constant
    double t = 0.0;      // elapsed time (hbar = 1)
};
struct CustomCoupling { Matrix u; };

using CouplingSpec = std::variant<RootSwapCoupling, CzCoupling, CzPrimeCoupling,
                                  CzDoublePrimeCoupling, RotationThetaCoupling, RabiCoupling,
                                  CustomCoupling>;

/// Single-atom Rabi Hamiltonian H_q = (1/2) [[-nu, omega], [omega, nu]].
Matrix rabi_qubit_hamiltonian(double nu, double omega);
/// Two-atom Hamiltonian H_q x I + I x H_q + kz * sigma_z x sigma_z.
Matrix rabi_pair_hamiltonian(double nu, double omega, double kz);

/// Realizes the 4x4 coupling unitary in the bare (computational) basis.
Matrix realize_coupling(const CouplingSpec& spec);

/// tau^sharp: injects a tomography state into the two-qubit composite space.
/// The sharp maps are defined only on pure trace-1 states; anything else is
/// rejected rather than extended.
Matrix apply_sharp(const AssignmentMap& map, const Matrix& tau);

/// Tr_B(U tau^sharp U^dag) with U realized from the spec.
Matrix apply_channel(const CouplingSpec& spec, const AssignmentMap& map, const Matrix& tau);
/// Same, with a pre-realized coupling unitary.
Matrix apply_channel(const Matrix& coupling, const AssignmentMap& map, const Matrix& tau);

std::string describe(const CouplingSpec& spec);
std::string describe(const AssignmentMap& map);

} // namespace chneg
