#include "chneg/channelkit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace chneg {

Matrix pauli_x() { return Matrix(2, {0.0, 1.0, 1.0, 0.0}); }
Matrix pauli_y() { return Matrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
Matrix pauli_z() { return Matrix(2, {1.0, 0.0, 0.0, -1.0}); }

Matrix hadamard_gate() {
    const double r = 1.0 / std::sqrt(2.0);
    return Matrix(2, {r, r, r, -r});
}

Matrix rotation_gate(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return Matrix(2, {c, -s, s, c});
}

Matrix alpha_unitary(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream msg;
        msg << "alpha_unitary: alpha " << alpha << " outside [0, 1]";
        throw ValidationError(msg.str());
    }
    const double beta = std::sqrt(1.0 - alpha * alpha);
    return Matrix(2, {beta, alpha, alpha, -beta});
}

Matrix rabi_qubit_hamiltonian(double nu, double omega) {
    return Matrix(2, {-0.5 * nu, 0.5 * omega, 0.5 * omega, 0.5 * nu});
}

Matrix rabi_pair_hamiltonian(double nu, double omega, double kz) {
    const Matrix hq = rabi_qubit_hamiltonian(nu, omega);
    const Matrix id = Matrix::identity(2);
    return kron(hq, id) + kron(id, hq) + kz * kron(pauli_z(), pauli_z());
}

namespace {

void require_finite(std::initializer_list<double> values, const char* what) {
    for (double v : values)
        if (!std::isfinite(v))
            throw ValidationError(std::string("realize_coupling: non-finite parameter for ") + what);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Matrix realize_coupling(const CouplingSpec& spec) {
    return std::visit(
        [](const auto& s) -> Matrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RootSwapCoupling>) {
                const double r = 1.0 / std::sqrt(2.0);
                const Complex ir(0.0, r);
                return Matrix(4, {1.0, 0.0, 0.0, 0.0,
                                  0.0, r,   ir,  0.0,
                                  0.0, ir,  r,   0.0,
                                  0.0, 0.0, 0.0, 1.0});
            } else if constexpr (std::is_same_v<T, CzCoupling>) {
                Matrix u = Matrix::identity(4);
                u(3, 3) = -1.0;
                return u;
            } else if constexpr (std::is_same_v<T, CzPrimeCoupling>) {
                require_finite({s.delta}, "czprime");
                Matrix u = Matrix::identity(4);
                u(3, 3) = std::exp(Complex(0.0, -s.delta));
                return u;
            } else if constexpr (std::is_same_v<T, CzDoublePrimeCoupling>) {
                require_finite({s.delta, s.xi}, "czdoubleprime");
                Matrix u = Matrix::identity(4);
                u(2, 2) = std::exp(Complex(0.0, -s.xi));
                u(3, 3) = std::exp(Complex(0.0, -s.delta));
                return u;
            } else if constexpr (std::is_same_v<T, RotationThetaCoupling>) {
                require_finite({s.theta}, "utheta");
                const double c = std::cos(s.theta), sn = std::sin(s.theta);
                return Matrix(4, {1.0, 0.0, 0.0, 0.0,
                                  0.0, c,   sn,  0.0,
                                  0.0, -sn, c,   0.0,
                                  0.0, 0.0, 0.0, 1.0});
            } else if constexpr (std::is_same_v<T, RabiCoupling>) {
                require_finite({s.nu, s.omega, s.kz, s.t}, "rabi");
                return expm_unitary(rabi_pair_hamiltonian(s.nu, s.omega, s.kz), s.t);
            } else {
                static_assert(std::is_same_v<T, CustomCoupling>);
                if (s.u.dim() != 4)
                    throw ValidationError("realize_coupling: custom coupling must be 4x4");
                const double res = s.u.unitarity_residual();
                if (res > kCouplingUnitaryTol) {
                    std::ostringstream msg;
                    msg << "realize_coupling: custom matrix not unitary, residual " << res;
                    throw ValidationError(msg.str());
                }
                return s.u;
            }
        },
        spec);
}

namespace {

void check_sharp_domain(const Matrix& tau) {
    if (tau.dim() != 2) throw ValidationError("apply_sharp: input state must be 2x2");
    const double herm = tau.hermiticity_residual();
    if (herm > kSharpDomainTol) {
        std::ostringstream msg;
        msg << "apply_sharp: input not Hermitian, residual " << herm;
        throw ValidationError(msg.str());
    }
    const double trace_err = std::abs(tau.trace() - Complex(1.0));
    if (trace_err > kSharpDomainTol) {
        std::ostringstream msg;
        msg << "apply_sharp: input trace differs from 1 by " << trace_err;
        throw ValidationError(msg.str());
    }
    // The sharp is defined only on the tomography vector, i.e. pure states.
    const double purity_err = max_abs_diff(tau * tau, tau);
    if (purity_err > kSharpDomainTol) {
        std::ostringstream msg;
        msg << "apply_sharp: input not pure, |tau^2 - tau| = " << purity_err
            << "; sharp maps are undefined off the tomography domain";
        throw ValidationError(msg.str());
    }
}

Matrix bath_for(const AssignmentMap& map, const Matrix& tau) {
    return std::visit(
        [&tau](const auto& m) -> Matrix {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RotationSharp>) {
                const Matrix r = rotation_gate(m.phi);
                return r * tau * r.dagger();
            } else if constexpr (std::is_same_v<T, UnitaryConjugationSharp>) {
                if (m.u.dim() != 2)
                    throw ValidationError("apply_sharp: conjugating unitary must be 2x2");
                const double res = m.u.unitarity_residual();
                if (res > kSharpDomainTol) {
                    std::ostringstream msg;
                    msg << "apply_sharp: conjugating matrix not unitary, residual " << res;
                    throw ValidationError(msg.str());
                }
                return m.u * tau * m.u.dagger();
            } else if constexpr (std::is_same_v<T, HadamardSharp>) {
                const Matrix h = hadamard_gate();
                return h * tau * h.dagger();
            } else if constexpr (std::is_same_v<T, AlphaSharp>) {
                const Matrix u = alpha_unitary(m.alpha);
                return u * tau * u.dagger();
            } else {
                static_assert(std::is_same_v<T, ProductSharp>);
                const Matrix& rho = m.bath_state;
                if (rho.dim() != 2)
                    throw ValidationError("apply_sharp: product bath state must be 2x2");
                if (rho.hermiticity_residual() > kSharpDomainTol)
                    throw ValidationError("apply_sharp: product bath state not Hermitian");
                if (std::abs(rho.trace() - Complex(1.0)) > kSharpDomainTol)
                    throw ValidationError("apply_sharp: product bath state trace differs from 1");
                const EigenDecomposition eig = hermitian_eig(rho);
                if (eig.eigenvalues.front() < -1e-12) {
                    std::ostringstream msg;
                    msg << "apply_sharp: product bath state not positive semidefinite, min eigenvalue "
                        << eig.eigenvalues.front();
                    throw ValidationError(msg.str());
                }
                return rho;
            }
        },
        map);
}

} // namespace

Matrix apply_sharp(const AssignmentMap& map, const Matrix& tau) {
    check_sharp_domain(tau);
    return kron(tau, bath_for(map, tau));
}

Matrix apply_channel(const Matrix& coupling, const AssignmentMap& map, const Matrix& tau) {
    if (coupling.dim() != 4) throw ValidationError("apply_channel: coupling must be 4x4");
    const Matrix sharp = apply_sharp(map, tau);
    return partial_trace_bath(coupling * sharp * coupling.dagger());
}

Matrix apply_channel(const CouplingSpec& spec, const AssignmentMap& map, const Matrix& tau) {
    return apply_channel(realize_coupling(spec), map, tau);
}

std::string describe(const CouplingSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RootSwapCoupling>) return "rootswap";
            else if constexpr (std::is_same_v<T, CzCoupling>) return "cz";
            else if constexpr (std::is_same_v<T, CzPrimeCoupling>)
                return "czprime(delta=" + fmt(s.delta) + ")";
            else if constexpr (std::is_same_v<T, CzDoublePrimeCoupling>)
                return "czdoubleprime(delta=" + fmt(s.delta) + ",xi=" + fmt(s.xi) + ")";
            else if constexpr (std::is_same_v<T, RotationThetaCoupling>)
                return "utheta(theta=" + fmt(s.theta) + ")";
            else if constexpr (std::is_same_v<T, RabiCoupling>)
                return "rabi(nu=" + fmt(s.nu) + ",omega=" + fmt(s.omega) + ",kz=" + fmt(s.kz) +
                       ",t=" + fmt(s.t) + ")";
            else
                return "custom";
        },
        spec);
}

std::string describe(const AssignmentMap& map) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RotationSharp>) return "rotation(phi=" + fmt(m.phi) + ")";
            else if constexpr (std::is_same_v<T, UnitaryConjugationSharp>) return "conjugation";
            else if constexpr (std::is_same_v<T, HadamardSharp>) return "hadamard";
            else if constexpr (std::is_same_v<T, AlphaSharp>) return "alpha(alpha=" + fmt(m.alpha) + ")";
            else return "product";
        },
        map);
}

} // namespace chneg
