// Dense complex linear algebra for small (2x2 and 4x4) matrices:
// Kronecker products, partial trace over the bath factor, Hermitian
// eigendecomposition, unitary matrix exponentials and the trace norm.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "chneg/errors.hpp"

namespace chneg {

using Complex = std::complex<double>;

// Tolerances used by the numeric kernels.
inline constexpr double kHermitianInputTol = 1e-10;  // max |m - m^dag| accepted by the eigensolver
inline constexpr double kEigOffdiagTol = 1e-13;      // off-diagonal Frobenius norm at convergence
inline constexpr int kEigMaxSweeps = 100;
inline constexpr double kTraceNormClamp = 1e-12;     // rounding window for M^dag M eigenvalues

/// Dense square complex matrix, row-major storage.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    Matrix(std::size_t dim, std::initializer_list<Complex> entries);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    Matrix dagger() const;
    Complex trace() const;

    double max_abs() const;
    bool all_finite() const;
    /// max |m - m^dag| over all entries.
    double hermiticity_residual() const;
    bool is_hermitian(double tol) const { return hermiticity_residual() <= tol; }
    /// max |u^dag u - I| over all entries.
    double unitarity_residual() const;
    bool is_unitary(double tol) const { return unitarity_residual() <= tol; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Complex s, Matrix m) { return m *= s; }
    friend Matrix operator*(Matrix m, Complex s) { return m *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Kronecker product; the first factor indexes the slow (leftmost) subsystem.
Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out the second (fast) tensor factor of a 4x4 composite matrix.
Matrix partial_trace_bath(const Matrix& m);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // unitary; column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.  The input is
/// symmetrized as (m + m^dag)/2 before iterating; inputs further than
/// kHermitianInputTol from Hermitian are rejected.
EigenDecomposition hermitian_eig(const Matrix& m);

/// exp(-i t h) for Hermitian h, evaluated through the eigendecomposition.
Matrix expm_unitary(const Matrix& h, double t);

/// Trace norm ||m||_1 = sum of singular values, via the spectrum of m^dag m.
double trace_norm(const Matrix& m);

} // namespace chneg
