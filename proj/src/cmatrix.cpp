#include "chneg/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace chneg {

Matrix::Matrix(std::size_t dim, std::initializer_list<Complex> entries)
    : dim_(dim), entries_(entries) {
    if (entries_.size() != dim * dim) {
        throw ValidationError("matrix: entry count " + std::to_string(entries_.size()) +
                              " does not match dim " + std::to_string(dim));
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::dagger() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex Matrix::trace() const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

bool Matrix::all_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double Matrix::hermiticity_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
}

double Matrix::unitarity_residual() const {
    const Matrix g = dagger() * (*this);
    return max_abs_diff(g, Matrix::identity(dim_));
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (dim_ != rhs.dim_) throw ValidationError("matrix add: dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (dim_ != rhs.dim_) throw ValidationError("matrix subtract: dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (Complex& z : entries_) z *= s;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw ValidationError("matrix multiply: dimension mismatch");
    const std::size_t n = lhs.dim_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    Matrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

Matrix partial_trace_bath(const Matrix& m) {
    if (m.dim() != 4)
        throw ValidationError("partial_trace_bath: expected a 4x4 matrix, got dim " +
                              std::to_string(m.dim()));
    Matrix out(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return out;
}

namespace {

double offdiag_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

} // namespace

EigenDecomposition hermitian_eig(const Matrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw ValidationError("hermitian_eig: empty matrix");
    const double herm = m.hermiticity_residual();
    if (herm > kHermitianInputTol) {
        std::ostringstream msg;
        msg << "hermitian_eig: input not Hermitian, residual " << herm;
        throw ValidationError(msg.str());
    }

    // Symmetrize; tomography assembly leaves ~1e-16 rounding asymmetry.
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    Matrix v = Matrix::identity(n);

    int sweeps = 0;
    double off = offdiag_norm(a);
    while (off > kEigOffdiagTol) {
        if (sweeps++ >= kEigMaxSweeps) {
            std::ostringstream msg;
            msg << "hermitian_eig: no convergence after " << kEigMaxSweeps
                << " sweeps, off-diagonal residual " << off;
            throw ConvergenceError(msg.str());
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                // Unitary plane rotation zeroing a(p,q): factor out the phase
                // of the pivot, then the usual symmetric Jacobi tangent.
                const Complex phase = apq / mag;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = tau >= 0.0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (std::sqrt(1.0 + tau * tau) - tau);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t r = 0; r < n; ++r) {  // a <- a U
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp + s * std::conj(phase) * arq;
                    a(r, q) = -s * phase * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {  // a <- U^dag a
                    const Complex apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr + s * phase * aqr;
                    a(q, r) = -s * std::conj(phase) * apr + c * aqr;
                }
                for (std::size_t r = 0; r < n; ++r) {  // v <- v U
                    const Complex vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp + s * std::conj(phase) * vrq;
                    v(r, q) = -s * phase * vrp + c * vrq;
                }
            }
        }
        off = offdiag_norm(a);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

Matrix expm_unitary(const Matrix& h, double t) {
    const EigenDecomposition eig = hermitian_eig(h);
    const std::size_t n = h.dim();
    const Matrix& v = eig.eigenvectors;
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k)
        phases[k] = std::exp(Complex(0.0, -t * eig.eigenvalues[k]));

    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += v(i, k) * phases[k] * std::conj(v(j, k));
            out(i, j) = sum;
        }
    return out;
}

double trace_norm(const Matrix& m) {
    const Matrix gram = m.dagger() * m;
    const EigenDecomposition eig = hermitian_eig(gram);
    double sum = 0.0;
    for (double mu : eig.eigenvalues) {
        if (mu < -kTraceNormClamp) {
            std::ostringstream msg;
            msg << "trace_norm: M^dag M eigenvalue " << mu << " below the rounding window";
            throw ConvergenceError(msg.str());
        }
        sum += std::sqrt(std::max(mu, 0.0));
    }
    return sum;
}

} // namespace chneg
