#include "su2d/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace su2d {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

cplx ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix is not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        m = std::max(m, std::abs(data_[k] - other.data_[k]));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("operator+=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("operator-=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("operator*: shape mismatch");
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += aik * other(k, j);
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<double>());
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

void Spectrum::require_probabilities(double tol) const {
    for (double v : values_)
        if (v < -tol || v > 1.0 + tol)
            throw std::domain_error("Spectrum: value " + std::to_string(v) +
                                    " outside [0,1] beyond tolerance");
    if (std::abs(sum() - 1.0) > tol)
        throw std::domain_error("Spectrum: probabilities sum to " + std::to_string(sum()));
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::size_t da, std::size_t db)
    : mat(std::move(m)), dim_a(da), dim_b(db) {
    if (da == 0 || db == 0 || mat.rows() != da * db || mat.cols() != da * db)
        throw std::invalid_argument("DensityMatrix: matrix size does not match dim_a*dim_b");
    if (!mat.is_hermitian(1e-12))
        throw std::domain_error("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(mat.trace() - cplx(1.0, 0.0)) > 1e-12)
        throw std::domain_error("DensityMatrix: trace differs from 1 beyond 1e-12");
    const Spectrum spec = hermitian_eigenvalues(mat);
    if (spec.values().back() < -1e-10)
        throw std::domain_error("DensityMatrix: negative eigenvalue beyond -1e-10 slack");
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
    if (m.rows() != m.cols() || m.rows() != dim_a * dim_b)
        throw std::invalid_argument("partial_trace: size does not match dim_a*dim_b");
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t k = 0; k < dim_a; ++k) {
                cplx s = 0.0;
                for (std::size_t b = 0; b < dim_b; ++b) s += m(i * dim_b + b, k * dim_b + b);
                out(i, k) = s;
            }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t b = 0; b < dim_b; ++b)
        for (std::size_t c = 0; c < dim_b; ++c) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < dim_a; ++i) s += m(i * dim_b + b, i * dim_b + c);
            out(b, c) = s;
        }
    return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    return partial_trace(rho.mat, rho.dim_a, rho.dim_b, keep);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Subsystem which) {
    if (m.rows() != m.cols() || m.rows() != dim_a * dim_b)
        throw std::invalid_argument("partial_transpose: size does not match dim_a*dim_b");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t b = 0; b < dim_b; ++b)
            for (std::size_t k = 0; k < dim_a; ++k)
                for (std::size_t c = 0; c < dim_b; ++c) {
                    if (which == Subsystem::B)
                        out(i * dim_b + b, k * dim_b + c) = m(i * dim_b + c, k * dim_b + b);
                    else
                        out(i * dim_b + b, k * dim_b + c) = m(k * dim_b + b, i * dim_b + c);
                }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
    return partial_transpose(rho.mat, rho.dim_a, rho.dim_b, which);
}

namespace {

// Off-diagonal Frobenius norm squared of a Hermitian work matrix.
double offdiag_sq(const std::vector<cplx>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
    return 2.0 * s;
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
    if (!m.is_hermitian(1e-12))
        throw std::domain_error("hermitian_eigenvalues: input not Hermitian within 1e-12");

    const std::size_t n = m.rows();
    std::vector<cplx> a(n * n);
    // Work on an exactly Hermitian copy so every Jacobi rotation stays unitary.
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a[i * n + j] = v;
            a[j * n + i] = std::conj(v);
        }
    }

    if (n > 1) {
        double fro = 0.0;
        for (const cplx& v : a) fro += std::norm(v);
        fro = std::sqrt(fro);
        const double stop = 1e-14 * std::max(1.0, fro);
        const double stop_sq = stop * stop;

        double off = offdiag_sq(a, n);
        for (int sweep = 0; sweep < 50 && off > stop_sq; ++sweep) {
            for (std::size_t p = 0; p < n - 1; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = a[p * n + q];
                    const double r = std::abs(apq);
                    if (r == 0.0) continue;
                    const double app = a[p * n + p].real();
                    const double aqq = a[q * n + q].real();
                    const double tau = (aqq - app) / (2.0 * r);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cplx sigma = (s / r) * apq;  // s * e^{i arg(apq)}
                    const cplx sigcon = std::conj(sigma);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        const cplx akp = a[k * n + p];
                        const cplx akq = a[k * n + q];
                        const cplx np = c * akp - sigcon * akq;
                        const cplx nq = sigma * akp + c * akq;
                        a[k * n + p] = np;
                        a[p * n + k] = std::conj(np);
                        a[k * n + q] = nq;
                        a[q * n + k] = std::conj(nq);
                    }
                    const double shift = 2.0 * c * s * r;
                    a[p * n + p] = c * c * app + s * s * aqq - shift;
                    a[q * n + q] = s * s * app + c * c * aqq + shift;
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                }
            }
            const double off_next = offdiag_sq(a, n);
            if (off_next >= off) break;  // numerical floor reached
            off = off_next;
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i].real();
    return Spectrum(std::move(ev));
}

double von_neumann_entropy(const Spectrum& spec) {
    double s = 0.0;
    for (double v : spec.values()) {
        if (v < -1e-10)
            throw std::domain_error("von_neumann_entropy: eigenvalue " + std::to_string(v) +
                                    " below -1e-10 slack");
        const double l = std::clamp(v, 0.0, 1.0);
        s -= detail::xlog2x(l);
    }
    return s;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    return von_neumann_entropy(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.mat); }

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("binary_entropy: argument outside [0,1]");
    const double p = std::clamp(x, 0.0, 1.0);
    return -detail::xlog2x(p) - detail::xlog2x(1.0 - p);
}

namespace detail {
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }
}

}  // namespace su2d
