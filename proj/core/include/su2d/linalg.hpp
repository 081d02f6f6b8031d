#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Dense complex linear algebra sized for two-spin problems: Hilbert space
// dimensions stay in the low hundreds, so storage is dense row-major and the
// eigensolver is a cyclic Jacobi iteration rather than anything clever.

namespace su2d {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx trace() const;
    ComplexMatrix adjoint() const;

    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;
    bool is_hermitian(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
    ComplexMatrix operator*(const ComplexMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Kronecker product, first factor's index major:
// out(i*rb + k, j*cb + l) = a(i, j) * b(k, l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Real eigenvalue list kept sorted descending.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double sum() const;

    // For spectra meant to be probability distributions: every value must lie
    // in [-tol, 1 + tol] and the sum must be 1 within tol.
    void require_probabilities(double tol = 1e-10) const;

private:
    std::vector<double> values_;
};

enum class Subsystem { A, B };

// Bipartite state on H_a (x) H_b in the product basis, a-index major.
// Construction checks hermiticity (1e-12), unit trace (1e-12) and positivity
// up to -1e-10 eigenvalue slack.
struct DensityMatrix {
    ComplexMatrix mat;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;

    DensityMatrix(ComplexMatrix m, std::size_t da, std::size_t db);
};

// Reduced matrix on the kept subsystem.  The raw overload does not require a
// normalized state; it only needs the a-major index layout.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Transpose of the selected subsystem's indices.  Hermiticity survives,
// positivity need not.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Subsystem which);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which);

// All eigenvalues of a Hermitian matrix (values only, sorted descending).
// Input must be Hermitian within 1e-12; accuracy is limited by the matrix
// norm times machine epsilon, far below the 1e-10 the callers rely on.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

// Entropy in bits, -sum_i l_i log2 l_i.  Eigenvalues are clipped to [0, 1]
// before the log; anything below -1e-10 means the input was not a state and
// raises std::domain_error.
double von_neumann_entropy(const Spectrum& spec);
double von_neumann_entropy(const ComplexMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

// -x log2 x - (1-x) log2 (1-x).  Inputs outside [0, 1] by more than 1e-12
// are errors; inside the slack band they are clamped.
double binary_entropy(double x);

namespace detail {
// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x);
}

}  // namespace su2d
