#pragma once

// Scalar-generic helpers shared by the exact (Cyclotomic) and floating
// (std::complex<double>) code paths.

#include <complex>
#include <type_traits>

#include <Eigen/Core>

#include "equispectra/cyclotomic.hpp"

namespace equispectra {

using Complex = std::complex<double>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<Cyclotomic>;
using ComplexMatrix = Matrix<Complex>;

template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Cyclotomic>;

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const Cyclotomic& z) { return z.to_complex(); }

inline Complex conj(const Complex& z) { return std::conj(z); }

/// Exact scalars compare against zero exactly; floating ones against tol.
inline bool near_zero(const Cyclotomic& x, double /*tol*/) { return x.is_zero(); }
inline bool near_zero(const Complex& x, double tol) { return std::abs(x) <= tol; }

template <class Scalar>
Matrix<Scalar> conj_transpose(const Matrix<Scalar>& m) {
    Matrix<Scalar> out(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
    return out;
}

template <class Scalar>
ComplexMatrix to_complex(const Matrix<Scalar>& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
    return out;
}

/// Frobenius norm, evaluated in floating point for either scalar.
template <class Scalar>
double frobenius_norm(const Matrix<Scalar>& m) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += std::norm(to_complex(m(i, j)));
    return std::sqrt(s);
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m, double tol) {
    if constexpr (is_exact_v<Scalar>) {
        for (Eigen::Index i = 0; i < m.size(); ++i)
            if (!m.data()[i].is_zero()) return false;
        return true;
    } else {
        return m.size() == 0 || m.cwiseAbs().maxCoeff() <= tol;
    }
}

template <class Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
    Matrix<Scalar> out = Matrix<Scalar>::Constant(n, n, Scalar(0));
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) = Scalar(1);
    return out;
}

template <class Scalar>
Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
    return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Scalar trace(const Matrix<Scalar>& m) {
    Scalar s(0);
    for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
    return s;
}

/// Rank by Gaussian elimination: exact pivots for Cyclotomic, partial
/// pivoting with a relative tolerance for complex input.
template <class Scalar>
Eigen::Index matrix_rank(Matrix<Scalar> m, double tol = 1e-8);

/// Columns spanning the null space (exact for Cyclotomic).
template <class Scalar>
Matrix<Scalar> null_space(const Matrix<Scalar>& m, double tol = 1e-8);

}  // namespace equispectra
