#pragma once

// Brute-force ground truth on homogeneous polynomial spaces: Fischer Gram
// matrix, Laplacian, harmonic subspaces, and eigen-decomposition of Q^{S+},
// with and without group equivariance.

#include <vector>

#include "equispectra/operator_core.hpp"
#include "equispectra/rep_theory.hpp"

namespace equispectra {

struct PolySpace {
    int k;
    int d;
    int m;
    MonomialBasis basis;
    std::vector<Integer> gram;  // diagonal Fischer Gram entries a!, one per basis vector

    long dim() const { return static_cast<long>(basis.size()) * d; }
};

PolySpace poly_space(int k, int d, int m);

/// Delta = sum_{i,j} -A_i^*A_j d_i d_j as a map P_m -> P_{m-2}; m < 2 gives a 0 x dim(P_m) matrix.
template <class Scalar>
Matrix<Scalar> laplacian_matrix(const CliffordSymbol<Scalar>& sym, int m);

/// Multiplication by B(x) = sum_{i,j} -x_i x_j A_i^*A_j, a map P_m -> P_{m+2}.
template <class Scalar>
Matrix<Scalar> b_multiplication(const CliffordSymbol<Scalar>& sym, int m);

/// Multiplication by |x|^2 (tensor identity), P_m -> P_{m+2}.
template <class Scalar>
Matrix<Scalar> norm_squared_multiplication(int k, int d, int m);

template <class Scalar>
struct HarmonicSpace {
    int m;
    Matrix<Scalar> basis_matrix;  // columns span ker Delta in P_m
    long h() const { return basis_matrix.cols(); }
};

template <class Scalar>
HarmonicSpace<Scalar> harmonic_space(const CliffordSymbol<Scalar>& sym, int m, double tol = 1e-8);

/// Matrix of p(x) -> p(R^{-1} x) on degree-m monomials (R orthogonal, so R^{-1} = R^T).
template <class Scalar>
Matrix<Scalar> polynomial_substitution(const Matrix<Scalar>& r, int m);

/// Action g -> (p (x) v -> p(R_g^{-1} .) (x) U_g^+ v) on P_m, one matrix per element.
template <class Scalar>
std::vector<Matrix<Scalar>> section_representation(const GroupAction<Scalar>& action, int m);

struct Eigenpair {
    long lambda;
    long mult;
    bool operator==(const Eigenpair&) const = default;
};

struct BruteSpectrum {
    int m = 0;
    long dim = 0;  // dimension of the space that was diagonalized
    std::vector<Eigenpair> eigen;  // ascending lambda, nonzero multiplicities
    bool certified = false;        // true for the exact route
    long multiplicity(long lambda) const;
};

/// Spectrum of Q^{S+} on P_m. Exact input: certified (see README). Float input:
/// eigensolver with integer rounding at tol.
template <class Scalar>
BruteSpectrum brute_spectrum(const CliffordSymbol<Scalar>& sym, int m, double tol = 1e-8);

/// Spectrum on the alpha-isotypic part of P_m; multiplicities count copies
/// of V_alpha (isotypic dimension / dim V_alpha).
template <class Scalar>
BruteSpectrum equivariant_brute_spectrum(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha,
                                         int m, double tol = 1e-8);

/// Same as above for every irreducible at once (one pass over P_m).
template <class Scalar>
std::vector<BruteSpectrum> equivariant_brute_spectra(const GroupAction<Scalar>& action, const CharacterTable& table,
                                                     int m, double tol = 1e-8);

/// The admissible window {-m..0} u {k-1..m+k-2}, ascending, without repeats.
std::vector<long> eigenvalue_window(int k, int m);

}  // namespace equispectra
