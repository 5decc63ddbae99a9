#pragma once

// Closed-form spectra of Q^{S+}: full multiplicities, isotypic dimensions of
// P_m from Molien series, and equivariant multiplicity tables.
//
// Multiplicities count copies of V_alpha (isotypic dimension / dim V_alpha).
// With d^{+-}_m the copies of V_alpha in P_m (x) C^{d+-},
//   mu_{-j}    = d^+_j - d^-_{j-1}
//   mu_{j+k-1} = d^-_j - d^+_{j-1}
// which reduces to d_j - d_{j-1} when both fibers carry the same character.

#include <string>
#include <vector>

#include "equispectra/polyspace_oracle.hpp"
#include "equispectra/rep_theory.hpp"

namespace equispectra {

/// d C(j+k-2, j) = mu_{-j} = mu_{j+k-1} for the trivial group.
long full_multiplicity(int k, int d, int j);

enum class Fiber { plus, minus };

/// N(t) / (1 - t^L)^k with deg N < kL.
struct RationalGF {
    int period = 1;  // L
    int power = 1;   // k
    std::vector<Rational> num;

    Rational coefficient(long m) const;
    std::vector<Rational> coefficients(long count) const;
    /// "(1-t^L)^k"
    std::string denominator_string() const;
};

/// d_m^alpha = (1/|H|) sum_h conj(chi_alpha(h)) tr(U_h) [t^m] 1/det(I - t R_h^{-1}), m = 0..m_max.
template <class Scalar>
std::vector<long> isotypic_dims(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha, int m_max,
                                Fiber fiber = Fiber::plus);

template <class Scalar>
RationalGF molien_gf(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha,
                     Fiber fiber = Fiber::plus);

/// The trivial-group generating function d / (1 - t)^k.
RationalGF full_gf(int k, int d);

struct SpectrumTable {
    int k = 0;
    int d = 0;
    std::string alpha = "triv";
    int alpha_degree = 1;
    int lambda_max = 64;
    RationalGF gf_plus;
    RationalGF gf_minus;
    std::vector<long> a;  // a[j] = mu_{-j}, j = 0..lambda_max
    std::vector<long> b;  // b[j] = mu_{j+k-1}, j = 0..lambda_max

    /// Available for every j >= 0, materialized or not.
    long dim_plus(long m) const;
    long dim_minus(long m) const;
    long mu_minus(long j) const;  // mu_{-j}
    long mu_plus(long j) const;   // mu_{j+k-1}
    /// h_j = mu_{-j} + mu_{j+k-2}: copies of V_alpha in the harmonic space H_j.
    long h(long j) const;
    long multiplicity(long lambda) const;
    /// Nonzero (lambda, mult) with |lambda| <= lambda_max, ascending.
    std::vector<Eigenpair> eigenvalues() const;
    /// Spectrum of Q^{S+} on P_m assembled from the |x|^2 tower
    /// P_m = sum_i |x|^{2i} H_{m-2i}, H_i = E_{-i} + E_{i+k-2}.
    std::vector<Eigenpair> tower(int m) const;
};

SpectrumTable full_spectrum(int k, int d, int lambda_max = 64);

template <class Scalar>
SpectrumTable equivariant_spectrum(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha,
                                   int lambda_max = 64);

/// Coefficients of det(I - t M) (ascending powers), via Faddeev-LeVerrier.
template <class Scalar>
std::vector<Scalar> det_one_minus_t(const Matrix<Scalar>& m);

}  // namespace equispectra
