#pragma once

// Eta invariants and kernel dimensions of Q^{S+,alpha}.
//
// eta(s) = sum_{j>=0} mu_{j+k-1} (j+k-1)^{-s} - sum_{j>=1} mu_{-j} j^{-s}
//        = sum_{n>=1} c_n n^{-s}.
// c_n is a quasi-polynomial in n (period L = group exponent, degree <= k-1),
// so eta(0) is a finite sum plus Hurwitz zeta values zeta(-i, a) =
// -B_{i+1}(a)/(i+1).

#include <optional>
#include <string>
#include <vector>

#include "equispectra/rep_theory.hpp"
#include "equispectra/spectral.hpp"

namespace equispectra {

struct EtaReport {
    std::string alpha;
    std::optional<Rational> exact;  // set by the hurwitz-exact method
    double value = 0.0;
    double err = 0.0;
    long h = 0;
    std::string method;  // "hurwitz-exact" | "numeric-oracle"
    long window = 0;     // number of leading c_n summed directly
    bool low_confidence = false;
    std::string warning;
};

/// Working precision (decimal digits) for floating paths; EQUISPECTRA_PRECISION overrides.
int working_digits(int fallback = 50);

/// c_n for n >= 1 (c_0 is unused).
Rational eta_coefficient(const SpectrumTable& spec, long n);

struct QuasiPolynomial {
    int period = 1;
    long start = 0;                           // valid for n >= start
    std::vector<std::vector<Rational>> poly;  // poly[r][i]: coefficient of n^i for n = r mod period
    Rational operator()(long n) const;
};

/// Fits c_n for n >= j0 = 2(k+1)L (or the given start) and verifies the fit on
/// 2(k+1)L further terms; returns nullopt when verification fails.
std::optional<QuasiPolynomial> fit_eta_coefficients(const SpectrumTable& spec, long start = -1);

/// Bernoulli polynomial B_n(x), exact (B_1 = -1/2 convention).
Rational bernoulli_polynomial(int n, const Rational& x);

/// Hurwitz-exact continuation; falls back to the numeric oracle (with a
/// warning) if the quasi-polynomial check fails. Refuses k = 1.
EtaReport eta_invariant(const SpectrumTable& spec, long start = -1);

/// mu_0^alpha.
long kernel_dim(const SpectrumTable& spec);

/// Euler-Maclaurin evaluation of eta(s) on s = s0 2^{-i}, Richardson-extrapolated to s = 0.
EtaReport numeric_eta_oracle(const SpectrumTable& spec, int digits = 0, long start = -1);

struct Codim1Eta {
    long h;
    long eta;
    int beta_bar;  // label of beta times the orientation character
};

/// Codimension one: h = copies of beta in C^{d+}, eta = copies of beta-bar,
/// beta-bar(g) = orientation(g) beta(g). orientation holds +-1 per element and
/// must be a nontrivial homomorphism (its kernel is the index-2 subgroup).
template <class Scalar>
Codim1Eta codim1_eta_h(const CharacterTable& table, const std::vector<Matrix<Scalar>>& fiber_plus,
                       const std::vector<int>& orientation, int beta);

}  // namespace equispectra
