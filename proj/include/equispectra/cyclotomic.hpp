#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored in the power basis 1, z, ..., z^{phi(N)-1} of
// Q(zeta_N), reduced modulo the N-th cyclotomic polynomial. Elements of
// different fields combine in Q(zeta_lcm). Rationals are GMP-backed.

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace equispectra {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p", or a decimal literal with a finite expansion ("0.25").
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long value);  // NOLINT: implicit, so integer literals mix in expressions
    Cyclotomic(const Rational& value);  // NOLINT

    /// zeta_n^power, with zeta_n = exp(2 pi i / n).
    static Cyclotomic root_of_unity(int n, long power = 1);
    static Cyclotomic gaussian(const Rational& re, const Rational& im);
    /// sum_e coeffs[e] * zeta_n^e, any number of coefficients.
    static Cyclotomic from_exponents(int n, const std::vector<Rational>& coeffs);

    int order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws if the value is not rational.
    Rational rational_value() const;
    bool is_integer() const;

    std::complex<double> to_complex() const;

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const;
    /// Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
    Cyclotomic galois(int a) const;
    /// Same value written in Q(zeta_m); requires order() | m.
    Cyclotomic lifted(int m) const;
    Cyclotomic inverse() const;

    /// Least common denominator of the power-basis coefficients.
    Integer denominator() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// "p/q" for rationals, "a+b*i" for Gaussian values, otherwise
    /// "cyclo(N)[c0,c1,...]".
    std::string to_string() const;

private:
    Cyclotomic(int order, std::vector<Rational> coeffs);
    void trim();

    int order_ = 1;
    std::vector<Rational> coeffs_{Rational(0)};
};

inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
inline double abs(const Cyclotomic& x) { return std::abs(x.to_complex()); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

int lcm_order(int a, int b);

}  // namespace equispectra

namespace Eigen {

template <>
struct NumTraits<equispectra::Cyclotomic> : GenericNumTraits<equispectra::Cyclotomic> {
    using Real = equispectra::Cyclotomic;
    using NonInteger = equispectra::Cyclotomic;
    using Nested = equispectra::Cyclotomic;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 50,
        MulCost = 200
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
