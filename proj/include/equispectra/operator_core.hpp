#pragma once

// Constant-coefficient Clifford-type symbols Q = sum_j A_j d_j and the induced
// spherical operator Q^{S+} on homogeneous polynomial spaces.
//
// Basis of P_m (tensor C^d): monomials x^a of degree m in graded lexicographic
// order (exponent tuples compared lexicographically, largest first, so x1^m
// comes first), tensored with the standard fiber basis. The basis vector
// x^a (x) e_b has index monomial_index(a) * d + b.

#include <map>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "equispectra/scalar.hpp"

namespace equispectra {

class MonomialBasis {
public:
    MonomialBasis(int k, int m);

    int k() const { return k_; }
    int degree() const { return m_; }
    int size() const { return static_cast<int>(exponents_.size()); }
    const std::vector<int>& exponent(int i) const { return exponents_[i]; }
    const std::vector<std::vector<int>>& exponents() const { return exponents_; }
    /// -1 when the tuple is not a degree-m exponent.
    int index_of(const std::vector<int>& a) const;

private:
    int k_;
    int m_;
    std::vector<std::vector<int>> exponents_;
    std::map<std::vector<int>, int> index_;
};

/// C(m + k - 1, m).
long monomial_count(int k, int m);

struct RelationViolation {
    int l;
    int j;
    double residual;  // Frobenius norm of A_l^*A_j + A_j^*A_l - 2 delta I
};

struct ValidationReport {
    bool pass = true;
    std::string structural;  // non-empty on shape errors
    std::vector<RelationViolation> violations;
    std::vector<int> singular;  // indices j with A_j not invertible
};

template <class Scalar>
ValidationReport validate_symbol(const std::vector<Matrix<Scalar>>& a, double tol = 0.0);

/// Validated A_1..A_k. Construct through create(), which refuses symbols
/// failing the anticommutation relations.
template <class Scalar>
class CliffordSymbol {
public:
    using Mat = Matrix<Scalar>;

    static CliffordSymbol create(std::vector<Mat> a, double tol = 0.0);

    int k() const { return static_cast<int>(a_.size()); }
    int d() const { return static_cast<int>(a_.front().rows()); }
    double tol() const { return tol_; }
    static constexpr bool exact() { return is_exact_v<Scalar>; }

    /// 0-based: A(0) is A_1.
    const Mat& A(int j) const { return a_[j]; }
    const std::vector<Mat>& matrices() const { return a_; }
    /// A_l^* A_j.
    const Mat& product(int l, int j) const { return products_[l * k() + j]; }

    /// Z^+(theta) = sum_j theta_j A_j.
    Mat z_plus(const std::vector<Scalar>& theta) const;

private:
    CliffordSymbol(std::vector<Mat> a, double tol);

    std::vector<Mat> a_;
    std::vector<Mat> products_;
    double tol_;
};

/// A_j = e_j wedge - e_j contract, Lambda^even R^k -> Lambda^odd R^k. Each
/// side has basis the subsets of {1..k} of the right parity, ordered
/// lexicographically by their sorted index tuples. k = 1 gives A_1 = [1].
CliffordSymbol<Cyclotomic> de_rham_symbol(int k);

/// Subsets of {1..k} with |S| of the given parity, in the de Rham basis order.
std::vector<std::vector<int>> de_rham_basis(int k, bool odd);

template <class Scalar>
struct SphericalOperatorSpec {
    int m;
    int k;
    int d;
    Matrix<Scalar> matrix;
};

/// Nonzero entries of Q^{S+} = sum_{l != j} x_l d_j (x) A_l^*A_j on P_m.
template <class Scalar>
std::vector<Eigen::Triplet<Scalar>> spherical_entries(const CliffordSymbol<Scalar>& sym, int m);

template <class Scalar>
SphericalOperatorSpec<Scalar> spherical_matrix(const CliffordSymbol<Scalar>& sym, int m);

}  // namespace equispectra
