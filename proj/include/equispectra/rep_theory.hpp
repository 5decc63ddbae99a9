#pragma once

// Finite groups given by multiplication tables, exact character tables,
// validated actions on (R^k, C^{d+}, C^{d-}), isotypic projectors, and the
// restriction / conjugation bookkeeping behind canonical isotropy bundles.

#include <string>
#include <vector>

#include "equispectra/operator_core.hpp"

namespace equispectra {

class FiniteGroup {
public:
    /// mul[a][b] = index of a*b. Element 0 must be the identity.
    static FiniteGroup from_table(std::vector<std::vector<int>> mul, std::string name = "");

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    /// b^{-1} a b
    int conjugate(int a, int b) const { return mul_[inv_[b]][mul_[a][b]]; }
    int element_order(int g) const { return orders_[g]; }
    /// lcm of element orders.
    int exponent() const { return exponent_; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }
    const std::vector<std::vector<int>>& table() const { return mul_; }

private:
    std::string name_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> orders_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    int exponent_ = 1;
};

/// Z_n with element a = g^a.
FiniteGroup cyclic_group(int n);
/// D_n of order 2n: element a is r^a, element n + a is s r^a, with s r s = r^{-1}.
FiniteGroup dihedral_group(int n);
/// S_n (n <= 4): permutations of {0..n-1} in lexicographic order; (st)(i) = s(t(i)).
FiniteGroup symmetric_group(int n);
/// Element (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Permutation of {0..n-1} represented by element g of symmetric_group(n).
std::vector<int> permutation_of(int n, int g);

struct Subgroup {
    FiniteGroup group;
    std::vector<int> embedding;  // subgroup index -> ambient index
};

/// elements must be closed under multiplication; the identity is moved first.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

struct Irrep {
    std::string name;
    int degree;
    std::vector<Cyclotomic> values;  // one value per group element
};

class CharacterTable {
public:
    /// Validates class-function shape, row orthogonality and sum of squared degrees.
    static CharacterTable create(FiniteGroup group, std::vector<Irrep> irreps);

    const FiniteGroup& group() const { return group_; }
    int size() const { return static_cast<int>(irreps_.size()); }
    const Irrep& irrep(int i) const { return irreps_[i]; }
    const std::vector<Cyclotomic>& character(int i) const { return irreps_[i].values; }
    int degree(int i) const { return irreps_[i].degree; }
    const std::string& name(int i) const { return irreps_[i].name; }
    /// Throws a structural error for unknown labels.
    int index_of(const std::string& name) const;
    /// Index of the irreducible with exactly these values, or -1.
    int find(const std::vector<Cyclotomic>& values) const;
    /// Index of the complex-conjugate character.
    int dual(int i) const { return find_conj(i); }
    int trivial() const;
    /// (1/|G|) sum_g a(g) conj(b(g)).
    Cyclotomic inner(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;
    /// Multiplicity of irreducible i in a class function; throws if not a nonnegative integer.
    long multiplicity(const std::vector<Cyclotomic>& chi, int i) const;

private:
    int find_conj(int i) const;

    FiniteGroup group_;
    std::vector<Irrep> irreps_;
};

/// chi_j(g^a) = zeta_n^{ja}, named chi0..chi{n-1}.
CharacterTable cyclic_characters(int n);
/// One-dimensional characters first (triv, det, then b1, b2 when n is even),
/// then psi1..psi{floor((n-1)/2)} with psi_h(r^a) = 2 cos(2 pi h a / n).
CharacterTable dihedral_characters(int n);
/// S1..S4 by cycle type. S3: triv, sign, std. S4: triv, sign, two, std, std_sign.
CharacterTable symmetric_characters(int n);
/// Outer product table on direct_product(g, h); names "a*b".
CharacterTable product_characters(const CharacterTable& g, const CharacterTable& h);
/// Character table of a cyclic subgroup, chi_j(c^a) = zeta^{ja} for a chosen generator c
/// (the lowest-index element of full order).
CharacterTable cyclic_subgroup_characters(const Subgroup& h);

/// Validated action of a finite group: R_g orthogonal on R^k, U_g^+ and U_g^-
/// unitary on the fibers, with U^-_g A_i = sum_j (R_g)_{ji} A_j U^+_g.
/// Convention on sections: (g.u)(x) = U_g u(R_g^{-1} x).
template <class Scalar>
class GroupAction {
public:
    using Mat = Matrix<Scalar>;

    /// Matrices given for the listed generators; extended to the whole group
    /// by breadth-first products and then checked on every pair.
    static GroupAction create(CliffordSymbol<Scalar> symbol, FiniteGroup group, const std::vector<int>& generators,
                              const std::vector<Mat>& r, const std::vector<Mat>& u_plus,
                              const std::vector<Mat>& u_minus, double tol = 0.0);
    static GroupAction trivial(CliffordSymbol<Scalar> symbol);

    const CliffordSymbol<Scalar>& symbol() const { return symbol_; }
    const FiniteGroup& group() const { return group_; }
    const Mat& R(int g) const { return r_[g]; }
    const Mat& u_plus(int g) const { return up_[g]; }
    const Mat& u_minus(int g) const { return um_[g]; }
    const std::vector<Mat>& u_plus_all() const { return up_; }
    const std::vector<Mat>& u_minus_all() const { return um_; }
    const std::vector<Mat>& r_all() const { return r_; }

private:
    GroupAction(CliffordSymbol<Scalar> s, FiniteGroup g) : symbol_(std::move(s)), group_(std::move(g)) {}

    CliffordSymbol<Scalar> symbol_;
    FiniteGroup group_;
    std::vector<Mat> r_, up_, um_;
};

/// Throws a structural error unless rep[g*h] = rep[g] rep[h] for all pairs.
template <class Scalar>
void check_homomorphism(const FiniteGroup& g, const std::vector<Matrix<Scalar>>& rep, double tol = 1e-10);

/// P_rho = (dim V_rho / |G|) sum_g conj(chi_rho(g)) M_g.
template <class Scalar>
Matrix<Scalar> isotypic_projector(const std::vector<Matrix<Scalar>>& rep, const CharacterTable& table, int rho,
                                  bool verify = true);

/// n_sigma^rho for every sigma in table_h.
std::vector<long> restriction_multiplicities(const CharacterTable& table_g, const CharacterTable& table_h,
                                             const std::vector<int>& embedding, int rho);

/// <Ind_H^G chi_sigma, chi_rho>_G computed from the induced character.
long induced_multiplicity(const CharacterTable& table_g, const CharacterTable& table_h,
                          const std::vector<int>& embedding, int sigma, int rho);

/// Map h -> n^{-1} h n on subgroup indices; throws if conjugation by the
/// ambient element n leaves the subgroup.
std::vector<int> conjugation_map(const FiniteGroup& g, const std::vector<int>& embedding, int n);

/// Label of sigma^n, sigma^n(h) = sigma(n^{-1} h n).
int sigma_conjugate(const CharacterTable& table_h, int sigma, const std::vector<int>& conj_map);

struct FineBlock {
    std::vector<int> labels;  // ascending
    int size() const { return static_cast<int>(labels.size()); }
};

/// Orbits of the irreducibles of H under the given conjugations.
std::vector<FineBlock> fine_partition(const CharacterTable& table_h, const std::vector<std::vector<int>>& conj_maps);

struct CanonicalBundle {
    int j0;     // lowest G-irreducible whose restriction contains sigma
    long m;     // n_sigma^{rho_j0}
    int d;      // dim W_sigma
    int n;      // size of the fine block of sigma
    long rank() const { return m * d * n; }
};

CanonicalBundle canonical_bundle_data(const CharacterTable& table_g, const CharacterTable& table_h,
                                      const std::vector<int>& embedding, int sigma,
                                      const std::vector<std::vector<int>>& conj_maps = {});

}  // namespace equispectra
