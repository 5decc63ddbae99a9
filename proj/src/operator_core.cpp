#include "equispectra/operator_core.hpp"

#include <algorithm>
#include <sstream>

#include "equispectra/error.hpp"

namespace equispectra {

namespace {

void fill_exponents(int k, int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    const int pos = static_cast<int>(current.size());
    if (pos == k - 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current.push_back(e);
        fill_exponents(k, remaining - e, current, out);
        current.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int k, int m) : k_(k), m_(m) {
    if (k < 1) throw Error("structural", "operator_core", "ambient dimension must be at least 1");
    if (m < 0) throw Error("structural", "operator_core", "degree must be nonnegative");
    std::vector<int> current;
    fill_exponents(k, m, current, exponents_);
    for (int i = 0; i < size(); ++i) index_.emplace(exponents_[i], i);
}

int MonomialBasis::index_of(const std::vector<int>& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

long monomial_count(int k, int m) {
    if (m < 0) return 0;
    long c = 1;
    for (int i = 1; i <= k - 1; ++i) c = c * (m + i) / i;
    return c;
}

template <class Scalar>
ValidationReport validate_symbol(const std::vector<Matrix<Scalar>>& a, double tol) {
    ValidationReport report;
    if (a.empty()) {
        report.pass = false;
        report.structural = "symbol needs k >= 1 matrices";
        return report;
    }
    const auto d = a.front().rows();
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].rows() != d || a[j].cols() != d || d == 0) {
            report.pass = false;
            std::ostringstream os;
            os << "A_" << j + 1 << " is " << a[j].rows() << "x" << a[j].cols() << ", expected square " << d << "x" << d;
            report.structural = os.str();
            return report;
        }
    }
    const int k = static_cast<int>(a.size());
    std::vector<Matrix<Scalar>> adj;
    for (const auto& m : a) adj.push_back(conj_transpose(m));
    for (int l = 0; l < k; ++l) {
        for (int j = l; j < k; ++j) {
            Matrix<Scalar> r = adj[l] * a[j] + adj[j] * a[l];
            if (l == j) r -= Scalar(2) * identity<Scalar>(d);
            if (!is_zero_matrix(r, tol)) {
                report.pass = false;
                report.violations.push_back({l + 1, j + 1, frobenius_norm(r)});
            }
        }
    }
    for (int j = 0; j < k; ++j) {
        if (matrix_rank<Scalar>(a[j], std::max(tol, 1e-12)) != d) {
            report.pass = false;
            report.singular.push_back(j + 1);
        }
    }
    return report;
}

template <class Scalar>
CliffordSymbol<Scalar>::CliffordSymbol(std::vector<Mat> a, double tol) : a_(std::move(a)), tol_(tol) {
    const int n = k();
    products_.reserve(n * n);
    for (int l = 0; l < n; ++l) {
        const Mat adj = conj_transpose(a_[l]);
        for (int j = 0; j < n; ++j) products_.push_back(adj * a_[j]);
    }
}

template <class Scalar>
CliffordSymbol<Scalar> CliffordSymbol<Scalar>::create(std::vector<Mat> a, double tol) {
    if constexpr (is_exact_v<Scalar>) tol = 0.0;
    const ValidationReport report = validate_symbol<Scalar>(a, tol);
    if (!report.structural.empty()) throw Error("structural", "operator_core", report.structural);
    if (!report.pass) {
        Error::Context ctx;
        std::ostringstream os;
        for (const auto& v : report.violations) os << "(" << v.l << "," << v.j << ")=" << v.residual << " ";
        ctx["violations"] = os.str();
        std::ostringstream sing;
        for (int j : report.singular) sing << j << " ";
        ctx["singular"] = sing.str();
        throw Error("validation", "operator_core", "symbol fails the Clifford relations", ctx);
    }
    return CliffordSymbol(std::move(a), tol);
}

template <class Scalar>
typename CliffordSymbol<Scalar>::Mat CliffordSymbol<Scalar>::z_plus(const std::vector<Scalar>& theta) const {
    Mat z = zeros<Scalar>(d(), d());
    for (int j = 0; j < k(); ++j) z += theta[j] * a_[j];
    return z;
}

std::vector<std::vector<int>> de_rham_basis(int k, bool odd) {
    std::vector<std::vector<int>> all;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        if ((s.size() % 2 == 1) == odd) all.push_back(s);
    }
    std::sort(all.begin(), all.end());
    return all;
}

CliffordSymbol<Cyclotomic> de_rham_symbol(int k) {
    if (k < 1) throw Error("structural", "operator_core", "de Rham symbol needs k >= 1");
    const auto even = de_rham_basis(k, false);
    const auto odd = de_rham_basis(k, true);
    const int d = static_cast<int>(even.size());
    std::map<std::vector<int>, int> odd_index;
    for (int i = 0; i < d; ++i) odd_index[odd[i]] = i;
    std::vector<ExactMatrix> a;
    for (int j = 1; j <= k; ++j) {
        ExactMatrix m = zeros<Cyclotomic>(d, d);
        for (int c = 0; c < d; ++c) {
            const auto& s = even[c];
            const long before = std::count_if(s.begin(), s.end(), [j](int i) { return i < j; });
            const long sign = before % 2 == 0 ? 1 : -1;
            std::vector<int> t = s;
            auto it = std::find(t.begin(), t.end(), j);
            if (it == t.end()) {
                t.insert(std::upper_bound(t.begin(), t.end(), j), j);
                m(odd_index.at(t), c) += Cyclotomic(sign);
            } else {
                t.erase(it);
                m(odd_index.at(t), c) -= Cyclotomic(sign);
            }
        }
        a.push_back(std::move(m));
    }
    return CliffordSymbol<Cyclotomic>::create(std::move(a));
}

template <class Scalar>
std::vector<Eigen::Triplet<Scalar>> spherical_entries(const CliffordSymbol<Scalar>& sym, int m) {
    const int k = sym.k();
    const int d = sym.d();
    const MonomialBasis basis(k, m);
    std::vector<Eigen::Triplet<Scalar>> out;
    std::vector<int> beta;
    for (int col = 0; col < basis.size(); ++col) {
        const auto& alpha = basis.exponent(col);
        for (int j = 0; j < k; ++j) {
            if (alpha[j] == 0) continue;
            for (int l = 0; l < k; ++l) {
                if (l == j) continue;
                beta = alpha;
                --beta[j];
                ++beta[l];
                const int row = basis.index_of(beta);
                const auto& p = sym.product(l, j);
                for (int a = 0; a < d; ++a) {
                    for (int b = 0; b < d; ++b) {
                        if (near_zero(p(a, b), 0.0)) continue;
                        out.emplace_back(row * d + a, col * d + b, Scalar(static_cast<long>(alpha[j])) * p(a, b));
                    }
                }
            }
        }
    }
    return out;
}

template <class Scalar>
SphericalOperatorSpec<Scalar> spherical_matrix(const CliffordSymbol<Scalar>& sym, int m) {
    if (m < 0) throw Error("structural", "operator_core", "degree must be nonnegative");
    const long n = monomial_count(sym.k(), m) * sym.d();
    Matrix<Scalar> q = zeros<Scalar>(n, n);
    for (const auto& t : spherical_entries(sym, m)) q(t.row(), t.col()) += t.value();
    return {m, sym.k(), sym.d(), std::move(q)};
}

template ValidationReport validate_symbol<Cyclotomic>(const std::vector<ExactMatrix>&, double);
template ValidationReport validate_symbol<Complex>(const std::vector<ComplexMatrix>&, double);
template class CliffordSymbol<Cyclotomic>;
template class CliffordSymbol<Complex>;
template std::vector<Eigen::Triplet<Cyclotomic>> spherical_entries(const CliffordSymbol<Cyclotomic>&, int);
template std::vector<Eigen::Triplet<Complex>> spherical_entries(const CliffordSymbol<Complex>&, int);
template SphericalOperatorSpec<Cyclotomic> spherical_matrix(const CliffordSymbol<Cyclotomic>&, int);
template SphericalOperatorSpec<Complex> spherical_matrix(const CliffordSymbol<Complex>&, int);

}  // namespace equispectra
