#include "equispectra/polyspace_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "equispectra/error.hpp"
#include "equispectra/modular.hpp"

namespace equispectra {

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

PolySpace poly_space(int k, int d, int m) {
    PolySpace s{k, d, m, MonomialBasis(k, m), {}};
    for (const auto& a : s.basis.exponents()) {
        Integer g = 1;
        for (int e : a) g *= factorial(e);
        for (int b = 0; b < d; ++b) s.gram.push_back(g);
    }
    return s;
}

template <class Scalar>
Matrix<Scalar> laplacian_matrix(const CliffordSymbol<Scalar>& sym, int m) {
    const int k = sym.k();
    const int d = sym.d();
    const MonomialBasis src(k, m);
    if (m < 2) return zeros<Scalar>(0, static_cast<long>(src.size()) * d);
    const MonomialBasis dst(k, m - 2);
    Matrix<Scalar> out = zeros<Scalar>(static_cast<long>(dst.size()) * d, static_cast<long>(src.size()) * d);
    for (int col = 0; col < src.size(); ++col) {
        const auto& a = src.exponent(col);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                std::vector<int> b = a;
                long coef;
                if (i == j) {
                    coef = static_cast<long>(a[i]) * (a[i] - 1);
                    b[i] -= 2;
                } else {
                    coef = static_cast<long>(a[i]) * a[j];
                    --b[i];
                    --b[j];
                }
                if (coef == 0) continue;
                const int row = dst.index_of(b);
                const auto& p = sym.product(i, j);
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c)
                        if (!near_zero(p(r, c), 0.0)) out(row * d + r, col * d + c) -= Scalar(coef) * p(r, c);
            }
        }
    }
    return out;
}

template <class Scalar>
Matrix<Scalar> b_multiplication(const CliffordSymbol<Scalar>& sym, int m) {
    const int k = sym.k();
    const int d = sym.d();
    const MonomialBasis src(k, m);
    const MonomialBasis dst(k, m + 2);
    Matrix<Scalar> out = zeros<Scalar>(static_cast<long>(dst.size()) * d, static_cast<long>(src.size()) * d);
    for (int col = 0; col < src.size(); ++col) {
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                std::vector<int> b = src.exponent(col);
                ++b[i];
                ++b[j];
                const int row = dst.index_of(b);
                const auto& p = sym.product(i, j);
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c)
                        if (!near_zero(p(r, c), 0.0)) out(row * d + r, col * d + c) -= p(r, c);
            }
        }
    }
    return out;
}

template <class Scalar>
Matrix<Scalar> norm_squared_multiplication(int k, int d, int m) {
    const MonomialBasis src(k, m);
    const MonomialBasis dst(k, m + 2);
    Matrix<Scalar> out = zeros<Scalar>(static_cast<long>(dst.size()) * d, static_cast<long>(src.size()) * d);
    for (int col = 0; col < src.size(); ++col) {
        for (int i = 0; i < k; ++i) {
            std::vector<int> b = src.exponent(col);
            b[i] += 2;
            const int row = dst.index_of(b);
            for (int r = 0; r < d; ++r) out(row * d + r, col * d + r) += Scalar(1);
        }
    }
    return out;
}

template <class Scalar>
HarmonicSpace<Scalar> harmonic_space(const CliffordSymbol<Scalar>& sym, int m, double tol) {
    const Matrix<Scalar> lap = laplacian_matrix(sym, m);
    if (lap.rows() == 0) return {m, identity<Scalar>(lap.cols())};
    return {m, null_space<Scalar>(lap, tol)};
}

template <class Scalar>
Matrix<Scalar> polynomial_substitution(const Matrix<Scalar>& r, int m) {
    const int k = static_cast<int>(r.rows());
    std::vector<MonomialBasis> bases;
    for (int deg = 0; deg <= m; ++deg) bases.emplace_back(k, deg);
    const MonomialBasis& top = bases[m];
    Matrix<Scalar> out = zeros<Scalar>(top.size(), top.size());
    std::vector<Scalar> poly;
    std::vector<Scalar> next;
    for (int col = 0; col < top.size(); ++col) {
        const auto& a = top.exponent(col);
        poly.assign(1, Scalar(1));
        int deg = 0;
        for (int i = 0; i < k; ++i) {
            for (int rep = 0; rep < a[i]; ++rep) {
                // multiply by sum_l R_{li} x_l
                const MonomialBasis& from = bases[deg];
                const MonomialBasis& to = bases[deg + 1];
                next.assign(to.size(), Scalar(0));
                for (int t = 0; t < from.size(); ++t) {
                    if (near_zero(poly[t], 0.0)) continue;
                    std::vector<int> b = from.exponent(t);
                    for (int l = 0; l < k; ++l) {
                        if (near_zero(r(l, i), 0.0)) continue;
                        ++b[l];
                        next[to.index_of(b)] += poly[t] * r(l, i);
                        --b[l];
                    }
                }
                poly.swap(next);
                ++deg;
            }
        }
        for (int t = 0; t < top.size(); ++t) out(t, col) = poly[t];
    }
    return out;
}

template <class Scalar>
std::vector<Matrix<Scalar>> section_representation(const GroupAction<Scalar>& action, int m) {
    std::vector<Matrix<Scalar>> out;
    const int d = action.symbol().d();
    for (int g = 0; g < action.group().order(); ++g) {
        const Matrix<Scalar> s = polynomial_substitution(action.R(g), m);
        const Matrix<Scalar>& u = action.u_plus(g);
        Matrix<Scalar> kron = zeros<Scalar>(s.rows() * d, s.cols() * d);
        for (Eigen::Index i = 0; i < s.rows(); ++i)
            for (Eigen::Index j = 0; j < s.cols(); ++j)
                if (!near_zero(s(i, j), 0.0)) kron.block(i * d, j * d, d, d) = s(i, j) * u;
        out.push_back(std::move(kron));
    }
    return out;
}

std::vector<long> eigenvalue_window(int k, int m) {
    std::vector<long> w;
    for (long l = -m; l <= 0; ++l) w.push_back(l);
    for (long l = k - 1; l <= m + k - 2; ++l) w.push_back(l);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

long BruteSpectrum::multiplicity(long lambda) const {
    for (const auto& e : eigen)
        if (e.lambda == lambda) return e.mult;
    return 0;
}

namespace {

using modular::u64;

Error oracle_error(const std::string& msg, Error::Context ctx = {}) {
    return Error("oracle", "polyspace_oracle", msg, std::move(ctx));
}

Rational coord_l1(const Cyclotomic& x) {
    Rational s = 0;
    for (const auto& c : x.coefficients()) s += abs(c);
    return s;
}

// Upper bound for max_i sum_j |c_j| where x = sum_s sigma_s(x) w_{s,j}: the
// infinity norm of the inverse embedding matrix of Q(zeta_N).
double inverse_vandermonde_norm(int n) {
    if (n <= 2) return 1.0;
    std::vector<int> units;
    for (int a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(a);
    const int phi = static_cast<int>(units.size());
    ComplexMatrix v(phi, phi);
    for (int s = 0; s < phi; ++s)
        for (int i = 0; i < phi; ++i)
            v(s, i) = std::polar(1.0, 2.0 * std::numbers::pi * units[s] * i / n);
    const ComplexMatrix inv = v.inverse();
    return inv.cwiseAbs().rowwise().sum().maxCoeff() * 1.01 + 1e-6;
}

struct ElementData {
    ExactMatrix s;  // monomial part
    ExactMatrix u;  // fiber part
};

struct Csr {
    std::vector<long> ptr;
    std::vector<long> col;
    std::vector<u64> val;
};

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw Error("internal", "polyspace_oracle", "singular Vandermonde system");
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

// Certified spectrum of an exact sparse matrix Q. Proves prod_{l in W} (Q - l) = 0
// by modular matrix application with a CRT coefficient bound (so Q is
// diagonalizable with spectrum in W), then recovers multiplicities on each
// requested isotypic part from exact power traces tr(P_a Q^r), r < |W|.
std::vector<std::map<long, long>> certified_multiplicities(const std::vector<Eigen::Triplet<Cyclotomic>>& q, long n,
                                                           int d, const std::vector<long>& window,
                                                           const std::vector<ElementData>& elems,
                                                           const std::vector<std::vector<Cyclotomic>>& weights) {
    const std::size_t rcount = window.size();
    const std::size_t nalpha = elems.empty() ? 1 : weights.size();

    int order = 1;
    Integer den = 1;
    for (const auto& t : q) {
        order = std::lcm(order, t.value().order());
        den = boost::multiprecision::lcm(den, t.value().denominator());
    }
    for (const auto& e : elems) {
        for (Eigen::Index i = 0; i < e.s.size(); ++i) order = std::lcm(order, e.s.data()[i].order());
        for (Eigen::Index i = 0; i < e.u.size(); ++i) order = std::lcm(order, e.u.data()[i].order());
    }
    for (const auto& w : weights)
        for (const auto& x : w) order = std::lcm(order, x.order());

    std::vector<Eigen::Triplet<Cyclotomic>> qs;
    std::vector<Rational> row_l1(n, Rational(0));
    for (const auto& t : q) {
        const Cyclotomic v = t.value() * Cyclotomic(Rational(den));
        row_l1[t.row()] += coord_l1(v);
        qs.emplace_back(t.row(), t.col(), v);
    }
    const double dd = den.convert_to<double>();
    double max_row = 0.0;
    for (const auto& r : row_l1) max_row = std::max(max_row, r.convert_to<double>());
    long max_abs = 0;
    for (long l : window) max_abs = std::max(max_abs, std::labs(l));
    double log2_prod_bound = 0.0;
    for (long l : window) log2_prod_bound += std::log2(max_row + dd * std::labs(l) + 1.0);
    const double log2_coord = log2_prod_bound + std::log2(inverse_vandermonde_norm(order)) + 1.0;
    const double log2_trace =
        std::log2(static_cast<double>(n)) + static_cast<double>(rcount) * std::log2(dd * max_abs + 1.0) + 1.0;
    const double needed_bits = std::max(log2_coord, log2_trace) + 2.0;

    // characteristic polynomial of the window, scaled: prod (x - D l)
    std::vector<Integer> cpoly{1};
    for (long l : window) {
        std::vector<Integer> next(cpoly.size() + 1, 0);
        for (std::size_t i = 0; i < cpoly.size(); ++i) {
            next[i + 1] += cpoly[i];
            next[i] -= cpoly[i] * den * l;
        }
        cpoly.swap(next);
    }

    std::vector<std::vector<u64>> trace_res(nalpha * rcount);
    std::vector<u64> used_primes;
    double bits = 0.0;
    const auto pool = modular::primes_one_mod(order, 64);
    for (u64 p : pool) {
        if (bits >= needed_bits) break;
        std::vector<modular::Embedding> embs = modular::all_embeddings(p, order);
        // Projector data for the first embedding; skip primes dividing denominators.
        std::vector<std::vector<u64>> proj;
        try {
            if (!elems.empty()) {
                const auto& emb = embs.front();
                const long nm = n / d;
                for (std::size_t a = 0; a < nalpha; ++a) proj.emplace_back(static_cast<std::size_t>(n * n), 0);
                for (std::size_t g = 0; g < elems.size(); ++g) {
                    std::vector<u64> s(nm * nm), u(d * d);
                    for (long i = 0; i < nm; ++i)
                        for (long j = 0; j < nm; ++j) s[i * nm + j] = emb(elems[g].s(i, j));
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j) u[i * d + j] = emb(elems[g].u(i, j));
                    for (std::size_t a = 0; a < nalpha; ++a) {
                        const u64 w = emb(weights[a][g]);
                        if (w == 0) continue;
                        auto& pm = proj[a];
                        for (long i = 0; i < nm; ++i)
                            for (long j = 0; j < nm; ++j) {
                                const u64 sw = modular::mul_mod(s[i * nm + j], w, p);
                                if (sw == 0) continue;
                                for (int x = 0; x < d; ++x)
                                    for (int y = 0; y < d; ++y) {
                                        u64& dst = pm[(i * d + x) * n + j * d + y];
                                        dst = modular::add_mod(dst, modular::mul_mod(sw, u[x * d + y], p), p);
                                    }
                            }
                    }
                }
            }
        } catch (const std::domain_error&) {
            continue;
        }
        std::vector<std::vector<u64>> traces(nalpha, std::vector<u64>(rcount, 0));
        std::vector<u64> coef(cpoly.size());
        for (std::size_t i = 0; i < cpoly.size(); ++i) {
            Integer c = cpoly[i] % Integer(p);
            if (c < 0) c += p;
            coef[i] = c.convert_to<u64>();
        }
        for (std::size_t e = 0; e < embs.size(); ++e) {
            Csr csr;
            csr.ptr.assign(n + 1, 0);
            std::vector<std::vector<std::pair<long, u64>>> rows(n);
            for (const auto& t : qs) {
                const u64 v = embs[e](t.value());
                if (v) rows[t.row()].emplace_back(t.col(), v);
            }
            for (long i = 0; i < n; ++i) {
                csr.ptr[i + 1] = csr.ptr[i] + static_cast<long>(rows[i].size());
                for (auto& [c, v] : rows[i]) {
                    csr.col.push_back(c);
                    csr.val.push_back(v);
                }
            }
            std::vector<std::vector<u64>> kry(rcount + 1, std::vector<u64>(n));
            for (long c = 0; c < n; ++c) {
                std::fill(kry[0].begin(), kry[0].end(), 0);
                kry[0][c] = 1;
                for (std::size_t r = 0; r < rcount; ++r) {
                    const auto& v = kry[r];
                    auto& w = kry[r + 1];
                    for (long i = 0; i < n; ++i) {
                        u64 acc = 0;
                        for (long s = csr.ptr[i]; s < csr.ptr[i + 1]; ++s) acc = (acc + csr.val[s] * v[csr.col[s]]) % p;
                        w[i] = acc;
                    }
                }
                for (long i = 0; i < n; ++i) {
                    u64 acc = 0;
                    for (std::size_t r = 0; r <= rcount; ++r) acc = (acc + coef[r] * kry[r][i]) % p;
                    if (acc != 0)
                        throw oracle_error("spectrum is not integral in the admissible window or not diagonalizable",
                                           {{"prime", std::to_string(p)}, {"column", std::to_string(c)}});
                }
                if (e != 0) continue;
                for (std::size_t a = 0; a < nalpha; ++a) {
                    for (std::size_t r = 0; r < rcount; ++r) {
                        u64 acc;
                        if (elems.empty()) {
                            acc = kry[r][c];
                        } else {
                            acc = 0;
                            const u64* prow = proj[a].data() + c * n;
                            const auto& v = kry[r];
                            for (long i = 0; i < n; ++i)
                                if (prow[i]) acc = (acc + prow[i] * v[i]) % p;
                        }
                        traces[a][r] = (traces[a][r] + acc) % p;
                    }
                }
            }
        }
        for (std::size_t a = 0; a < nalpha; ++a)
            for (std::size_t r = 0; r < rcount; ++r) trace_res[a * rcount + r].push_back(traces[a][r]);
        used_primes.push_back(p);
        bits += std::log2(static_cast<double>(p));
    }
    if (bits < needed_bits) throw Error("internal", "polyspace_oracle", "not enough primes for certification");

    std::vector<std::vector<Rational>> vander(rcount, std::vector<Rational>(rcount));
    for (std::size_t r = 0; r < rcount; ++r)
        for (std::size_t j = 0; j < rcount; ++j) {
            Rational x = 1;
            for (std::size_t t = 0; t < r; ++t) x *= window[j];
            vander[r][j] = x;
        }
    std::vector<std::map<long, long>> out;
    for (std::size_t a = 0; a < nalpha; ++a) {
        std::vector<Rational> rhs(rcount);
        Integer dpow = 1;
        for (std::size_t r = 0; r < rcount; ++r) {
            rhs[r] = Rational(modular::crt(trace_res[a * rcount + r], used_primes), dpow);
            dpow *= den;
        }
        const auto x = solve_rational(vander, rhs);
        std::map<long, long> mult;
        for (std::size_t j = 0; j < rcount; ++j) {
            if (boost::multiprecision::denominator(x[j]) != 1 || x[j] < 0)
                throw oracle_error("trace data yield a non-integral multiplicity",
                                   {{"lambda", std::to_string(window[j])}, {"value", to_string(x[j])}});
            if (x[j] != 0) mult[window[j]] = boost::multiprecision::numerator(x[j]).convert_to<long>();
        }
        out.push_back(std::move(mult));
    }
    return out;
}

BruteSpectrum to_spectrum(int m, long dim, const std::map<long, long>& mult, long divisor, bool certified) {
    BruteSpectrum s;
    s.m = m;
    s.dim = 0;
    s.certified = certified;
    for (const auto& [l, c] : mult) {
        if (c % divisor != 0)
            throw oracle_error("isotypic multiplicity not divisible by the representation degree",
                               {{"lambda", std::to_string(l)}});
        if (c) s.eigen.push_back({l, c / divisor});
        s.dim += c;
    }
    (void)dim;
    return s;
}

std::map<long, long> rounded_eigenvalues(const ComplexMatrix& q, int k, int m, double tol) {
    std::map<long, long> mult;
    if (q.rows() == 0) return mult;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(q, false);
    if (es.info() != Eigen::Success) throw oracle_error("eigensolver failed");
    const double scale = std::max(1.0, static_cast<double>(m + k));
    const auto window = eigenvalue_window(k, m);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const Complex z = es.eigenvalues()(i);
        const long l = std::lround(z.real());
        if (std::abs(z - Complex(static_cast<double>(l), 0.0)) > tol * scale * 100)
            throw oracle_error("non-integer eigenvalue", {{"value", std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i"}});
        if (!std::binary_search(window.begin(), window.end(), l))
            throw oracle_error("eigenvalue outside the admissible window", {{"lambda", std::to_string(l)}});
        ++mult[l];
    }
    return mult;
}

}  // namespace

template <>
BruteSpectrum brute_spectrum<Cyclotomic>(const CliffordSymbol<Cyclotomic>& sym, int m, double) {
    const long n = monomial_count(sym.k(), m) * sym.d();
    const auto mult = certified_multiplicities(spherical_entries(sym, m), n, sym.d(), eigenvalue_window(sym.k(), m), {}, {});
    auto s = to_spectrum(m, n, mult.front(), 1, true);
    if (s.dim != n) throw oracle_error("multiplicities do not sum to dim P_m");
    return s;
}

template <>
BruteSpectrum brute_spectrum<Complex>(const CliffordSymbol<Complex>& sym, int m, double tol) {
    const auto spec = spherical_matrix(sym, m);
    auto s = to_spectrum(m, spec.matrix.rows(), rounded_eigenvalues(spec.matrix, sym.k(), m, tol), 1, false);
    return s;
}

template <>
std::vector<BruteSpectrum> equivariant_brute_spectra<Cyclotomic>(const GroupAction<Cyclotomic>& action,
                                                                const CharacterTable& table, int m, double) {
    const auto& sym = action.symbol();
    const FiniteGroup& g = action.group();
    if (table.group().order() != g.order()) throw Error("structural", "polyspace_oracle", "character table belongs to another group");
    const long n = monomial_count(sym.k(), m) * sym.d();
    std::vector<ElementData> elems;
    for (int x = 0; x < g.order(); ++x) elems.push_back({polynomial_substitution(action.R(x), m), action.u_plus(x)});
    std::vector<std::vector<Cyclotomic>> weights;
    for (int a = 0; a < table.size(); ++a) {
        const Cyclotomic scale = Cyclotomic(static_cast<long>(table.degree(a))) / Cyclotomic(static_cast<long>(g.order()));
        std::vector<Cyclotomic> w;
        for (int x = 0; x < g.order(); ++x) w.push_back(scale * conj(table.character(a)[x]));
        weights.push_back(std::move(w));
    }
    const auto mults = certified_multiplicities(spherical_entries(sym, m), n, sym.d(), eigenvalue_window(sym.k(), m), elems, weights);
    std::vector<BruteSpectrum> out;
    long total = 0;
    for (int a = 0; a < table.size(); ++a) {
        out.push_back(to_spectrum(m, n, mults[a], table.degree(a), true));
        total += out.back().dim;
    }
    if (total != n) throw oracle_error("isotypic dimensions do not sum to dim P_m");
    return out;
}

template <>
std::vector<BruteSpectrum> equivariant_brute_spectra<Complex>(const GroupAction<Complex>& action,
                                                             const CharacterTable& table, int m, double tol) {
    const auto& sym = action.symbol();
    const auto rep = section_representation(action, m);
    const ComplexMatrix q = spherical_matrix(sym, m).matrix;
    std::vector<BruteSpectrum> out;
    for (int a = 0; a < table.size(); ++a) {
        const ComplexMatrix p = isotypic_projector<Complex>(rep, table, a, false);
        Eigen::JacobiSVD<ComplexMatrix> svd(p, Eigen::ComputeFullU);
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-6) ++r;
        const ComplexMatrix y = svd.matrixU().leftCols(r);
        const ComplexMatrix restricted = y.adjoint() * q * y;
        out.push_back(to_spectrum(m, r, rounded_eigenvalues(restricted, sym.k(), m, tol), table.degree(a), false));
    }
    return out;
}

template <class Scalar>
BruteSpectrum equivariant_brute_spectrum(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha,
                                         int m, double tol) {
    if (alpha < 0 || alpha >= table.size()) throw Error("structural", "polyspace_oracle", "irreducible not in the table");
    return equivariant_brute_spectra(action, table, m, tol)[alpha];
}

template ExactMatrix laplacian_matrix(const CliffordSymbol<Cyclotomic>&, int);
template ComplexMatrix laplacian_matrix(const CliffordSymbol<Complex>&, int);
template ExactMatrix b_multiplication(const CliffordSymbol<Cyclotomic>&, int);
template ComplexMatrix b_multiplication(const CliffordSymbol<Complex>&, int);
template ExactMatrix norm_squared_multiplication<Cyclotomic>(int, int, int);
template ComplexMatrix norm_squared_multiplication<Complex>(int, int, int);
template HarmonicSpace<Cyclotomic> harmonic_space(const CliffordSymbol<Cyclotomic>&, int, double);
template HarmonicSpace<Complex> harmonic_space(const CliffordSymbol<Complex>&, int, double);
template ExactMatrix polynomial_substitution(const ExactMatrix&, int);
template ComplexMatrix polynomial_substitution(const ComplexMatrix&, int);
template std::vector<ExactMatrix> section_representation(const GroupAction<Cyclotomic>&, int);
template std::vector<ComplexMatrix> section_representation(const GroupAction<Complex>&, int);
template BruteSpectrum equivariant_brute_spectrum(const GroupAction<Cyclotomic>&, const CharacterTable&, int, int, double);
template BruteSpectrum equivariant_brute_spectrum(const GroupAction<Complex>&, const CharacterTable&, int, int, double);

}  // namespace equispectra
