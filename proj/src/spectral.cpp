#include "equispectra/spectral.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "equispectra/error.hpp"

namespace equispectra {

namespace {

Integer binomial(long n, long r) {
    if (r < 0 || n < r) return 0;
    Integer c = 1;
    for (long i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

long to_long(const Rational& q, const char* what) {
    if (boost::multiprecision::denominator(q) != 1)
        throw Error("inconsistent", "spectral", std::string(what) + " is not an integer: " + to_string(q));
    return boost::multiprecision::numerator(q).convert_to<long>();
}

long round_count(const Cyclotomic& x, double) {
    if (!x.is_rational()) throw Error("inconsistent", "spectral", "isotypic dimension is not rational: " + x.to_string());
    return to_long(x.rational_value(), "isotypic dimension");
}

long round_count(const Complex& x, double scale) {
    const double r = std::round(x.real());
    if (std::abs(x - Complex(r, 0.0)) > 1e-8 * std::max(1.0, scale))
        throw Error("inconsistent", "spectral", "isotypic dimension is not an integer (float path)",
                    {{"value", std::to_string(x.real()) + "+" + std::to_string(x.imag()) + "i"}});
    return static_cast<long>(r);
}

Cyclotomic as_scalar(const Cyclotomic& x, Cyclotomic) { return x; }
Complex as_scalar(const Cyclotomic& x, Complex) { return x.to_complex(); }

}  // namespace

long full_multiplicity(int k, int d, int j) {
    if (j < 0) throw Error("domain", "spectral", "j must be nonnegative");
    if (k == 1) return j == 0 ? d : 0;
    return static_cast<long>(d) * binomial(j + k - 2, j).convert_to<long>();
}

Rational RationalGF::coefficient(long m) const {
    Rational s = 0;
    for (long i = m % period; i <= m && i < static_cast<long>(num.size()); i += period) {
        if (num[i] == 0) continue;
        s += num[i] * Rational(binomial((m - i) / period + power - 1, power - 1));
    }
    return s;
}

std::vector<Rational> RationalGF::coefficients(long count) const {
    std::vector<Rational> out;
    for (long m = 0; m < count; ++m) out.push_back(coefficient(m));
    return out;
}

std::string RationalGF::denominator_string() const {
    return "(1-t^" + std::to_string(period) + ")^" + std::to_string(power);
}

template <class Scalar>
std::vector<Scalar> det_one_minus_t(const Matrix<Scalar>& m) {
    const long k = m.rows();
    // charpoly c_k x^k + ... + c_0 of m; det(I - t m) = sum_i c_{k-i} t^i
    std::vector<Scalar> c(k + 1, Scalar(0));
    c[k] = Scalar(1);
    Matrix<Scalar> mi = zeros<Scalar>(k, k);
    for (long i = 1; i <= k; ++i) {
        mi = m * mi;
        for (long r = 0; r < k; ++r) mi(r, r) += c[k - i + 1];
        const Matrix<Scalar> am = m * mi;
        c[k - i] = -trace<Scalar>(am) / Scalar(i);
    }
    std::vector<Scalar> out(k + 1);
    for (long i = 0; i <= k; ++i) out[i] = c[k - i];
    return out;
}

template <class Scalar>
std::vector<long> isotypic_dims(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha, int m_max,
                                Fiber fiber) {
    const FiniteGroup& g = action.group();
    if (table.group().order() != g.order()) throw Error("structural", "spectral", "character table belongs to another group");
    if (alpha < 0 || alpha >= table.size()) throw Error("structural", "spectral", "irreducible not in the table");
    std::vector<Scalar> acc(m_max + 1, Scalar(0));
    for (int h = 0; h < g.order(); ++h) {
        const Cyclotomic cchi = conj(table.character(alpha)[h]);
        if (cchi.is_zero()) continue;
        const auto& u = fiber == Fiber::plus ? action.u_plus(h) : action.u_minus(h);
        const Scalar w = as_scalar(cchi, Scalar(0)) * trace<Scalar>(u);
        const Matrix<Scalar> rinv = conj_transpose(action.R(h));
        const auto e = det_one_minus_t<Scalar>(rinv);
        // power series 1 / det(I - t R^{-1})
        std::vector<Scalar> f(m_max + 1, Scalar(0));
        f[0] = Scalar(1);
        for (int m = 1; m <= m_max; ++m) {
            Scalar s(0);
            for (int i = 1; i <= std::min<int>(m, static_cast<int>(e.size()) - 1); ++i) s += e[i] * f[m - i];
            f[m] = -s;
        }
        for (int m = 0; m <= m_max; ++m) acc[m] += w * f[m];
    }
    std::vector<long> out;
    const double scale = static_cast<double>(action.symbol().d()) * static_cast<double>(monomial_count(action.symbol().k(), m_max));
    for (int m = 0; m <= m_max; ++m) {
        const long v = round_count(acc[m] / Scalar(static_cast<long>(g.order())), scale);
        if (v < 0) throw Error("inconsistent", "spectral", "negative isotypic dimension");
        out.push_back(v);
    }
    return out;
}

template <class Scalar>
RationalGF molien_gf(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha, Fiber fiber) {
    RationalGF gf;
    gf.period = action.group().exponent();
    gf.power = action.symbol().k();
    const long len = static_cast<long>(gf.period) * gf.power;
    const auto dims = isotypic_dims(action, table, alpha, static_cast<int>(len - 1), fiber);
    // N = (series) * (1 - t^L)^k truncated below degree kL
    std::vector<Rational> den(len, Rational(0));
    for (int q = 0; q <= gf.power && q * gf.period < len; ++q) {
        Rational c(binomial(gf.power, q));
        den[q * gf.period] = (q % 2 == 0) ? c : Rational(-c);
    }
    gf.num.assign(len, Rational(0));
    for (long i = 0; i < len; ++i)
        for (long j = 0; i + j < len; ++j)
            if (den[j] != 0) gf.num[i + j] += Rational(dims[i]) * den[j];
    while (gf.num.size() > 1 && gf.num.back() == 0) gf.num.pop_back();
    return gf;
}

RationalGF full_gf(int k, int d) {
    RationalGF gf;
    gf.period = 1;
    gf.power = k;
    gf.num = {Rational(d)};
    return gf;
}

long SpectrumTable::dim_plus(long m) const { return m < 0 ? 0 : to_long(gf_plus.coefficient(m), "dimension"); }
long SpectrumTable::dim_minus(long m) const { return m < 0 ? 0 : to_long(gf_minus.coefficient(m), "dimension"); }

long SpectrumTable::mu_minus(long j) const {
    if (j < static_cast<long>(a.size())) return a[j];
    return dim_plus(j) - dim_minus(j - 1);
}

long SpectrumTable::mu_plus(long j) const {
    if (j < static_cast<long>(b.size())) return b[j];
    return dim_minus(j) - dim_plus(j - 1);
}

long SpectrumTable::h(long j) const { return mu_minus(j) + (j >= 1 ? mu_plus(j - 1) : 0); }

long SpectrumTable::multiplicity(long lambda) const {
    long s = 0;
    if (lambda <= 0) s += mu_minus(-lambda);
    if (lambda >= k - 1) s += mu_plus(lambda - (k - 1));
    return s;
}

std::vector<Eigenpair> SpectrumTable::eigenvalues() const {
    std::vector<Eigenpair> out;
    for (long l = -lambda_max; l <= lambda_max; ++l) {
        const long c = multiplicity(l);
        if (c) out.push_back({l, c});
    }
    return out;
}

std::vector<Eigenpair> SpectrumTable::tower(int m) const {
    std::map<long, long> acc;
    for (int i = m; i >= 0; i -= 2) {
        acc[-i] += mu_minus(i);
        if (i >= 1) acc[i + k - 2] += mu_plus(i - 1);
    }
    std::vector<Eigenpair> out;
    for (const auto& [l, c] : acc)
        if (c) out.push_back({l, c});
    return out;
}

namespace {

void materialize(SpectrumTable& t) {
    t.a.clear();
    t.b.clear();
    for (long j = 0; j <= t.lambda_max; ++j) {
        const long a = t.dim_plus(j) - t.dim_minus(j - 1);
        const long b = t.dim_minus(j) - t.dim_plus(j - 1);
        if (a < 0 || b < 0)
            throw Error("inconsistent", "spectral", "negative multiplicity: the action does not commute with the symbol",
                        {{"alpha", t.alpha}, {"j", std::to_string(j)}});
        t.a.push_back(a);
        t.b.push_back(b);
    }
}

}  // namespace

SpectrumTable full_spectrum(int k, int d, int lambda_max) {
    SpectrumTable t;
    t.k = k;
    t.d = d;
    t.lambda_max = lambda_max;
    t.gf_plus = full_gf(k, d);
    t.gf_minus = full_gf(k, d);
    materialize(t);
    return t;
}

template <class Scalar>
SpectrumTable equivariant_spectrum(const GroupAction<Scalar>& action, const CharacterTable& table, int alpha,
                                   int lambda_max) {
    SpectrumTable t;
    t.k = action.symbol().k();
    t.d = action.symbol().d();
    t.alpha = table.name(alpha);
    t.alpha_degree = table.degree(alpha);
    t.lambda_max = lambda_max;
    t.gf_plus = molien_gf(action, table, alpha, Fiber::plus);
    t.gf_minus = molien_gf(action, table, alpha, Fiber::minus);
    materialize(t);
    return t;
}

template std::vector<Cyclotomic> det_one_minus_t(const ExactMatrix&);
template std::vector<Complex> det_one_minus_t(const ComplexMatrix&);
template std::vector<long> isotypic_dims(const GroupAction<Cyclotomic>&, const CharacterTable&, int, int, Fiber);
template std::vector<long> isotypic_dims(const GroupAction<Complex>&, const CharacterTable&, int, int, Fiber);
template RationalGF molien_gf(const GroupAction<Cyclotomic>&, const CharacterTable&, int, Fiber);
template RationalGF molien_gf(const GroupAction<Complex>&, const CharacterTable&, int, Fiber);
template SpectrumTable equivariant_spectrum(const GroupAction<Cyclotomic>&, const CharacterTable&, int, int);
template SpectrumTable equivariant_spectrum(const GroupAction<Complex>&, const CharacterTable&, int, int);

}  // namespace equispectra
