#include "equispectra/eta_engine.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "equispectra/error.hpp"

namespace equispectra {

namespace mp = boost::multiprecision;
using Real = mp::mpfr_float;

namespace {

Error eta_error(const std::string& code, const std::string& msg, std::map<std::string, std::string> ctx = {}) {
    return Error(code, "eta_engine", msg, std::move(ctx));
}

Integer binom(long n, long r) {
    if (r < 0 || n < r) return 0;
    Integer c = 1;
    for (long i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

// B_0..B_n with B_1 = -1/2
std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binom(m + 1, j)) * b[j];
        b[m] = -s / (m + 1);
    }
    return b;
}

long period_of(const SpectrumTable& spec) { return std::lcm<long>(spec.gf_plus.period, spec.gf_minus.period); }

long default_start(const SpectrumTable& spec) { return 2L * (spec.k + 1) * period_of(spec); }

// Solve the square system v c = rhs exactly (v invertible).
std::vector<Rational> solve(std::vector<std::vector<Rational>> v, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && v[p][c] == 0) ++p;
        if (p == n) throw eta_error("internal", "singular interpolation system");
        std::swap(v[p], v[c]);
        std::swap(rhs[p], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || v[r][c] == 0) continue;
            const Rational f = v[r][c] / v[c][c];
            for (std::size_t j = c; j < n; ++j) v[r][j] -= f * v[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= v[i][i];
    return rhs;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Real to_real(const Rational& q) {
    return Real(mp::numerator(q).str()) / Real(mp::denominator(q).str());
}

// Hurwitz zeta(sigma, a), sigma != 1, a > 0, by Euler-Maclaurin with cutoff q.
Real hurwitz(const Real& sigma, const Real& a, const std::vector<Rational>& bern, int q, int terms) {
    Real s = 0;
    for (int i = 0; i < q; ++i) s += mp::pow(Real(i) + a, -sigma);
    const Real x = Real(q) + a;
    s += mp::pow(x, 1 - sigma) / (sigma - 1);
    s += mp::pow(x, -sigma) / 2;
    Real rising = sigma;  // (sigma)_{2p-1}
    Real fact = 2;        // (2p)!
    Real xp = mp::pow(x, -sigma - 1);
    for (int p = 1; p <= terms; ++p) {
        if (p > 1) {
            rising *= (sigma + (2 * p - 3)) * (sigma + (2 * p - 2));
            fact *= Real(2 * p - 1) * Real(2 * p);
            xp /= x * x;
        }
        s += to_real(bern[2 * p]) / fact * rising * xp;
    }
    return s;
}

}  // namespace

int working_digits(int fallback) {
    if (const char* env = std::getenv("EQUISPECTRA_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 16 || v > 2000)
            throw eta_error("validation", "EQUISPECTRA_PRECISION must be an integer in [16, 2000]", {{"value", env}});
        return static_cast<int>(v);
    }
    return fallback;
}

Rational eta_coefficient(const SpectrumTable& spec, long n) {
    if (n < 1) throw eta_error("domain", "eta coefficients start at n = 1");
    const long j = n - (spec.k - 1);
    const long pos = j >= 0 ? spec.mu_plus(j) : 0;
    return Rational(pos - spec.mu_minus(n));
}

Rational QuasiPolynomial::operator()(long n) const {
    const auto& c = poly[static_cast<std::size_t>(((n % period) + period) % period)];
    Rational s = 0;
    Rational x = 1;
    for (const auto& ci : c) {
        s += ci * x;
        x *= n;
    }
    return s;
}

std::optional<QuasiPolynomial> fit_eta_coefficients(const SpectrumTable& spec, long start) {
    const long l = period_of(spec);
    const int deg = std::max(spec.k, 1);  // number of coefficients
    QuasiPolynomial qp;
    qp.period = static_cast<int>(l);
    qp.start = start < 0 ? default_start(spec) : start;
    qp.poly.resize(l);
    for (long r = 0; r < l; ++r) {
        const long n0 = qp.start + (((r - qp.start) % l) + l) % l;
        std::vector<std::vector<Rational>> v;
        std::vector<Rational> rhs;
        for (int t = 0; t < deg; ++t) {
            const long n = n0 + t * l;
            std::vector<Rational> row;
            Rational x = 1;
            for (int i = 0; i < deg; ++i) {
                row.push_back(x);
                x *= n;
            }
            v.push_back(std::move(row));
            rhs.push_back(eta_coefficient(spec, n));
        }
        qp.poly[r] = solve(std::move(v), std::move(rhs));
        while (!qp.poly[r].empty() && qp.poly[r].back() == 0) qp.poly[r].pop_back();
    }
    const long verify = 2L * (spec.k + 1) * l;
    for (long n = qp.start; n < qp.start + verify; ++n)
        if (qp(n) != eta_coefficient(spec, n)) return std::nullopt;
    return qp;
}

Rational bernoulli_polynomial(int n, const Rational& x) {
    const auto b = bernoulli_numbers(n);
    Rational s = 0;
    Rational xp = 1;
    for (int j = n; j >= 0; --j) {
        s += Rational(binom(n, j)) * b[j] * xp;
        xp *= x;
    }
    return s;
}

long kernel_dim(const SpectrumTable& spec) { return spec.multiplicity(0); }

EtaReport eta_invariant(const SpectrumTable& spec, long start) {
    const auto qp = fit_eta_coefficients(spec, start);
    if (!qp) {
        EtaReport r = numeric_eta_oracle(spec, 0, start);
        r.warning = "multiplicities failed the quasi-polynomial check; numeric continuation used";
        r.low_confidence = true;
        return r;
    }
    const long l = qp->period;
    Rational eta = 0;
    for (long n = 1; n < qp->start; ++n) eta += eta_coefficient(spec, n);
    // sum_{q>=0} (n_r + qL)^{i-s} = L^{i-s} zeta(s-i, n_r/L); at s = 0 this is -L^i B_{i+1}(n_r/L)/(i+1)
    for (long r = 0; r < l; ++r) {
        const long n0 = qp->start + (((r - qp->start) % l) + l) % l;
        const Rational a(n0, l);
        Rational lp = 1;
        for (std::size_t i = 0; i < qp->poly[r].size(); ++i) {
            if (qp->poly[r][i] != 0)
                eta -= qp->poly[r][i] * lp * bernoulli_polynomial(static_cast<int>(i) + 1, a) / (static_cast<long>(i) + 1);
            lp *= l;
        }
    }
    EtaReport rep;
    rep.alpha = spec.alpha;
    rep.exact = eta;
    rep.value = to_double(eta);
    rep.err = 0.0;
    rep.h = kernel_dim(spec);
    rep.method = "hurwitz-exact";
    rep.window = qp->start - 1;
    return rep;
}

EtaReport numeric_eta_oracle(const SpectrumTable& spec, int digits, long start) {
    if (digits <= 0) digits = working_digits();
    auto qp = fit_eta_coefficients(spec, start);
    // past the materialized table the multiplicities come straight from the generating functions
    if (!qp && start < 0) qp = fit_eta_coefficients(spec, std::max<long>(default_start(spec), spec.lambda_max + spec.k + 1));
    if (!qp) throw eta_error("inconsistent", "no quasi-polynomial window for the numeric continuation", {{"alpha", spec.alpha}});
    const unsigned saved = Real::default_precision();
    Real::default_precision(static_cast<unsigned>(digits + 10));

    const int cutoff = 2 * digits + 20;
    const int terms = digits;
    const auto bern = bernoulli_numbers(2 * terms);
    const long l = qp->period;

    std::vector<Rational> prefix;
    for (long n = 1; n < qp->start; ++n) prefix.push_back(eta_coefficient(spec, n));

    auto eta_at = [&](const Real& s) {
        Real v = 0;
        for (long n = 1; n < qp->start; ++n)
            if (prefix[n - 1] != 0) v += to_real(prefix[n - 1]) * mp::pow(Real(n), -s);
        for (long r = 0; r < l; ++r) {
            const long n0 = qp->start + (((r - qp->start) % l) + l) % l;
            const Real a = Real(n0) / Real(l);
            for (std::size_t i = 0; i < qp->poly[r].size(); ++i) {
                if (qp->poly[r][i] == 0) continue;
                const Real sig = s - Real(static_cast<long>(i));
                v += to_real(qp->poly[r][i]) * mp::pow(Real(l), -sig) * hurwitz(sig, a, bern, cutoff, terms);
            }
        }
        return v;
    };

    // Neville tableau on s_i = s0 2^{-i}, extrapolated to s = 0
    const int npts = 14;
    const Real s0 = Real(1) / 2;
    std::vector<Real> xs, t;
    Real prev_diag = 0, diag = 0, err = 0;
    for (int i = 0; i < npts; ++i) {
        xs.push_back(s0 / mp::pow(Real(2), i));
        t.push_back(eta_at(xs.back()));
        for (int j = i - 1; j >= 0; --j)
            t[j] = t[j + 1] + (t[j + 1] - t[j]) * xs[i] / (xs[j] - xs[i]);
        prev_diag = diag;
        diag = t[0];
        if (i > 0) err = mp::abs(diag - prev_diag);
    }
    EtaReport rep;
    rep.alpha = spec.alpha;
    rep.value = diag.convert_to<double>();
    rep.err = std::max(err.convert_to<double>(), 1e-15);
    rep.h = kernel_dim(spec);
    rep.method = "numeric-oracle";
    rep.window = qp->start - 1;
    if (rep.err > 1e-8) {
        rep.low_confidence = true;
        rep.warning = "extrapolation did not converge below 1e-8";
    }
    Real::default_precision(saved);
    return rep;
}

namespace {

long count_of(const Cyclotomic& tr, int deg) {
    if (!tr.is_rational()) throw eta_error("inconsistent", "projector trace is not rational");
    const Rational q = tr.rational_value() / deg;
    if (mp::denominator(q) != 1) throw eta_error("inconsistent", "projector rank is not a multiple of the degree");
    return mp::numerator(q).convert_to<long>();
}

long count_of(const Complex& tr, int deg) {
    const double v = tr.real() / deg;
    if (std::abs(tr - std::round(tr.real())) > 1e-8 || std::abs(v - std::round(v)) > 1e-8)
        throw eta_error("inconsistent", "projector rank is not a multiple of the degree (float path)");
    return std::lround(v);
}

}  // namespace

template <class Scalar>
Codim1Eta codim1_eta_h(const CharacterTable& table, const std::vector<Matrix<Scalar>>& fiber_plus,
                       const std::vector<int>& orientation, int beta) {
    const FiniteGroup& g = table.group();
    if (static_cast<int>(orientation.size()) != g.order())
        throw eta_error("structural", "orientation needs one sign per group element");
    bool nontrivial = false;
    for (int x = 0; x < g.order(); ++x) {
        if (orientation[x] != 1 && orientation[x] != -1) throw eta_error("structural", "orientation values must be +-1");
        if (orientation[x] == -1) nontrivial = true;
        for (int y = 0; y < g.order(); ++y)
            if (orientation[g.mul(x, y)] != orientation[x] * orientation[y])
                throw eta_error("structural", "orientation is not a homomorphism to {+-1}");
    }
    if (!nontrivial) throw eta_error("structural", "no orientation-reversing coset: the kernel must have index 2");
    if (beta < 0 || beta >= table.size()) throw eta_error("structural", "irreducible not in the table");

    std::vector<Cyclotomic> bar = table.character(beta);
    for (int x = 0; x < g.order(); ++x)
        if (orientation[x] == -1) bar[x] = -bar[x];
    const int beta_bar = table.find(bar);
    if (beta_bar < 0) throw eta_error("inconsistent", "twisted character is not in the table");

    const int deg = table.degree(beta);
    const long h = count_of(trace<Scalar>(isotypic_projector(fiber_plus, table, beta)), deg);
    const long eta = count_of(trace<Scalar>(isotypic_projector(fiber_plus, table, beta_bar)), deg);
    return {h, eta, beta_bar};
}

template Codim1Eta codim1_eta_h(const CharacterTable&, const std::vector<ExactMatrix>&, const std::vector<int>&, int);
template Codim1Eta codim1_eta_h(const CharacterTable&, const std::vector<ComplexMatrix>&, const std::vector<int>&, int);

}  // namespace equispectra
