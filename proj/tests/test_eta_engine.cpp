#include "doctest.h"

#include <cmath>

#include "equispectra/eta_engine.hpp"
#include "helpers.hpp"

using namespace equispectra;
using namespace testing;

namespace {

void check_agree(const SpectrumTable& s) {
    const auto ex = eta_invariant(s);
    const auto nu = numeric_eta_oracle(s);
    REQUIRE(ex.exact.has_value());
    CHECK(ex.method == "hurwitz-exact");
    CHECK(nu.method == "numeric-oracle");
    CHECK_FALSE(nu.low_confidence);
    CHECK(std::abs(ex.value - nu.value) < 1e-6);
    CHECK(ex.h == nu.h);
}

}  // namespace

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_polynomial(0, Rational(3, 7)) == 1);
    CHECK(bernoulli_polynomial(1, 0) == Rational(-1, 2));
    const Rational x(2, 5);
    CHECK(bernoulli_polynomial(2, x) == x * x - x + Rational(1, 6));
    CHECK(bernoulli_polynomial(3, x) == x * x * x - Rational(3, 2) * x * x + x / 2);
    // B_n(1 - x) = (-1)^n B_n(x)
    for (int n = 0; n <= 8; ++n)
        CHECK(bernoulli_polynomial(n, 1 - x) == (n % 2 ? Rational(-1) : Rational(1)) * bernoulli_polynomial(n, x));
}

TEST_CASE("trivial-group eta values") {
    // Cauchy-Riemann: sum n^{-s} - sum n^{-s}
    const auto cr = full_spectrum(2, 1);
    CHECK(*eta_invariant(cr).exact == 0);
    CHECK(std::abs(numeric_eta_oracle(cr).value) < 1e-8);

    // k = 3: mu_{-j} = d(j+1), eigenvalue j+2 carries d(j+1); eta(s) = -2d zeta(s)
    for (int d : {1, 2, 4}) {
        const auto t = full_spectrum(3, d);
        CHECK(*eta_invariant(t).exact == d);
        CHECK(std::abs(numeric_eta_oracle(t).value - d) < 1e-6);
    }
    // k = 4: c_n = 8 C(n-1,2) - 8 C(n+2,2) = -24n, eta = -24 zeta(-1)
    CHECK(*eta_invariant(full_spectrum(4, 8)).exact == 2);
}

TEST_CASE("kernel dimensions") {
    CHECK(kernel_dim(full_spectrum(3, 2)) == 2);
    CHECK(kernel_dim(equivariant_spectrum(GroupAction<Cyclotomic>::trivial(de_rham_symbol(2)), cyclic_characters(1), 0)) ==
          2);
    // Z_2 with fiber = sign
    const auto z2 = cyclic_characters(2);
    const auto act = GroupAction<Cyclotomic>::create(cauchy_riemann(), z2.group(), {1}, {-identity<Cyclotomic>(2)},
                                                     {mat({{-1L}})}, {mat({{1L}})});
    CHECK(kernel_dim(equivariant_spectrum(act, z2, 0)) == 0);
    CHECK(kernel_dim(equivariant_spectrum(act, z2, 1)) == 1);
}

TEST_CASE("de Rham eta") {
    const auto t1 = cyclic_characters(1);
    const auto z2 = cyclic_characters(2);
    const auto dr2 = de_rham_symbol(2);
    CHECK(*eta_invariant(equivariant_spectrum(GroupAction<Cyclotomic>::trivial(dr2), t1, 0)).exact == 0);
    for (int a = 0; a < 2; ++a) CHECK(*eta_invariant(equivariant_spectrum(antipodal(dr2), z2, a)).exact == 0);

    // k = 3, 4: the S+ spectrum is not symmetric. By hand c_n = -8 (k = 3, d = 4) and
    // c_n = -24n (k = 4, d = 8), so eta = -8 zeta(0) = 4 and -24 zeta(-1) = 2.
    const Rational hand[] = {4, 2};
    for (int k = 3; k <= 4; ++k) {
        const auto dr = de_rham_symbol(k);
        const auto full = *eta_invariant(equivariant_spectrum(GroupAction<Cyclotomic>::trivial(dr), t1, 0)).exact;
        CHECK(full == hand[k - 3]);
        Rational sum = 0;
        for (int a = 0; a < 2; ++a) {
            const auto s = equivariant_spectrum(antipodal(dr), z2, a);
            check_agree(s);
            sum += *eta_invariant(s).exact;
        }
        CHECK(sum == full);
    }
}

TEST_CASE("exact and numeric continuations agree") {
    for (int p : {3, 5}) {
        const auto t = cyclic_characters(p);
        for (long fp : {0L, 1L}) {
            const auto act = cr_rotation(p, fp);
            for (int a = 0; a < p; ++a) check_agree(equivariant_spectrum(act, t, a));
        }
    }
    check_agree(full_spectrum(3, 2));
}

TEST_CASE("isotypic eta values add up to the full eta") {
    const auto t = cyclic_characters(5);
    const auto act = cr_rotation(5, 2);
    Rational sum = 0;
    for (int a = 0; a < 5; ++a) sum += *eta_invariant(equivariant_spectrum(act, t, a)).exact;
    CHECK(sum == *eta_invariant(full_spectrum(2, 1)).exact);

    const auto z2 = cyclic_characters(2);
    const auto p = pauli();
    // x -> -x: U^- A_i = -A_i U^+, so U^+ = I, U^- = -I
    const auto anti = antipodal(p);
    Rational s2 = 0;
    for (int a = 0; a < 2; ++a) s2 += *eta_invariant(equivariant_spectrum(anti, z2, a)).exact;
    CHECK(s2 == 2);
}

TEST_CASE("quasi-polynomial fit and fallback") {
    const auto t = equivariant_spectrum(cr_rotation(3), cyclic_characters(3), 1);
    const auto qp = fit_eta_coefficients(t);
    REQUIRE(qp.has_value());
    CHECK(qp->period == 3);
    for (long n = qp->start; n < qp->start + 40; ++n) CHECK((*qp)(n) == eta_coefficient(t, n));

    auto broken = full_spectrum(2, 1);
    broken.a[8] += 1;  // inside the verification window
    CHECK_FALSE(fit_eta_coefficients(broken).has_value());
    const auto r = eta_invariant(broken);
    CHECK(r.method == "numeric-oracle");
    CHECK_FALSE(r.exact.has_value());
    CHECK_FALSE(r.warning.empty());
    // one extra eigenvalue -8: eta = -1
    CHECK(std::abs(r.value + 1) < 1e-6);
}

TEST_CASE("codimension one") {
    const auto z2 = cyclic_characters(2);
    const std::vector<int> reflect{1, -1};
    const std::vector<ExactMatrix> trivial_fiber{identity<Cyclotomic>(3), identity<Cyclotomic>(3)};
    const std::vector<ExactMatrix> sign_fiber{identity<Cyclotomic>(3), -identity<Cyclotomic>(3)};
    const auto a = codim1_eta_h(z2, trivial_fiber, reflect, 0);
    CHECK(a.h == 3);
    CHECK(a.eta == 0);
    CHECK(a.beta_bar == 1);
    const auto b = codim1_eta_h(z2, sign_fiber, reflect, 0);
    CHECK(b.h == 0);
    CHECK(b.eta == 3);
    CHECK_THROWS_AS(codim1_eta_h(z2, trivial_fiber, std::vector<int>{1, 1}, 0), Error);
    const auto z3 = cyclic_characters(3);
    const std::vector<ExactMatrix> f3(3, identity<Cyclotomic>(1));
    CHECK_THROWS_AS(codim1_eta_h(z3, f3, std::vector<int>{1, -1, -1}, 0), Error);

    // beta-bar is never beta, so a faithful odd sign fiber never gives h = eta
    const auto z4 = cyclic_characters(4);
    const std::vector<int> odd{1, -1, 1, -1};
    for (int beta = 0; beta < 4; ++beta) {
        std::vector<ComplexMatrix> fib;
        for (int g = 0; g < 4; ++g) fib.push_back(ComplexMatrix::Identity(1, 1) * Complex(g % 2 ? -1.0 : 1.0, 0.0));
        const auto r = codim1_eta_h(z4, fib, odd, beta);
        CHECK(r.beta_bar != beta);
        if (r.h + r.eta > 0) CHECK(r.h != r.eta);
    }
}
