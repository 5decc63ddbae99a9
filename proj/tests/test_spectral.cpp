#include "doctest.h"

#include "equispectra/spectral.hpp"
#include "helpers.hpp"

using namespace equispectra;
using namespace testing;

namespace {

long binom(long n, long r) {
    if (r < 0 || r > n) return 0;
    long c = 1;
    for (long i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

// copies of alpha in P_m (x) C^{d+}, from the projector on the brute section representation
long projector_count(const GroupAction<Cyclotomic>& act, const CharacterTable& t, int alpha, int m) {
    const auto rep = section_representation(act, m);
    const Cyclotomic tr = trace<Cyclotomic>(isotypic_projector(rep, t, alpha, false));
    REQUIRE(tr.is_integer());
    return boost::multiprecision::numerator(tr.rational_value()).convert_to<long>() / t.degree(alpha);
}

}  // namespace

TEST_CASE("full multiplicities") {
    CHECK(full_multiplicity(2, 1, 5) == 1);
    CHECK(full_multiplicity(3, 2, 4) == 10);
    for (int k = 1; k <= 5; ++k) CHECK(full_multiplicity(k, 3, 0) == 3);
    CHECK_THROWS_AS(full_multiplicity(2, 1, -1), Error);

    const auto t = full_spectrum(2, 2);  // de Rham in the plane
    CHECK(t.mu_minus(0) == 2);
    for (int j = 1; j <= 10; ++j) CHECK(t.mu_minus(j) == 2);
    // gap {1..k-2} is empty for k = 4
    const auto t4 = full_spectrum(4, 8);
    CHECK(t4.multiplicity(1) == 0);
    CHECK(t4.multiplicity(2) == 0);
    CHECK(t4.multiplicity(3) == 8);
}

TEST_CASE("determinant series") {
    const auto c = det_one_minus_t<Cyclotomic>(rotation(4));
    // det(I - tR) for a quarter turn is 1 + t^2
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Cyclotomic(1L));
    CHECK(c[1].is_zero());
    CHECK(c[2] == Cyclotomic(1L));
}

TEST_CASE("isotypic dimensions") {
    const auto cr = cauchy_riemann();
    const auto t1 = cyclic_characters(1);
    const auto triv = GroupAction<Cyclotomic>::trivial(pauli());
    const auto d = isotypic_dims(triv, t1, 0, 8);
    for (int m = 0; m <= 8; ++m) CHECK(d[m] == 2 * binom(m + 2, m));

    const auto z2 = cyclic_characters(2);
    const auto anti = antipodal(cr);
    const auto da = isotypic_dims(anti, z2, 0, 9);
    for (int m = 0; m <= 9; ++m) CHECK(da[m] == (m % 2 == 0 ? m + 1 : 0));

    const auto rot4 = cr_rotation(4);
    const auto z4 = cyclic_characters(4);
    // only x^2 + y^2 is invariant under the quarter turn
    CHECK(isotypic_dims(rot4, z4, 0, 2)[2] == 1);
    CHECK(projector_count(rot4, z4, 0, 2) == 1);

    // projector traces on P_m agree, for both fibers
    for (int p = 2; p <= 5; ++p) {
        const auto act = cr_rotation(p, 1);
        const auto t = cyclic_characters(p);
        for (int a = 0; a < p; ++a) {
            const auto dims = isotypic_dims(act, t, a, 6);
            for (int m = 0; m <= 6; ++m) CHECK(dims[m] == projector_count(act, t, a, m));
        }
    }
}

TEST_CASE("Molien generating functions") {
    const auto g = full_gf(2, 1);
    CHECK(g.num == std::vector<Rational>{1});
    CHECK(g.period == 1);
    CHECK(g.denominator_string() == "(1-t^1)^2");

    const auto z2 = cyclic_characters(2);
    const auto gf = molien_gf(antipodal(cauchy_riemann()), z2, 0);
    CHECK(gf.period == 2);
    // (1/2)[(1-t)^-2 + (1+t)^-2] = (1 + t^2)/(1 - t^2)^2
    CHECK(gf.num == std::vector<Rational>{1, 0, 1});

    const auto z4 = cyclic_characters(4);
    const auto rot = cr_rotation(4);
    for (int a = 0; a < 4; ++a) {
        const auto f = molien_gf(rot, z4, a);
        const long len = 2L * (2 + 1) * 4;
        const auto dims = isotypic_dims(rot, z4, a, static_cast<int>(len));
        for (long m = 0; m <= len; ++m) CHECK(f.coefficient(m) == Rational(dims[m]));
    }
}

TEST_CASE("equivariant spectrum identities") {
    const auto z3 = cyclic_characters(3);
    const auto rot = cr_rotation(3);
    // alpha = chi_1: eigenvalues -j with j = 2 mod 3
    const auto s1 = equivariant_spectrum(rot, z3, 1, 30);
    for (int j = 1; j <= 30; ++j) CHECK(s1.mu_minus(j) == (j % 3 == 2 ? 1 : 0));

    std::vector<std::pair<GroupAction<Cyclotomic>, CharacterTable>> cases;
    cases.emplace_back(rot, z3);
    cases.emplace_back(cr_rotation(5, 1), cyclic_characters(5));
    cases.emplace_back(antipodal(de_rham_symbol(3)), cyclic_characters(2));
    cases.emplace_back(GroupAction<Cyclotomic>::trivial(pauli()), cyclic_characters(1));
    for (const auto& [act, t] : cases) {
        const int k = act.symbol().k();
        std::vector<long> full_minus(33, 0), full_plus(33, 0);
        for (int a = 0; a < t.size(); ++a) {
            const auto s = equivariant_spectrum(act, t, a, 32);
            for (int j = 0; j <= 32; ++j) {
                CHECK(s.mu_minus(j) >= 0);
                CHECK(s.h(j) == s.dim_plus(j) - s.dim_plus(j - 2));
                full_minus[j] += s.mu_minus(j) * t.degree(a);
                full_plus[j] += s.mu_plus(j) * t.degree(a);
            }
            for (int l = 1; l <= k - 2; ++l) CHECK(s.multiplicity(l) == 0);
        }
        for (int j = 0; j <= 32; ++j) {
            CHECK(full_minus[j] == full_multiplicity(k, act.symbol().d(), j));
            CHECK(full_plus[j] == full_multiplicity(k, act.symbol().d(), j));
        }
    }

    // trivial group: mu_{-j} = mu_{j+k-1} = d C(j+k-2, j), mu_0 = d
    const auto tr = equivariant_spectrum(GroupAction<Cyclotomic>::trivial(de_rham_symbol(4)), cyclic_characters(1), 0, 32);
    for (int j = 0; j <= 32; ++j) {
        CHECK(tr.mu_minus(j) == full_multiplicity(4, 8, j));
        CHECK(tr.mu_plus(j) == tr.mu_minus(j));
    }
}

TEST_CASE("tower matches the brute spectrum") {
    const auto z3 = cyclic_characters(3);
    const auto act = cr_rotation(3, 1);
    for (int m = 0; m <= 5; ++m) {
        const auto brute = equivariant_brute_spectra(act, z3, m);
        for (int a = 0; a < 3; ++a) CHECK(equivariant_spectrum(act, z3, a, 16).tower(m) == brute[a].eigen);
    }
    const auto p = pauli();
    const auto t = full_spectrum(3, 2, 16);
    for (int m = 0; m <= 4; ++m) CHECK(t.tower(m) == brute_spectrum(p, m).eigen);
}
