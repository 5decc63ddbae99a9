#pragma once

#include <initializer_list>

#include "equispectra/error.hpp"
#include "equispectra/operator_core.hpp"
#include "equispectra/rep_theory.hpp"

namespace testing {

using equispectra::Cyclotomic;
using equispectra::ExactMatrix;

inline const Cyclotomic I = Cyclotomic::root_of_unity(4);

inline ExactMatrix mat(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
    ExactMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
    long i = 0;
    for (const auto& r : rows) {
        long j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline equispectra::CliffordSymbol<Cyclotomic> cauchy_riemann() {
    return equispectra::CliffordSymbol<Cyclotomic>::create({mat({{1L}}), mat({{I}})});
}

inline equispectra::CliffordSymbol<Cyclotomic> pauli() {
    return equispectra::CliffordSymbol<Cyclotomic>::create(
        {mat({{0L, 1L}, {1L, 0L}}), mat({{0L, -I}, {I, 0L}}), mat({{1L, 0L}, {0L, -1L}})});
}

// rotation of R^2 by 2 pi / p, exact in Q(zeta_p) + conjugates
inline ExactMatrix rotation(int p) {
    const Cyclotomic z = Cyclotomic::root_of_unity(p);
    const Cyclotomic half(equispectra::Rational(1, 2));
    const Cyclotomic c = half * (z + z.conj());
    const Cyclotomic s = half * (z - z.conj()) / I;
    return mat({{c, -s}, {s, c}});
}

// Z_p rotating the Cauchy-Riemann plane; equivariance forces U^- = zeta_p U^+
inline equispectra::GroupAction<Cyclotomic> cr_rotation(int p, long plus_power = 0) {
    const auto zp = equispectra::cyclic_characters(p);
    return equispectra::GroupAction<Cyclotomic>::create(cauchy_riemann(), zp.group(), {1}, {rotation(p)},
                                                        {mat({{Cyclotomic::root_of_unity(p, plus_power)}})},
                                                        {mat({{Cyclotomic::root_of_unity(p, plus_power + 1)}})});
}

// x -> -x with U^+ = I, U^- = -I
inline equispectra::GroupAction<Cyclotomic> antipodal(const equispectra::CliffordSymbol<Cyclotomic>& s) {
    const auto z2 = equispectra::cyclic_characters(2);
    return equispectra::GroupAction<Cyclotomic>::create(s, z2.group(), {1}, {-equispectra::identity<Cyclotomic>(s.k())},
                                                        {equispectra::identity<Cyclotomic>(s.d())},
                                                        {-equispectra::identity<Cyclotomic>(s.d())});
}

}  // namespace testing
