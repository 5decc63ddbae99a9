#pragma once

// Arithmetic in F_p for 31-bit primes p, and the ring maps Z[zeta_N][1/D] -> F_p
// used by the certified spectrum routines.

#include <cstdint>
#include <vector>

#include "equispectra/cyclotomic.hpp"

namespace equispectra::modular {

using u64 = std::uint64_t;

inline u64 add_mod(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub_mod(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
inline u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }
u64 pow_mod(u64 base, u64 exp, u64 p);
u64 inv_mod(u64 a, u64 p);

bool is_prime(u64 n);

/// The `count` largest primes p < below with p = 1 mod n.
std::vector<u64> primes_one_mod(int n, std::size_t count, u64 below = (u64{1} << 31));

/// An element of exact multiplicative order n in F_p; requires n | p - 1.
u64 primitive_root_of_unity(u64 p, int n);

/// Ring map Q(zeta_N) -> F_p sending zeta_N to omega (a primitive N-th root).
/// Throws std::domain_error when a denominator vanishes mod p.
class Embedding {
public:
    Embedding(u64 p, int n, u64 omega);

    u64 prime() const { return p_; }
    int order() const { return n_; }

    u64 operator()(const Rational& q) const;
    u64 operator()(const Cyclotomic& x) const;

private:
    u64 p_;
    int n_;
    std::vector<u64> powers_;  // omega^0 .. omega^{n-1}
};

/// All phi(N) embeddings for one prime p = 1 mod N.
std::vector<Embedding> all_embeddings(u64 p, int n);

/// Symmetric residue lift and Chinese remaindering.
Integer crt(const std::vector<u64>& residues, const std::vector<u64>& primes);

}  // namespace equispectra::modular
