#include "equispectra/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace equispectra::modular {

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
    return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for n < 2^32 with these witnesses; n stays below 2^32 here
    for (u64 a : {2u, 7u, 61u}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_one_mod(int n, std::size_t count, u64 below) {
    if (below > (u64{1} << 32)) throw std::invalid_argument("primes must stay below 2^32");
    std::vector<u64> out;
    const u64 step = static_cast<u64>(n);
    u64 c = ((below - 2) / step) * step + 1;
    while (out.size() < count && c > step) {
        if (is_prime(c)) out.push_back(c);
        c -= step;
    }
    if (out.size() < count) throw std::runtime_error("ran out of primes = 1 mod n");
    return out;
}

u64 primitive_root_of_unity(u64 p, int n) {
    if ((p - 1) % static_cast<u64>(n) != 0) throw std::invalid_argument("n must divide p - 1");
    std::vector<u64> factors;
    u64 r = static_cast<u64>(n);
    for (u64 q = 2; q * q <= r; ++q) {
        if (r % q == 0) {
            factors.push_back(q);
            while (r % q == 0) r /= q;
        }
    }
    if (r > 1) factors.push_back(r);
    for (u64 g = 2; g < p; ++g) {
        const u64 w = pow_mod(g, (p - 1) / n, p);
        bool ok = true;
        for (u64 q : factors) {
            if (pow_mod(w, n / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return w;
    }
    throw std::runtime_error("no primitive root of unity found");
}

Embedding::Embedding(u64 p, int n, u64 omega) : p_(p), n_(n), powers_(n) {
    powers_[0] = 1;
    for (int i = 1; i < n; ++i) powers_[i] = mul_mod(powers_[i - 1], omega, p);
}

u64 Embedding::operator()(const Rational& q) const {
    const Integer pp(p_);
    Integer num = boost::multiprecision::numerator(q) % pp;
    Integer den = boost::multiprecision::denominator(q) % pp;
    if (num < 0) num += pp;
    if (den == 0) throw std::domain_error("denominator vanishes modulo the working prime");
    return mul_mod(num.convert_to<u64>(), inv_mod(den.convert_to<u64>(), p_), p_);
}

u64 Embedding::operator()(const Cyclotomic& x) const {
    if (n_ % x.order() != 0) throw std::invalid_argument("element lies outside the embedded field");
    const int step = n_ / x.order();
    u64 acc = 0;
    const auto& c = x.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc = add_mod(acc, mul_mod((*this)(c[i]), powers_[(i * step) % n_], p_), p_);
    }
    return acc;
}

std::vector<Embedding> all_embeddings(u64 p, int n) {
    const u64 omega = primitive_root_of_unity(p, n);
    std::vector<Embedding> out;
    for (int a = 1; a <= n; ++a) {
        if (std::gcd(a, n) == 1) out.emplace_back(p, n, pow_mod(omega, a, p));
    }
    return out;
}

Integer crt(const std::vector<u64>& residues, const std::vector<u64>& primes) {
    Integer x = 0;
    Integer mod = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const Integer p(primes[i]);
        Integer diff = (Integer(residues[i]) - x) % p;
        if (diff < 0) diff += p;
        Integer m_mod_p = mod % p;
        const u64 inv = inv_mod(m_mod_p.convert_to<u64>(), primes[i]);
        const Integer t = (diff * inv) % p;
        x += mod * t;
        mod *= p;
    }
    if (2 * x > mod) x -= mod;
    return x;
}

}  // namespace equispectra::modular
