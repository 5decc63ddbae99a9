#include "equispectra/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equispectra {

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic; returns the quotient, requires zero remainder.
    const std::size_t dn = den.size() - 1;
    std::vector<long> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const long q = num[i];
        quot[i - dn] = q;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
    }
    return quot;
}

void reduce_mod_cyclotomic(std::vector<Rational>& c, int n) {
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i] == 0) continue;
        const Rational q = c[i];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi[j] != 0) c[i - deg + j] -= q * phi[j];
        }
    }
    c.resize(deg);
}

Integer parse_integer(std::string t, const std::string& raw) {
    bool negative = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        negative = t[0] == '-';
        t.erase(0, 1);
    }
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed rational '" + raw + "'");
    t.erase(0, std::min(t.find_first_not_of('0'), t.size() - 1));
    Integer v(t);
    return negative ? Integer(-v) : v;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial order must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) poly = poly_divide_exact(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

int euler_phi(int n) {
    return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char ch : raw) {
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    }
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const Integer num = parse_integer(text.substr(0, slash), raw);
        const Integer den = parse_integer(text.substr(slash + 1), raw);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
        return Rational(num, den);
    }
    std::size_t epos = text.find_first_of("eE");
    std::string mantissa = text.substr(0, epos);
    long exponent = 0;
    if (epos != std::string::npos) exponent = std::stol(text.substr(epos + 1));
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char ch : mantissa) {
        if (ch == '.') {
            if (seen_point) throw std::invalid_argument("malformed rational '" + raw + "'");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_point) ++frac_digits;
        } else {
            throw std::invalid_argument("malformed rational '" + raw + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed rational '" + raw + "'");
    // a leading 0 would make the GMP string parser read octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Integer num(digits);
    if (negative) num = -num;
    exponent -= frac_digits;
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
    return exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
    return os.str();
}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    trim();
}

Cyclotomic Cyclotomic::from_exponents(int n, const std::vector<Rational>& coeffs) {
    if (n < 1) throw std::invalid_argument("root-of-unity order must be positive");
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t e = 0; e < coeffs.size(); ++e) c[e % n] += coeffs[e];
    reduce_mod_cyclotomic(c, n);
    return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(int n, long power) {
    long e = power % n;
    if (e < 0) e += n;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c[e] = 1;
    return from_exponents(n, c);
}

Cyclotomic Cyclotomic::gaussian(const Rational& re, const Rational& im) {
    return Cyclotomic(4, {re, im});
}

void Cyclotomic::trim() {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return;
    }
    coeffs_.resize(1);
    order_ = 1;
}

bool Cyclotomic::is_zero() const { return order_ == 1 && coeffs_[0] == 0; }

bool Cyclotomic::is_rational() const { return order_ == 1; }

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
    return coeffs_[0];
}

bool Cyclotomic::is_integer() const {
    return is_rational() && boost::multiprecision::denominator(coeffs_[0]) == 1;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        sum += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
    }
    return sum;
}

Cyclotomic Cyclotomic::galois(int a) const {
    if (order_ <= 2) return *this;
    if (std::gcd(a, order_) != 1) throw std::invalid_argument("Galois exponent must be coprime to the order");
    long am = a % order_;
    if (am < 0) am += order_;
    std::vector<Rational> c(order_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(am * i) % order_] += coeffs_[i];
    reduce_mod_cyclotomic(c, order_);
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const { return galois(order_ - 1); }

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("cannot lift to a field not containing the element");
    const int step = m / order_;
    std::vector<Rational> c(m, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(i * step) % m] += coeffs_[i];
    reduce_mod_cyclotomic(c, m);
    Cyclotomic out;
    out.order_ = m;
    out.coeffs_ = std::move(c);
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    Cyclotomic others(1L);
    for (int a = 2; a < order_; ++a) {
        if (std::gcd(a, order_) == 1) others *= galois(a);
    }
    const Rational norm = (*this * others).rational_value();
    return others * Cyclotomic(Rational(1) / norm);
}

Integer Cyclotomic::denominator() const {
    Integer den = 1;
    for (const auto& c : coeffs_) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    return den;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.order_ == 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    const int m = std::lcm(order_, rhs.order_);
    if (order_ != m) *this = lifted(m);
    const Cyclotomic r = rhs.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (rhs.order_ == 1) {
        for (auto& c : coeffs_) c *= rhs.coeffs_[0];
        trim();
        return *this;
    }
    if (order_ == 1) {
        const Rational s = coeffs_[0];
        *this = rhs;
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }
    const int m = std::lcm(order_, rhs.order_);
    const Cyclotomic a = lifted(m);
    const Cyclotomic b = rhs.lifted(m);
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    reduce_mod_cyclotomic(c, m);
    order_ = m;
    coeffs_ = std::move(c);
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.order_ == 1 || b.order_ == 1) return false;  // trimmed: one rational, one not
    const int m = std::lcm(a.order_, b.order_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
    if (order_ == 1) return equispectra::to_string(coeffs_[0]);
    if (order_ == 4) {
        std::string s;
        if (coeffs_[0] != 0) s = equispectra::to_string(coeffs_[0]);
        const Rational& im = coeffs_[1];
        if (im == 1) {
            s += s.empty() ? "i" : "+i";
        } else if (im == -1) {
            s += "-i";
        } else {
            std::string t = equispectra::to_string(im);
            if (!s.empty() && t[0] != '-') s += "+";
            s += t + "*i";
        }
        return s;
    }
    std::ostringstream os;
    os << "cyclo(" << order_ << ")[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << equispectra::to_string(coeffs_[i]);
    }
    os << ']';
    return os.str();
}

}  // namespace equispectra
