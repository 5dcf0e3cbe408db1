#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetaforms {

// Exact arbitrary-precision arithmetic substrate. mpq_class keeps every
// value reduced with a positive denominator, which is the invariant all
// equality-based oracles in this project rely on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Serialized as "p/q" (or "p" when integral); the CLI report contract.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Integer pow(Integer base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(Rational base, unsigned long e) {
    mpz_pow_ui(base.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(base.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return base;
}

// base^e for possibly negative e (base must be nonzero then)
inline Rational pow_si(const Rational& base, long e) {
    if (e >= 0) return pow(base, static_cast<unsigned long>(e));
    if (base == 0) throw std::domain_error("0 to a negative power");
    Rational p = pow(base, static_cast<unsigned long>(-e));
    return Rational(1) / p;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Rising factorial (x)_k = x (x+1) ... (x+k-1); empty product for k = 0.
inline Rational pochhammer(const Rational& x, unsigned long k) {
    Rational r(1);
    for (unsigned long t = 0; t < k; ++t) r *= x + static_cast<long>(t);
    return r;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace zetaforms
