#include "zetaforms/number_theory.hpp"

#include <mutex>
#include <stdexcept>

namespace zetaforms {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long smallest_prime_factor(unsigned long n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor: n >= 2 required");
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

unsigned long prime_power_base(unsigned long n) {
    if (n < 2) return 0;
    unsigned long p = smallest_prime_factor(n);
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

std::vector<unsigned long> primes_upto(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long k = 2; k <= n; ++k)
        if (is_prime(k)) ps.push_back(k);
    return ps;
}

LcmTable::LcmTable() { values_.push_back(Integer(1)); }

Integer LcmTable::value(unsigned long n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
        unsigned long m = values_.size();
        unsigned long p = prime_power_base(m);
        Integer next = values_.back();
        if (p != 0) next *= static_cast<long>(p);
        values_.push_back(next);
    }
    return values_[n];
}

Integer lcm_upto(unsigned long n) {
    if (n == 0) throw std::invalid_argument("lcm_upto: n >= 1 required");
    static LcmTable table;
    return table.value(n);
}

unsigned long factorial_valuation(unsigned long n, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("factorial_valuation: p must be prime");
    unsigned long total = 0;
    for (unsigned long q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;  // avoid overflow on q *= p
    }
    return total;
}

long valuation(const Integer& x, unsigned long p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    Integer m = x, q;
    long v = 0;
    Integer ip(static_cast<long>(p));
    while (mpz_divisible_p(m.get_mpz_t(), ip.get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), m.get_mpz_t(), ip.get_mpz_t());
        m = q;
        ++v;
    }
    return v;
}

long valuation(const Rational& x, unsigned long p) {
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

namespace {
Integer sigma_power(unsigned long n, unsigned e) {
    Integer total(0);
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += pow(Integer(static_cast<long>(d)), e);
        unsigned long q = n / d;
        if (q != d) total += pow(Integer(static_cast<long>(q)), e);
    }
    return total;
}
}  // namespace

Integer sigma1(unsigned long n) { return sigma_power(n, 1); }
Integer sigma3(unsigned long n) { return sigma_power(n, 3); }

}  // namespace zetaforms
