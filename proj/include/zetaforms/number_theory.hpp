#pragma once

#include <shared_mutex>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

bool is_prime(unsigned long n);
unsigned long smallest_prime_factor(unsigned long n);
// Returns p when n = p^k for a prime p (k >= 1), else 0.
unsigned long prime_power_base(unsigned long n);
std::vector<unsigned long> primes_upto(unsigned long n);

// Incremental table of d_n = lcm(1..n). d_n grows by a factor p exactly at
// prime powers n = p^k, so extension is a single multiply per step.
// Concurrent reads are allowed; extension takes the writer lock.
class LcmTable {
  public:
    LcmTable();
    Integer value(unsigned long n) const;  // d_n, extending the table as needed

  private:
    mutable std::shared_mutex mutex_;
    mutable std::vector<Integer> values_;  // values_[n] = d_n, d_0 = 1
};

// lcm(1..n) from a process-wide cached table; rejects n = 0.
Integer lcm_upto(unsigned long n);

// v_p(n!) by Legendre's formula; p must be prime.
unsigned long factorial_valuation(unsigned long n, unsigned long p);

// v_p of an integer / rational (rational valuation may be negative).
long valuation(const Integer& x, unsigned long p);
long valuation(const Rational& x, unsigned long p);

// Divisor power sums used by the Eisenstein expansions.
Integer sigma1(unsigned long n);
Integer sigma3(unsigned long n);

}  // namespace zetaforms
