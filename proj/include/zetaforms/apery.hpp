#pragma once

#include <string>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

enum class Construction { recurrence, explicit_sum, sigma, vwp, modular };
std::string construction_name(Construction c);

// One rational approximation u_n zeta(3) - v_n, tagged with its origin.
struct AperyPair {
    long n = 0;
    Rational u;
    Rational v;
    Construction construction = Construction::recurrence;
};

// (u_n, v_n) for 0 <= n <= N from
//   (n+1)^3 y_{n+1} - (34n^3 + 51n^2 + 27n + 5) y_n + n^3 y_{n-1} = 0
// with u_0 = 1, u_1 = 5, v_0 = 0, v_1 = 6; exact rationals throughout.
std::vector<AperyPair> apery_by_recurrence(long N);

// c_{n,k} = sum_{m<=n} 1/m^3 + sum_{m<=k} (-1)^{m-1} / (2 m^3 C(n,m) C(n+m,m))
Rational apery_c(long n, long k);

// u_n = sum_k C(n,k)^2 C(n+k,k)^2,  v_n = sum_k C(n,k)^2 C(n+k,k)^2 c_{n,k}
AperyPair apery_by_sum(long n);

// Telescoping certificates: with lambda_{n,k} = C(n,k)^2 C(n+k,k)^2 and
//   A_{n,k} = 4(2n+1)(k(2k+1)-(2n+1)^2) lambda_{n,k},
//   B_{n,k} = A_{n,k} c_{n,k} + 5(2n+1) k (-1)^{k-1} C(n,k) C(n+k,k) / (n(n+1)),
// checks A_{n,k} - A_{n,k-1} and B_{n,k} - B_{n,k-1} against the recurrence
// combination of lambda (resp. lambda*c) at index k. Exact; true iff both hold.
bool certificate_check(long n, long k);

// v_n u_{n-1} - u_n v_{n-1}; asserts the value equals 6/n^3 and returns it.
Rational delta_identity(long n);

// N-th partial sum of (5/2) sum_{n>=1} (-1)^{n-1} / (n^3 C(2n,n)).
Rational accelerated_zeta3_partial(long N);

struct DenominatorReport {
    long n = 0;
    bool u_integral = false;
    bool v_denominator_ok = false;   // 2 d_n^3 v_n integral
    bool quotients_integral = false; // C(n+k,k) d_n^3 / (m^3 C(n,m) C(n+m,m)) for 1<=m<=k<=n
    bool all() const { return u_integral && v_denominator_ok && quotients_integral; }
};
DenominatorReport denominator_check(long n);

}  // namespace zetaforms
