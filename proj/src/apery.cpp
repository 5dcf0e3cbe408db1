#include "zetaforms/apery.hpp"

#include <stdexcept>

#include "zetaforms/number_theory.hpp"

namespace zetaforms {

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::recurrence: return "recurrence";
        case Construction::explicit_sum: return "explicit";
        case Construction::sigma: return "sigma";
        case Construction::vwp: return "vwp";
        case Construction::modular: return "modular";
    }
    return "?";
}

namespace {

Rational recurrence_middle(long n) {
    // 34 n^3 + 51 n^2 + 27 n + 5
    Integer nn(n);
    return Rational(34 * nn * nn * nn + 51 * nn * nn + 27 * nn + 5);
}

Rational lambda(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    Integer b = binomial(n, k) * binomial(n + k, k);
    return Rational(b * b);
}

// lambda_{n,k} * c_{n,k}, with the convention that the product is zero
// wherever lambda vanishes (c is only defined for 0 <= k <= n).
Rational lambda_c(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    return lambda(n, k) * apery_c(n, k);
}

Rational cert_a(long n, long k) {
    Integer kk(k), nn(n);
    Rational factor(4 * (2 * nn + 1) * (kk * (2 * kk + 1) - (2 * nn + 1) * (2 * nn + 1)));
    return factor * lambda(n, k);
}

Rational cert_b(long n, long k) {
    Rational extra(0);
    if (k >= 0 && k <= n) {
        Integer num = 5 * (2 * Integer(n) + 1) * Integer(k) * binomial(n, k) * binomial(n + k, k);
        if (k % 2 == 0) num = -num;  // (-1)^{k-1}
        extra = Rational(num, Integer(n) * Integer(n + 1));
        extra.canonicalize();
    }
    if (k < 0 || k > n) return extra;  // lambda vanishes there
    return cert_a(n, k) * apery_c(n, k) + extra;
}

}  // namespace

std::vector<AperyPair> apery_by_recurrence(long N) {
    if (N < 0) throw std::invalid_argument("apery_by_recurrence: N >= 0 required");
    std::vector<AperyPair> out;
    out.reserve(N + 1);
    out.push_back({0, Rational(1), Rational(0), Construction::recurrence});
    if (N == 0) return out;
    out.push_back({1, Rational(5), Rational(6), Construction::recurrence});
    for (long n = 1; n < N; ++n) {
        Rational cube(Integer(n + 1) * Integer(n + 1) * Integer(n + 1));
        Rational prev(Integer(n) * Integer(n) * Integer(n));
        Rational mid = recurrence_middle(n);
        Rational u = (mid * out[n].u - prev * out[n - 1].u) / cube;
        Rational v = (mid * out[n].v - prev * out[n - 1].v) / cube;
        out.push_back({n + 1, u, v, Construction::recurrence});
    }
    return out;
}

Rational apery_c(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("apery_c: need 0 <= k <= n");
    Rational total(0);
    for (long m = 1; m <= n; ++m) {
        Rational term(Integer(1), Integer(m) * Integer(m) * Integer(m));
        term.canonicalize();
        total += term;
    }
    for (long m = 1; m <= k; ++m) {
        Integer den = 2 * Integer(m) * Integer(m) * Integer(m) * binomial(n, m) * binomial(n + m, m);
        Rational term(Integer(1), den);
        term.canonicalize();
        if (m % 2 == 0) term = -term;
        total += term;
    }
    return total;
}

AperyPair apery_by_sum(long n) {
    if (n < 0) throw std::invalid_argument("apery_by_sum: n >= 0 required");
    Rational u(0), v(0);
    for (long k = 0; k <= n; ++k) {
        Rational lam = lambda(n, k);
        u += lam;
        v += lam * apery_c(n, k);
    }
    return {n, u, v, Construction::explicit_sum};
}

bool certificate_check(long n, long k) {
    if (n < 1 || k < 0 || k > n + 1)
        throw std::invalid_argument("certificate_check: need n >= 1, 0 <= k <= n+1");
    Rational mid = recurrence_middle(n);
    Rational cube(Integer(n + 1) * Integer(n + 1) * Integer(n + 1));
    Rational prev(Integer(n) * Integer(n) * Integer(n));

    Rational lhs_a = cert_a(n, k) - cert_a(n, k - 1);
    Rational rhs_a = cube * lambda(n + 1, k) - mid * lambda(n, k) + prev * lambda(n - 1, k);
    if (lhs_a != rhs_a) return false;

    Rational lhs_b = cert_b(n, k) - cert_b(n, k - 1);
    Rational rhs_b = cube * lambda_c(n + 1, k) - mid * lambda_c(n, k) + prev * lambda_c(n - 1, k);
    return lhs_b == rhs_b;
}

Rational delta_identity(long n) {
    if (n < 1) throw std::invalid_argument("delta_identity: n >= 1 required");
    auto table = apery_by_recurrence(n);
    Rational det = table[n].v * table[n - 1].u - table[n].u * table[n - 1].v;
    Rational expected(Integer(6), Integer(n) * Integer(n) * Integer(n));
    expected.canonicalize();
    if (det != expected) throw std::logic_error("delta_identity: determinant is not 6/n^3");
    return det;
}

Rational accelerated_zeta3_partial(long N) {
    if (N < 1) throw std::invalid_argument("accelerated_zeta3_partial: N >= 1 required");
    Rational total(0);
    for (long n = 1; n <= N; ++n) {
        Rational term(Integer(1), Integer(n) * Integer(n) * Integer(n) * binomial(2 * n, n));
        term.canonicalize();
        if (n % 2 == 0) term = -term;
        total += term;
    }
    return total * Rational(5, 2);
}

DenominatorReport denominator_check(long n) {
    if (n < 1) throw std::invalid_argument("denominator_check: n >= 1 required");
    auto table = apery_by_recurrence(n);
    DenominatorReport rep;
    rep.n = n;
    rep.u_integral = is_integer(table[n].u);
    Integer d3 = pow(lcm_upto(n), 3);
    rep.v_denominator_ok = is_integer(Rational(2) * Rational(d3) * table[n].v);
    rep.quotients_integral = true;
    for (long k = 1; k <= n && rep.quotients_integral; ++k) {
        for (long m = 1; m <= k; ++m) {
            Integer den = Integer(m) * Integer(m) * Integer(m) * binomial(n, m) * binomial(n + m, m);
            Rational q(binomial(n + k, k) * d3, den);
            q.canonicalize();
            if (!is_integer(q)) {
                rep.quotients_integral = false;
                break;
            }
        }
    }
    return rep;
}

}  // namespace zetaforms
