#include "zetaforms/rivoal.hpp"

#include <stdexcept>

#include "zetaforms/number_theory.hpp"

namespace zetaforms {

void RivoalParams::validate() const {
    if (a < 3) throw std::invalid_argument("rivoal: a >= 3 required");
    if (r < 1 || 2 * r >= a) throw std::invalid_argument("rivoal: 1 <= r < a/2 required");
    if (n < 1) throw std::invalid_argument("rivoal: n >= 1 required");
}

FactoredRational rivoal_factored(const RivoalParams& p) {
    p.validate();
    FactoredRational f;
    f.prefactor = Rational(2) * Rational(pow(factorial(p.n), p.a - 2 * p.r));
    f.multiply_root(Rational(-p.n, 2), 1);                       // (X + n/2)
    f.multiply_pochhammer(Rational(-Integer(p.r * p.n)), p.r * p.n, 1);   // (X - rn)_{rn}
    f.multiply_pochhammer(Rational(Integer(p.n + 1)), p.r * p.n, 1);      // (X + n + 1)_{rn}
    f.multiply_pochhammer(Rational(0), p.n + 1, -p.a);           // (X)_{n+1}^{-a}
    return f;
}

namespace {

std::vector<Rational> f_residues(long n, int s) {
    // (X - sn)_n / (X)_{n+1} : residue at -p is (-1)^{n-p} C(n,p) C(p+sn, n)
    std::vector<Rational> res(n + 1);
    for (long p = 0; p <= n; ++p) {
        Integer v = binomial(n, p) * binomial(p + s * n, n);
        if ((n - p) % 2 == 1) v = -v;
        res[p] = Rational(v);
    }
    return res;
}

std::vector<Rational> g_residues(long n, int s) {
    // (X + sn + 1)_n / (X)_{n+1} : residue at -p is (-1)^p C(n,p) C((s+1)n - p, n)
    std::vector<Rational> res(n + 1);
    for (long p = 0; p <= n; ++p) {
        Integer v = binomial(n, p) * binomial((s + 1) * n - p, n);
        if (p % 2 == 1) v = -v;
        res[p] = Rational(v);
    }
    return res;
}

std::vector<Rational> h_residues(long n) {
    // n! / (X)_{n+1} : residue at -p is (-1)^p C(n,p)
    std::vector<Rational> res(n + 1);
    for (long p = 0; p <= n; ++p) {
        Integer v = binomial(n, p);
        if (p % 2 == 1) v = -v;
        res[p] = Rational(v);
    }
    return res;
}

}  // namespace

// Shared by the rivoal family and the second-derivative family of the
// quantitative module: product of F factors (multiplicities fs), G factors
// (gs), H^h and (2X + n).
PartialFractionTable wellpoised_product_table(long n, const std::vector<int>& f_mult,
                                              const std::vector<int>& g_mult, int h_count) {
    PartialFractionTable t;
    bool started = false;
    auto absorb = [&](const std::vector<Rational>& res) {
        PartialFractionTable simple = pf_from_residues(0, res);
        if (!started) {
            t = simple;
            started = true;
        } else {
            t = pf_multiply_simple(t, simple);
        }
    };
    for (std::size_t s = 0; s < f_mult.size(); ++s)
        for (int c = 0; c < f_mult[s]; ++c) absorb(f_residues(n, static_cast<int>(s) + 1));
    for (std::size_t s = 0; s < g_mult.size(); ++s)
        for (int c = 0; c < g_mult[s]; ++c) absorb(g_residues(n, static_cast<int>(s) + 1));
    for (int c = 0; c < h_count; ++c) absorb(h_residues(n));
    if (!started) throw std::logic_error("empty well-poised product");
    return pf_multiply_2x_plus(std::move(t), Rational(n));
}

// P_0(z) = - sum_l z^l sum_{i>l} sum_j weight_j c_{i,j} / (i-l)^{j+shift}
// with weight_j = 1, shift = 0 for plain series and weight_j = j(j+1)/2,
// shift = 2 after two derivatives.
Polynomial tail_polynomial(const PartialFractionTable& t, bool shifted) {
    long last = t.last_pole();
    std::vector<Rational> coeffs(std::max<long>(last, 1), Rational(0));
    for (long l = 0; l < last; ++l) {
        Rational acc(0);
        for (long i = std::max(l + 1, t.first_pole); i <= last; ++i) {
            for (std::size_t j = 1; j <= t.max_order(); ++j) {
                Rational cij = t.c(i, j);
                if (cij == 0) continue;
                Rational w(1);
                unsigned long e = j;
                if (shifted) {
                    w = Rational(Integer(j) * Integer(j + 1), 2);
                    w.canonicalize();
                    e = j + 2;
                }
                acc += w * cij / pow(Rational(Integer(i - l)), e);
            }
        }
        coeffs[l] = -acc;
    }
    return Polynomial(coeffs);
}

std::vector<Polynomial> pole_polynomials(const PartialFractionTable& t, int order,
                                         bool shifted) {
    std::vector<Polynomial> P(order + 1);
    P[0] = tail_polynomial(t, shifted);
    for (int j = 1; j <= order; ++j) {
        std::vector<Rational> coeffs(t.last_pole() + 1, Rational(0));
        for (long i = t.first_pole; i <= t.last_pole(); ++i) coeffs[i] = t.c(i, j);
        P[j] = Polynomial(coeffs);
    }
    return P;
}

RivoalDecomp rivoal_decompose(const RivoalParams& p) {
    p.validate();
    RivoalDecomp d;
    d.params = p;
    d.table = wellpoised_product_table(p.n, std::vector<int>(p.r, 1), std::vector<int>(p.r, 1),
                                       p.a - 2 * p.r);
    d.P = pole_polynomials(d.table, p.a, false);
    return d;
}

PartialFractionTable rivoal_table_by_derivatives(const RivoalParams& p) {
    return pf_from_factored(rivoal_factored(p));
}

bool symmetry_check(const RivoalDecomp& d) {
    const auto& p = d.params;
    for (int j = 1; j <= p.a; ++j) {
        // sign (-1)^{j + a(n+1) + 1}
        long e = j + p.a * (p.n + 1) + 1;
        Polynomial rhs = d.P[j].is_zero() ? Polynomial() : d.P[j].reversed(p.n);
        if (e % 2 == 1) rhs = -rhs;
        if (!(d.P[j] == rhs)) return false;
    }
    return true;
}

namespace {

void check_kappa_denominator(const ZetaLinearForm& form, int a, long n) {
    Integer da = pow(lcm_upto(std::max<long>(n, 1)), a);
    if (!is_integer(Rational(da) * form.kappa0))
        throw std::logic_error("zeta form: d_n^a kappa_0 not integral");
    for (const auto& [s, k] : form.kappa)
        if (!is_integer(Rational(da) * k))
            throw std::logic_error("zeta form: d_n^a kappa_j not integral");
}

}  // namespace

ZetaLinearForm zeta_form(const RivoalDecomp& d) {
    const auto& p = d.params;
    if (!p.a_even()) throw std::invalid_argument("zeta_form: a must be even (see odd_a_forms)");
    if (d.P[1].at_one() != 0)
        throw std::logic_error("zeta_form: P_1(1) != 0, residue at infinity present");
    ZetaLinearForm form;
    form.construction = "rivoal";
    form.a = p.a;
    form.r = p.r;
    form.n = p.n;
    form.kappa0 = d.P[0].at_one();
    for (int j = 2; j <= p.a; ++j) {
        Rational v = d.P[j].at_one();
        if (j % 2 == 0) {
            if (v != 0) throw std::logic_error("zeta_form: even-index P_j(1) must vanish");
            form.vanished_args.push_back(j);
        } else {
            form.kappa[j] = v;
        }
    }
    check_kappa_denominator(form, p.a, p.n);
    return form;
}

ZetaLinearForm odd_a_forms(const RivoalDecomp& d) {
    const auto& p = d.params;
    if (p.a_even()) throw std::invalid_argument("odd_a_forms: a must be odd");
    if (d.P[1].at_one() != 0)
        throw std::logic_error("odd_a_forms: P_1(1) != 0, residue at infinity present");
    ZetaLinearForm form;
    form.construction = "rivoal-odd-a";
    form.a = p.a;
    form.r = p.r;
    form.n = p.n;
    form.kappa0 = d.P[0].at_one();
    // P_j(1) = 0 whenever j + a(n+1) is even.
    bool evens_vanish = (p.n % 2 == 1);  // a odd: a(n+1) even iff n odd
    for (int j = 2; j <= p.a; ++j) {
        Rational v = d.P[j].at_one();
        bool vanishes = (j % 2 == 0) == evens_vanish;
        if (vanishes) {
            if (v != 0) throw std::logic_error("odd_a_forms: parity-forced P_j(1) must vanish");
            form.vanished_args.push_back(j);
        } else {
            form.kappa[j] = v;
        }
    }
    check_kappa_denominator(form, p.a, p.n);
    return form;
}

MinusOneForm evaluate_at_minus_one(const RivoalDecomp& d) {
    const auto& p = d.params;
    MinusOneForm form;
    form.construction = "rivoal at z = -1";
    form.a = p.a;
    form.r = p.r;
    form.n = p.n;
    Rational minus_one(-1);
    form.one_coeff = d.P[0](minus_one);
    form.log2_coeff = -d.P[1](minus_one);
    for (int l = 2; l <= p.a; ++l) {
        Rational factor = -(Rational(1) - pow(Rational(1, 2), l - 1));
        form.zeta_coeff[l] = factor * d.P[l](minus_one);
    }
    return form;
}

bool denominator_lemma_check(const RivoalDecomp& d) {
    Integer dn = lcm_upto(d.params.n);
    for (int j = 0; j <= d.params.a; ++j) {
        Rational scale(pow(dn, d.params.a - j));
        Polynomial scaled = d.P[j] * scale;
        if (!scaled.integer_coefficients()) return false;
    }
    return true;
}

std::pair<long, int> denominator_sharpness_instance(int a, int r, long max_n) {
    for (long n = 1; n <= max_n; ++n) {
        RivoalDecomp d = rivoal_decompose({a, r, n});
        Integer dn = lcm_upto(n);
        for (int j = 0; j < a; ++j) {
            Rational scale(pow(dn, a - 1 - j));
            if (!(d.P[j] * scale).integer_coefficients()) return {n, j};
        }
    }
    return {-1, -1};
}

std::vector<BallProbeEntry> ball_conjecture_probe(int a, int r, long max_n) {
    if (a % 2 != 0) throw std::invalid_argument("ball_conjecture_probe: a must be even");
    std::vector<BallProbeEntry> out;
    for (long n = 1; n <= max_n; ++n) {
        RivoalDecomp d = rivoal_decompose({a, r, n});
        ZetaLinearForm form = zeta_form(d);
        Integer da1 = pow(lcm_upto(n), a - 1);
        bool ok = is_integer(Rational(da1) * form.kappa0);
        for (const auto& [s, k] : form.kappa) ok = ok && is_integer(Rational(da1) * k);
        out.push_back({n, ok});
    }
    return out;
}

RateEstimate rate_phi(int r, int a, const Rational& z, int digits) {
    if (r < 1 || a < 3 || 2 * r >= a) throw std::invalid_argument("rate_phi: bad parameters");
    if (z < 1) throw std::invalid_argument("rate_phi: z >= 1 required");
    PrecisionGuard guard(digits + 20);
    Real zr = to_real(z);
    auto Q = [&](const Real& s) {
        return Real(Rational(r) * pow(s, a + 2) - Rational(r + 1) * pow(s, a + 1) +
                    Rational(r + 1) * zr * s - Rational(r) * zr);
    };
    Real lo = Real(Rational(r)) / Real(Rational(r + 1));
    Real hi(1);
    // At z = 1 the polynomial vanishes at s = 1; back off the bracket end
    // until the sign change is strict.
    Real qlo = Q(lo);
    while (Q(hi) * qlo >= 0) {
        hi = Real(1 - (Real(1) - hi) / 2 - Real("0.015625"));
        if (hi < lo) throw std::logic_error("rate_phi: no sign change in bracket");
    }
    Real tol = Real(Real(1) / pow(Real(10), digits + 5));
    while (hi - lo > tol) {
        Real mid = Real((lo + hi) / 2);
        if (Q(mid) * qlo > 0) {
            lo = mid;
            qlo = Q(lo);
        } else {
            hi = mid;
        }
    }
    RateEstimate est;
    est.s0 = Real((lo + hi) / 2);
    Real rr(r);
    est.phi = Real(pow(zr, -r) * pow((rr + 1) * est.s0 - rr, r) *
                   pow(rr + 1 - rr * est.s0, r + 1) * pow(1 - est.s0, a - 2 * r));
    est.upper_bound = Real(pow(Real(2), r + 1) / (pow(zr, r) * pow(rr, a - 2 * r)));
    if (est.phi > est.upper_bound * (1 + Real(1e-20)))
        throw std::logic_error("rate_phi: phi exceeds its upper bound");
    return est;
}

double nesterenko_bound(double alpha, double beta) {
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("nesterenko: 0 < alpha < 1");
    if (!(beta > 1)) throw std::invalid_argument("nesterenko: beta > 1");
    return 1.0 - std::log(alpha) / std::log(beta);
}

HighPrecReal series_direct_sum(const FactoredRational& R, const Rational& z, int digits) {
    if (z <= 1) throw std::invalid_argument("series_direct_sum: rational z > 1 required");
    int work = digits + 20;
    PrecisionGuard guard(work);
    // Crude tail envelope: past k0 = 2*max|root|, every factor |k - rho| lies
    // in [k/2, 2k], so |R(k)| <= |pref| 2^{D} k^{-gap} with gap >= 2.
    long max_root = 1;
    long num_deg = 0, den_deg = 0;
    for (const auto& [root, e] : R.exponents) {
        Rational ar = abs(root);
        max_root = std::max(max_root, ar.get_num().get_si() / ar.get_den().get_si() + 1);
        (e > 0 ? num_deg : den_deg) += (e > 0 ? e : -e);
    }
    double log10z = std::log10(z.get_d());
    double log10pref = std::max(0.0, std::log10(std::max(1e-300, ::fabs(R.prefactor.get_d()))));
    double log10two = 0.30103 * static_cast<double>(num_deg + den_deg);
    long N = std::max<long>(2 * max_root + 8,
                            static_cast<long>((digits + 12 + log10pref + log10two) / log10z) + 4);
    Real acc(0);
    Rational zk(1);
    for (long k = 1; k <= N; ++k) {
        zk /= z;
        Rational v = R.value(Rational(k));
        if (v != 0) acc += to_real(v * zk);
    }
    // tail <= |pref| 2^D sum_{k>N} k^{-2} z^{-k} <= |pref| 2^D N^{-2} z^{-N} / (1 - 1/z)
    Rational tail = abs(R.prefactor) * pow(Rational(2), num_deg + den_deg);
    tail *= pow(Rational(1) / z, N);
    tail /= Rational(Integer(N) * Integer(N));
    tail /= Rational(1) - Rational(1) / z;
    HighPrecReal out;
    out.value = acc;
    out.error = Real(to_real(tail) + Real(N + 4) / pow(Real(10), work));
    return out;
}

HighPrecReal series_sum_z1(const FactoredRational& R, unsigned d, const Rational& weight,
                           const PartialFractionTable& table, int digits) {
    int work = digits + 25;
    PrecisionGuard guard(work);
    long N = table.last_pole() + 60;
    Rational head(0);
    for (long k = 1; k <= N; ++k) {
        Rational x(k);
        switch (d) {
            case 0: head += R.value(x); break;
            case 1: head += R.derivative1(x); break;
            case 2: head += R.derivative2(x); break;
            default: throw std::invalid_argument("series_sum_z1: derivative order <= 2");
        }
    }
    Real acc = to_real(weight * head);
    Real err = Real(Real(8) / pow(Real(10), work));
    // tail: sum_{k>N} R^{(d)}(k) = sum_{i,j} c_{i,j} (-1)^d (j)_d T_{j+d}(N+i)
    for (long i = table.first_pole; i <= table.last_pole(); ++i) {
        for (std::size_t j = 1; j <= table.max_order(); ++j) {
            Rational cij = table.c(i, j);
            if (cij == 0) continue;
            Rational w = cij * weight * pochhammer(Rational(static_cast<long>(j)), d);
            if (d % 2 == 1) w = -w;
            HighPrecReal t = zeta_tail(static_cast<int>(j + d), N + i, work);
            acc += to_real(w) * t.value;
            err += to_real(abs(w)) * t.error + Real(4) / pow(Real(10), work);
        }
    }
    return {Real(acc), Real(err)};
}

HighPrecReal decomposition_value(const std::vector<Polynomial>& P, const Rational& z,
                                 int digits, bool shifted) {
    if (z <= 1) throw std::invalid_argument("decomposition_value: rational z > 1 required");
    int work = digits + 20;
    PrecisionGuard guard(work);
    Rational invz = Rational(1) / z;
    Real acc = to_real(P[0](z));
    Real err = Real(Real(8) / pow(Real(10), work));
    for (std::size_t j = 1; j < P.size(); ++j) {
        Rational pj = P[j](z);
        if (pj == 0) continue;
        Rational w = pj;
        int li = static_cast<int>(j);
        if (shifted) {
            w *= Rational(Integer(j) * Integer(j + 1), 2);
            w.canonicalize();
            li += 2;
        }
        HighPrecReal L = polylog(li, invz, work);
        acc += to_real(w) * L.value;
        err += to_real(abs(w)) * L.error + Real(4) / pow(Real(10), work);
    }
    return {Real(acc), Real(err)};
}

}  // namespace zetaforms
