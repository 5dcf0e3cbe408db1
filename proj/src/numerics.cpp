#include "zetaforms/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace zetaforms {

bool HighPrecReal::certifies(int digits) const {
    Real tol(1);
    tol /= pow(Real(10), digits);
    return error <= tol;
}

std::string HighPrecReal::str(int digits) const { return value.str(digits); }

Real to_real(const Rational& q) {
    Real r(0);
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& z) {
    Real r(0);
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real abs_diff(const Real& a, const Real& b) { return Real(abs(a - b)); }

Rational bernoulli(unsigned m) {
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mutex);
    while (cache.size() <= m) {
        unsigned k = cache.size();
        // sum_{j=0}^{k} C(k+1, j) B_j = 0
        Rational acc(0);
        for (unsigned j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * cache[j];
        Rational bk = -acc / Rational(static_cast<long>(k + 1));
        cache.push_back(bk);
    }
    return cache[m];
}

namespace {

Rational rational_pow10_neg(int digits) { return pow(Rational(1, 10), digits); }

// Relative rounding unit at p decimal digits, as a coarse Real.
Real rounding_unit(int p) { return Real(Real(1) / pow(Real(10), p)); }

// Size of x in decimal digits above 1 (0 for |x| <= 1).
int magnitude_digits(const Rational& x) {
    Integer n = Integer(::abs(x.get_num()));
    Integer d = x.get_den();
    std::size_t nd = mpz_sizeinbase(n.get_mpz_t(), 10);
    std::size_t dd = mpz_sizeinbase(d.get_mpz_t(), 10);
    return nd > dd ? static_cast<int>(nd - dd) + 1 : 0;
}

}  // namespace

HighPrecReal zeta(int s, int digits) {
    if (s < 2) throw std::invalid_argument("zeta: integer s >= 2 required");
    if (digits < 1) throw std::invalid_argument("zeta: positive precision required");
    const int work = digits + 15;
    PrecisionGuard guard(work);
    const Rational tol = rational_pow10_neg(digits + 8);

    long N = std::max<long>(24, digits);
    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        Rational total(0);
        for (long n = 1; n < N; ++n) {
            Rational t(Integer(1), pow(Integer(n), s));
            t.canonicalize();
            total += t;
        }
        Rational Npow(Integer(1), pow(Integer(N), s));
        Npow.canonicalize();
        total += Npow / 2;                                        // N^-s / 2
        total += Npow * Rational(Integer(N), Integer(s - 1));     // N^{1-s}/(s-1)

        // Correction terms B_{2k}/(2k)! (s)_{2k-1} N^{1-s-2k}; for real s the
        // remainder after K terms is bounded by the first omitted term.
        Rational prev_abs;
        bool ok = false;
        Rational npow_run = Npow / Rational(Integer(N));  // N^{-s-1}
        Rational nsq(Integer(1), Integer(N) * Integer(N));
        for (unsigned k = 1; k <= 400; ++k) {
            Rational term = bernoulli(2 * k) / Rational(factorial(2 * k));
            term *= pochhammer(Rational(s), 2 * k - 1);
            term *= npow_run;  // N^{1-s-2k} = N^{-s-1} * N^{-2(k-1)}... see update below
            Rational a = abs(term);
            if (k > 1 && a > prev_abs) break;  // formally divergent regime
            total += term;
            prev_abs = a;
            if (a < tol) {
                ok = true;
                break;
            }
            npow_run *= nsq;
        }
        if (!ok) continue;

        HighPrecReal out;
        out.value = to_real(total);
        out.error = Real(2 * to_real(prev_abs) + rounding_unit(work) * 4);
        return out;
    }
    throw std::logic_error("zeta: Euler-Maclaurin failed to converge");
}

HighPrecReal zeta3_accelerated(int digits) {
    const int work = digits + 15;
    PrecisionGuard guard(work);
    const Rational tol = rational_pow10_neg(digits + 8);
    Rational total(0), term_abs;
    long n = 1;
    for (;; ++n) {
        Rational term(Integer(1), Integer(n) * Integer(n) * Integer(n) * binomial(2 * n, n));
        term.canonicalize();
        term_abs = term;
        if (n % 2 == 0) term = -term;
        total += term;
        if (term_abs < tol) break;
        if (n > 100000) throw std::logic_error("zeta3_accelerated: no convergence");
    }
    total *= Rational(5, 2);
    HighPrecReal out;
    out.value = to_real(total);
    // alternating with decreasing terms: tail below the last included term
    out.error = Real(to_real(term_abs * Rational(5, 2)) + rounding_unit(work) * 4);
    return out;
}

HighPrecReal polylog(int j, const Rational& x, int digits) {
    if (j < 1) throw std::invalid_argument("polylog: j >= 1 required");
    Rational ax = abs(x);
    if (ax > 1) throw std::invalid_argument("polylog: |x| <= 1 required");
    const int work = digits + 15;
    if (x == 0) {
        PrecisionGuard guard(work);
        return {Real(0), Real(0)};
    }
    if (x == 1) {
        if (j == 1) throw std::invalid_argument("polylog: Li_1(1) diverges");
        return zeta(j, digits);
    }
    if (x == -1) {
        PrecisionGuard guard(work);
        if (j == 1) {
            Real v = Real(-log(Real(2)));
            return {v, Real(rounding_unit(work) * 4)};
        }
        HighPrecReal z = zeta(j, digits + 2);
        Rational factor = -(Rational(1) - pow(Rational(1, 2), j - 1));
        HighPrecReal out;
        out.value = Real(to_real(factor) * z.value);
        out.error = Real(z.error + rounding_unit(work) * 4);
        return out;
    }
    if (ax > Rational(99, 100))
        throw std::invalid_argument("polylog: |x| too close to 1 for direct summation");

    PrecisionGuard guard(work);
    // N with |x|^{N+1}/(1-|x|) < 10^{-(digits+8)}
    double lax = std::log10(::abs(x.get_d()));
    long N = static_cast<long>((digits + 10) / -lax) + 4;
    Real xr = to_real(x);
    Real acc(0), xp(1);
    for (long k = 1; k <= N; ++k) {
        xp *= xr;
        acc += xp / to_real(pow(Integer(k), j));
    }
    Rational tail = pow(ax, N + 1) / (Rational(1) - ax);
    HighPrecReal out;
    out.value = acc;
    out.error = Real(to_real(tail) + rounding_unit(work) * (N + 4));
    return out;
}

HighPrecReal zeta_tail(int j, long M, int digits) {
    if (j < 2) throw std::invalid_argument("zeta_tail: j >= 2 required");
    if (M < 0) throw std::invalid_argument("zeta_tail: M >= 0 required");
    // The tail is ~ M^{1-j}; request enough digits of zeta to survive the
    // cancellation in zeta(j) - partial_sum.
    int cancel = static_cast<int>((j - 1) * std::log10(static_cast<double>(M) + 1)) + 4;
    HighPrecReal z = zeta(j, digits + cancel);
    PrecisionGuard guard(digits + cancel + 15);
    Rational partial(0);
    for (long k = 1; k <= M; ++k) {
        Rational t(Integer(1), pow(Integer(k), j));
        t.canonicalize();
        partial += t;
    }
    HighPrecReal out;
    out.value = Real(z.value - to_real(partial));
    out.error = Real(z.error + rounding_unit(digits + cancel + 15) * 4);
    return out;
}

HighPrecReal linear_form_value(const AperyPair& pair, int digits) {
    int size = std::max(magnitude_digits(pair.u), magnitude_digits(pair.v));
    int internal = digits + size + 10;
    HighPrecReal z3 = zeta(3, internal);
    PrecisionGuard guard(internal + 15);
    HighPrecReal out;
    out.value = Real(to_real(pair.u) * z3.value - to_real(pair.v));
    out.error = Real(to_real(abs(pair.u)) * z3.error + rounding_unit(internal) * 8);
    return out;
}

HighPrecReal linear_form_value(const ZetaLinearForm& form, int digits) {
    int size = magnitude_digits(form.kappa0);
    for (const auto& [s, k] : form.kappa) size = std::max(size, magnitude_digits(k));
    int internal = digits + size + 10;
    PrecisionGuard guard(internal + 15);
    Real acc = to_real(form.kappa0);
    Real err = rounding_unit(internal) * 8;
    for (const auto& [s, k] : form.kappa) {
        if (k == 0) continue;
        HighPrecReal z = zeta(s, internal);
        acc += to_real(k) * z.value;
        err += to_real(abs(k)) * z.error + rounding_unit(internal) * 4;
    }
    return {Real(acc), Real(err)};
}

HighPrecReal linear_form_value(const MinusOneForm& form, int digits) {
    int size = std::max(magnitude_digits(form.one_coeff), magnitude_digits(form.log2_coeff));
    for (const auto& [s, k] : form.zeta_coeff) size = std::max(size, magnitude_digits(k));
    int internal = digits + size + 10;
    PrecisionGuard guard(internal + 15);
    Real acc = to_real(form.one_coeff);
    Real err = rounding_unit(internal) * 8;
    if (form.log2_coeff != 0) {
        acc += to_real(form.log2_coeff) * Real(log(Real(2)));
        err += to_real(abs(form.log2_coeff)) * rounding_unit(internal) * 4;
    }
    for (const auto& [s, k] : form.zeta_coeff) {
        if (k == 0) continue;
        HighPrecReal z = zeta(s, internal);
        acc += to_real(k) * z.value;
        err += to_real(abs(k)) * z.error + rounding_unit(internal) * 4;
    }
    return {Real(acc), Real(err)};
}

RateFit rate_fit(const std::vector<std::pair<long, double>>& log_samples,
                 std::optional<double> reference) {
    if (log_samples.size() < 10)
        throw std::invalid_argument("rate_fit: at least 10 samples required");
    std::size_t start = log_samples.size() / 2;
    std::size_t m = log_samples.size() - start;
    double nbar = 0, ybar = 0;
    for (std::size_t i = start; i < log_samples.size(); ++i) {
        nbar += static_cast<double>(log_samples[i].first);
        ybar += log_samples[i].second;
    }
    nbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);
    double sxy = 0, sxx = 0;
    for (std::size_t i = start; i < log_samples.size(); ++i) {
        double dx = static_cast<double>(log_samples[i].first) - nbar;
        sxy += dx * (log_samples[i].second - ybar);
        sxx += dx * dx;
    }
    RateFit fit;
    fit.slope = sxy / sxx;
    fit.samples_used = m;
    fit.reference = reference;
    if (reference && *reference != 0)
        fit.relative_gap = std::abs(fit.slope - *reference) / std::abs(*reference);
    return fit;
}

namespace {

struct TanhSinhGrid {
    std::vector<long double> x, cx, w;  // node, 1 - node, weight (includes h)
};

// Nodes of tanh-sinh on (0,1): x(t) = 1/(1 + exp(-pi sinh t)), both tails.
TanhSinhGrid tanh_sinh_grid(int level) {
    const long double pi = 3.14159265358979323846264338327950288L;
    long double h = std::pow(2.0L, -level);
    long double T = 6.7L;
    long K = static_cast<long>(T / h);
    TanhSinhGrid g;
    for (long k = -K; k <= K; ++k) {
        long double t = h * static_cast<long double>(k);
        long double s = pi * std::sinh(t);  // 2g with g = (pi/2) sinh t
        long double e = std::exp(-std::fabs(s));
        long double denom = 1.0L + e;
        long double xplus = 1.0L / denom;      // node for s >= 0
        long double xminus = e / denom;        // 1 - xplus
        long double weight = h * (pi / 2.0L) * std::cosh(t) * 4.0L * e / (denom * denom);
        if (weight <= 0.0L) continue;  // underflow far in the tails
        if (s >= 0)
            g.x.push_back(xplus), g.cx.push_back(xminus);
        else
            g.x.push_back(xminus), g.cx.push_back(xplus);
        g.w.push_back(weight);
    }
    return g;
}

long double beukers_level(int n, int level) {
    TanhSinhGrid g = tanh_sinh_grid(level);
    std::size_t m = g.x.size();
    std::vector<long double> face(m);  // (x(1-x))^n * weight per axis node
    for (std::size_t i = 0; i < m; ++i) {
        long double p = 1.0L;
        for (int t = 0; t < n; ++t) p *= g.x[i] * g.cx[i];
        face[i] = p * g.w[i];
    }
    long double total = 0.0L, tc = 0.0L;  // Kahan accumulation
    for (std::size_t iw = 0; iw < m; ++iw) {
        long double wn = g.x[iw], cw = g.cx[iw], fw = face[iw];
        if (fw == 0.0L) continue;
        long double row = 0.0L, rc = 0.0L;
        for (std::size_t iu = 0; iu < m; ++iu) {
            long double a = g.x[iu] * wn, fu = face[iu];
            if (fu == 0.0L) continue;
            long double cell = 0.0L, cc = 0.0L;
            for (std::size_t iv = 0; iv < m; ++iv) {
                long double den = cw + a * g.x[iv];
                long double dp = den;
                for (int t = 0; t < n; ++t) dp *= den;
                long double term = face[iv] / dp;
                long double y = term - cc;
                long double s = cell + y;
                cc = (s - cell) - y;
                cell = s;
            }
            long double y = cell * fu - rc;
            long double s = row + y;
            rc = (s - row) - y;
            row = s;
        }
        long double y = row * fw - tc;
        long double s = total + y;
        tc = (s - total) - y;
        total = s;
    }
    return total;
}

}  // namespace

HighPrecReal beukers_integral(int n, int digits) {
    if (n < 0 || n > 3) throw std::invalid_argument("beukers_integral: only n <= 3 supported");
    if (digits > 12)
        throw std::domain_error("beukers_integral: requested precision beyond quadrature budget");
    PrecisionGuard guard(40);
    long double tol = std::pow(10.0L, -static_cast<long double>(digits));
    long double prev = beukers_level(n, 3);
    for (int level = 4; level <= 6; ++level) {
        long double cur = beukers_level(n, level);
        long double est = std::fabs(cur - prev);
        if (est < tol / 4.0L || level == 6) {
            if (est >= tol / 4.0L)
                throw std::domain_error(
                    "beukers_integral: requested precision beyond quadrature budget");
            HighPrecReal out;
            out.value = Real(static_cast<double>(cur));
            mpfr_set_ld(out.value.backend().data(), cur, MPFR_RNDN);
            out.error = Real(static_cast<double>(est * 4.0L + 1e-17L));
            return out;
        }
        prev = cur;
    }
    throw std::domain_error("beukers_integral: requested precision beyond quadrature budget");
}

double beukers_cube_max() {
    auto value = [](const std::array<double, 3>& p) {
        double u = p[0], v = p[1], w = p[2];
        return u * (1 - u) * v * (1 - v) * w * (1 - w) / (1 - w * (1 - u * v));
    };
    auto clamp01 = [](double x) { return std::min(1.0 - 1e-12, std::max(1e-12, x)); };
    double best = 0;
    for (double u0 : {0.2, 0.4, 0.6, 0.8})
        for (double v0 : {0.2, 0.4, 0.6, 0.8})
            for (double w0 : {0.2, 0.4, 0.6, 0.8}) {
                std::array<double, 3> p{u0, v0, w0};
                double f = value(p);
                double step = 0.1;
                for (int it = 0; it < 400 && step > 1e-14; ++it) {
                    const double h = 1e-7;
                    std::array<double, 3> grad{};
                    for (int d = 0; d < 3; ++d) {
                        auto hi = p, lo = p;
                        hi[d] = clamp01(hi[d] + h);
                        lo[d] = clamp01(lo[d] - h);
                        grad[d] = (value(hi) - value(lo)) / (hi[d] - lo[d]);
                    }
                    double norm = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] +
                                            grad[2] * grad[2]);
                    if (norm == 0) break;
                    std::array<double, 3> q;
                    for (;;) {
                        for (int d = 0; d < 3; ++d)
                            q[d] = clamp01(p[d] + step * grad[d] / norm);
                        if (value(q) > f || step <= 1e-14) break;
                        step *= 0.5;
                    }
                    if (value(q) > f) {
                        p = q;
                        f = value(p);
                        step *= 1.2;
                    }
                }
                best = std::max(best, f);
            }
    return best;
}

}  // namespace zetaforms
