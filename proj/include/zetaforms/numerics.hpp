#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "zetaforms/apery.hpp"
#include "zetaforms/linear_forms.hpp"
#include "zetaforms/rational.hpp"

namespace zetaforms {

using Real = boost::multiprecision::mpfr_float;

// Sets the default precision (decimal digits) for the lifetime of the guard.
// Numeric entry points take a requested digit count and run with guard digits
// on top.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

// Value plus a certified absolute error bound.
struct HighPrecReal {
    Real value;
    Real error;

    bool certifies(int digits) const;  // error <= 10^-digits
    std::string str(int digits) const;
};

Real to_real(const Rational& q);  // at current default precision
Real to_real(const Integer& z);

Real abs_diff(const Real& a, const Real& b);

// Bernoulli number B_m (B_1 = -1/2), cached.
Rational bernoulli(unsigned m);

// zeta(s) for integer s >= 2 via exact-rational Euler-Maclaurin; the only
// error sources are the analytic remainder bound and one final rounding.
HighPrecReal zeta(int s, int digits);

// zeta(3) summed from the accelerated central-binomial series, as an
// independent cross-check of the Euler-Maclaurin route.
HighPrecReal zeta3_accelerated(int digits);

// Li_j(x) for |x| <= 1; x = 1 requires j >= 2 (zeta), x = -1 uses the exact
// alternating-zeta reduction, and |x| < 1 is summed directly with a
// geometric tail bound.
HighPrecReal polylog(int j, const Rational& x, int digits);

// sum_{k > M} k^{-j} for j >= 2.
HighPrecReal zeta_tail(int j, long M, int digits);

HighPrecReal linear_form_value(const AperyPair& pair, int digits);
HighPrecReal linear_form_value(const ZetaLinearForm& form, int digits);
HighPrecReal linear_form_value(const MinusOneForm& form, int digits);

struct RateFit {
    double slope = 0;
    std::size_t samples_used = 0;
    std::optional<double> reference;
    double relative_gap = 0;  // |slope - reference| / |reference| when reference given
};

// Least-squares slope of log|value| against n, restricted to the last half of
// the samples (the pre-asymptotic head would bias the estimate).
RateFit rate_fit(const std::vector<std::pair<long, double>>& log_samples,
                 std::optional<double> reference = std::nullopt);

// Triple integral over the unit cube of
//   (u(1-u) v(1-v) w(1-w))^n / ((1-w) + u v w)^{n+1}
// by tanh-sinh tensor quadrature with a two-level error estimate.
// Rejects n > 3 and precision requests beyond the quadrature budget.
HighPrecReal beukers_integral(int n, int digits);

// Maximum of u(1-u)v(1-v)w(1-w) / (1 - w(1-uv)) over the unit cube via
// multistart projected gradient ascent.
double beukers_cube_max();

}  // namespace zetaforms
