#include "zetaforms/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zetaforms {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

PowerSeries PowerSeries::zero(std::size_t order) {
    PowerSeries s;
    s.coeffs_.assign(order + 1, Rational(0));
    return s;
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
    PowerSeries s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::identity(std::size_t order) {
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    PowerSeries s = zero(order);
    s.coeffs_[1] = 1;
    return s;
}

const Rational& PowerSeries::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw std::out_of_range("series coefficient past truncation order");
    return coeffs_[i];
}

void PowerSeries::set_coeff(std::size_t i, const Rational& c) {
    if (i >= coeffs_.size())
        throw std::out_of_range("series coefficient past truncation order");
    coeffs_[i] = c;
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
    if (new_order > order())
        throw std::out_of_range("cannot extend a series past its truncation order");
    PowerSeries s = *this;
    s.coeffs_.resize(new_order + 1);
    return s;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) throw std::out_of_range("derivative of an order-0 series is unknown");
    PowerSeries d = zero(order() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.coeffs_[i - 1] = coeffs_[i] * static_cast<long>(i);
    return d;
}

bool PowerSeries::integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return is_integer(c); });
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r = PowerSeries::zero(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r = PowerSeries::zero(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r = PowerSeries::zero(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(coeffs_[i]);
    }
    os << "] + O(t^" << coeffs_.size() << ")";
    return os.str();
}

PowerSeries multiply_polynomial(const Polynomial& p, const PowerSeries& s) {
    if (p.is_zero()) return PowerSeries::zero(s.order());
    std::size_t low = 0;
    while (p.coeff(low) == 0) ++low;
    std::size_t n = s.order() + low;
    PowerSeries r = PowerSeries::zero(n);
    for (std::size_t j = low; j <= static_cast<std::size_t>(p.degree()); ++j) {
        if (p.coeff(j) == 0) continue;
        for (std::size_t i = 0; i + j <= n && i <= s.order(); ++i)
            r.set_coeff(i + j, r.coeff(i + j) + p.coeff(j) * s.coeff(i));
    }
    return r;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (inner.coeff(0) != 0)
        throw std::invalid_argument("compose: inner series must have zero constant term");
    std::size_t n = std::min(outer.order(), inner.order());
    // Horner on the truncated outer coefficients.
    PowerSeries acc = PowerSeries::constant(outer.coeff(n), n);
    PowerSeries x = inner.truncated(n);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * x;
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(i));
    }
    return acc;
}

PowerSeries series_reversion(const PowerSeries& s) {
    if (s.coeff(0) != 0)
        throw std::invalid_argument("series_reversion: constant term must be 0");
    if (s.order() < 1 || s.coeff(1) != 1)
        throw std::invalid_argument("series_reversion: linear coefficient must be 1");
    std::size_t n = s.order();
    PowerSeries r = PowerSeries::identity(n);
    // Fix one coefficient per pass: if s(r(t)) = t + e*t^m + ..., the
    // correction r_m -= e kills the t^m error without touching lower orders.
    for (std::size_t m = 2; m <= n; ++m) {
        PowerSeries err = compose(s, r);
        r.set_coeff(m, r.coeff(m) - err.coeff(m));
    }
    return r;
}

}  // namespace zetaforms
