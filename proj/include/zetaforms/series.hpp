#pragma once

#include <vector>

#include "zetaforms/polynomial.hpp"
#include "zetaforms/rational.hpp"

namespace zetaforms {

// Truncated formal power series: coefficients 0..order() are exact, anything
// beyond is unknown. Accessing or claiming coefficients past the truncation
// order throws instead of silently extending with zeros.
class PowerSeries {
  public:
    PowerSeries() : coeffs_(1, Rational(0)) {}
    explicit PowerSeries(std::vector<Rational> coeffs);
    static PowerSeries zero(std::size_t order);
    static PowerSeries constant(const Rational& c, std::size_t order);
    static PowerSeries identity(std::size_t order);  // t, truncated at `order`

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t i) const;
    void set_coeff(std::size_t i, const Rational& c);
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PowerSeries truncated(std::size_t new_order) const;
    PowerSeries derivative() const;  // order drops by one
    bool integer_coefficients() const;
    bool is_zero() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    PowerSeries& operator*=(const Rational& c);

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;  // size = order + 1
};

// p(t) * s(t). Knowledge extends to order() + (lowest nonzero power of p):
// every coefficient up to there only involves known coefficients of s.
PowerSeries multiply_polynomial(const Polynomial& p, const PowerSeries& s);

// outer(inner(t)); inner must have zero constant term.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// Compositional inverse of s, requiring s(0) = 0 and s'(0) = 1:
// returns r with s(r(t)) = t through the truncation order.
PowerSeries series_reversion(const PowerSeries& s);

}  // namespace zetaforms
