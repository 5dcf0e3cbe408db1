#pragma once

#include <initializer_list>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Dense polynomial over the rationals, coefficients lowest-degree first.
// The zero polynomial is the empty coefficient vector (degree -1).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c) { coeffs_.push_back(c); normalize(); }
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }

    static Polynomial monomial(const Rational& c, std::size_t degree);
    static Polynomial variable() { return monomial(Rational(1), 1); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(std::size_t i) const;
    void set_coeff(std::size_t i, const Rational& c);
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;  // Horner evaluation
    Rational at_one() const;                       // sum of coefficients

    Polynomial derivative() const;
    // z^n * p(1/z); requires degree() <= n
    Polynomial reversed(std::size_t n) const;

    bool integer_coefficients() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;  // human-readable, for reports and failures

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// (p)_k = p (p+1) ... (p+k-1) with a polynomial base
Polynomial pochhammer(const Polynomial& p, unsigned long k);

}  // namespace zetaforms
