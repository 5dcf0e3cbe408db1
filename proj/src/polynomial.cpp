#include "zetaforms/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaforms {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

const Rational& Polynomial::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

void Polynomial::set_coeff(std::size_t i, const Rational& c) {
    if (i >= coeffs_.size()) coeffs_.resize(i + 1, Rational(0));
    coeffs_[i] = c;
    normalize();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational Polynomial::at_one() const {
    Rational r(0);
    for (const auto& c : coeffs_) r += c;
    return r;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (coeffs_.size() <= 1) return d;
    d.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.coeffs_[i - 1] = coeffs_[i] * static_cast<long>(i);
    d.normalize();
    return d;
}

Polynomial Polynomial::reversed(std::size_t n) const {
    if (degree() > static_cast<long>(n))
        throw std::invalid_argument("reversed: degree exceeds window");
    Polynomial r;
    r.coeffs_.assign(n + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[n - i] = coeffs_[i];
    r.normalize();
    return r;
}

bool Polynomial::integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("polynomial division by zero");
    for (auto& x : coeffs_) x /= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << to_string(coeffs_[i]);
        if (i >= 1) os << "*z^" << i;
        first = false;
    }
    return os.str();
}

Polynomial pochhammer(const Polynomial& p, unsigned long k) {
    Polynomial r{Rational(1)};
    for (unsigned long t = 0; t < k; ++t) {
        Polynomial shifted = p;
        shifted += Polynomial(Rational(static_cast<long>(t)));
        r *= shifted;
    }
    return r;
}

}  // namespace zetaforms
