#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Coefficients c_{i,j} of a decomposition  sum_{i,j} c_{i,j} / (X + i)^j
// over a contiguous block of integer poles -i.
struct PartialFractionTable {
    long first_pole = 0;                      // smallest pole index i
    std::vector<std::vector<Rational>> rows;  // rows[k][j-1] = c_{first_pole+k, j}

    std::size_t pole_count() const { return rows.size(); }
    long last_pole() const { return first_pole + static_cast<long>(rows.size()) - 1; }
    std::size_t max_order() const;

    Rational c(long i, std::size_t j) const;  // 0 outside the stored block
    void add(long i, std::size_t j, const Rational& v);

    // Value of the represented rational function at x (x must avoid all poles).
    Rational eval(const Rational& x) const;
    // m-th derivative of the represented function at x.
    Rational eval_derivative(const Rational& x, unsigned m) const;
    // Sum of simple-pole coefficients = minus the residue at infinity.
    Rational residue_sum() const;
};

// Table with only simple poles first_pole..first_pole+residues.size()-1.
PartialFractionTable pf_from_residues(long first_pole, const std::vector<Rational>& residues);

// Exact product of the rational functions behind two tables, the second one
// restricted to simple poles. Splits cross terms with
//   1/((X+p)(X+p')) = 1/((p'-p)(X+p)) + 1/((p-p')(X+p'))
// and its higher-order analogue, which is where all denominators come from.
PartialFractionTable pf_multiply_simple(const PartialFractionTable& t,
                                        const PartialFractionTable& simple);

// Multiplies by (2X + b). The constant produced by the simple-pole entries
// must cancel (the function decays at infinity); throws otherwise.
PartialFractionTable pf_multiply_2x_plus(PartialFractionTable t, const Rational& b);

void pf_scale(PartialFractionTable& t, const Rational& s);

// A rational function kept in fully factored form:
//   prefactor * prod_over_roots (X - root)^exponent.
struct FactoredRational {
    Rational prefactor{1};
    std::map<Rational, int> exponents;  // root -> net exponent

    void multiply_root(const Rational& root, int exponent);
    // (X + shift)_len ^ exponent, i.e. roots -shift, -shift-1, ..., -shift-len+1
    void multiply_pochhammer(const Rational& shift, unsigned long len, int exponent);

    // Value / first / second derivative at x, correct when some factors vanish
    // at x (zero of positive order); x must not be a pole.
    Rational value(const Rational& x) const;
    Rational derivative1(const Rational& x) const;
    Rational derivative2(const Rational& x) const;
};

// Partial fractions of a factored rational function via Taylor expansion of
// R(X) (X+i)^{m_i} around each pole (the derivative formula for c_{i,j},
// evaluated through logarithmic differentiation). All poles must be integers
// and the function must vanish at infinity.
PartialFractionTable pf_from_factored(const FactoredRational& f);

}  // namespace zetaforms
