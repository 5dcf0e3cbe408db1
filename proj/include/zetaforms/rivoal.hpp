#pragma once

#include <vector>

#include "zetaforms/linear_forms.hpp"
#include "zetaforms/numerics.hpp"
#include "zetaforms/partial_fractions.hpp"
#include "zetaforms/polynomial.hpp"
#include "zetaforms/rational.hpp"

namespace zetaforms {

// Parameters of the well-poised family
//   R_n(k) = 2 n!^{a-2r} (k + n/2) (k-rn)_{rn} (k+n+1)_{rn} / (k)_{n+1}^a
struct RivoalParams {
    int a = 4;
    int r = 1;
    long n = 1;

    void validate() const;  // a >= 3, 1 <= r < a/2, n >= 1
    bool a_even() const { return a % 2 == 0; }
};

struct RivoalDecomp {
    RivoalParams params;
    PartialFractionTable table;     // c_{i,j}, poles 0..n, order <= a
    std::vector<Polynomial> P;      // P[0] .. P[a]
};

// The factored product form of R_n (for direct evaluation and summation).
FactoredRational rivoal_factored(const RivoalParams& p);

// Exact c_{i,j} by multiplying the one-pole decompositions of the factors
//   F_s = (X-sn)_n/(X)_{n+1}, G_s = (X+sn+1)_n/(X)_{n+1}, H = n!/(X)_{n+1}
// and absorbing (2X + n); P_j and the tail polynomial P_0 follow.
RivoalDecomp rivoal_decompose(const RivoalParams& p);

// Same coefficients through the derivative formula (Taylor expansion at each
// pole); used to cross-validate the product method.
PartialFractionTable rivoal_table_by_derivatives(const RivoalParams& p);

// P_j(z) = (-1)^{j+a(n+1)+1} z^n P_j(1/z) for j = 1..a, exactly.
bool symmetry_check(const RivoalDecomp& d);

// z = 1 linear form for a even: kappa_0 = P_0(1), kappa_j = P_j(1) for odd
// j in [3, a-1]; asserts P_1(1) = 0, the even-index vanishing and
// d_n^a kappa_j integral.
ZetaLinearForm zeta_form(const RivoalDecomp& d);

// z = 1 forms for a odd: n odd gives zeta(3), zeta(5), ..., zeta(a);
// n even gives zeta(2), zeta(4), ..., zeta(a-1).
ZetaLinearForm odd_a_forms(const RivoalDecomp& d);

// z = -1 specialization via Li_l(-1) = -(1 - 2^{1-l}) zeta(l).
MinusOneForm evaluate_at_minus_one(const RivoalDecomp& d);

// d_n^{a-j} P_j integer-coefficient for all j (the denominator lemma).
bool denominator_lemma_check(const RivoalDecomp& d);

// Searches n <= max_n for an instance where the lemma exponent is sharp,
// i.e. d_n^{a-1-j} P_j is not integral. Returns (n, j) or (-1, -1).
std::pair<long, int> denominator_sharpness_instance(int a, int r, long max_n);

struct BallProbeEntry {
    long n = 0;
    bool reduced_denominator_ok = false;  // d_n^{a-1} kappa_j all integral
};
// Probes whether d_n^{a-1} already clears every coefficient denominator.
std::vector<BallProbeEntry> ball_conjecture_probe(int a, int r, long max_n);

struct RateEstimate {
    Real s0;
    Real phi;
    Real upper_bound;  // 2^{r+1} / (z^r r^{a-2r})
};

// Root of r s^{a+2} - (r+1) s^{a+1} + (r+1) z s - r z in (r/(r+1), 1) by
// bisection, and the decay rate phi it determines.
RateEstimate rate_phi(int r, int a, const Rational& z, int digits);

// Dimension lower bound 1 - log(alpha)/log(beta) for 0 < alpha < 1 < beta.
double nesterenko_bound(double alpha, double beta);

// Direct summation of sum_{k>=1} R(k) z^{-k} for rational z > 1, evaluating R
// from the factored form, with a rigorous geometric tail bound.
HighPrecReal series_direct_sum(const FactoredRational& R, const Rational& z, int digits);

// z = 1 summation of weight * sum_k R^{(d)}(k): the head is evaluated from
// the factored form, the tail beyond it is resummed exactly through zeta
// tails of the partial-fraction table.
HighPrecReal series_sum_z1(const FactoredRational& R, unsigned d, const Rational& weight,
                           const PartialFractionTable& table, int digits);

// Decomposition value P_0(z) + sum_j P_j(z) Li_j(1/z) (z > 1), or with the
// shifted weights j(j+1)/2 and Li_{j+2} when shifted = true.
HighPrecReal decomposition_value(const std::vector<Polynomial>& P, const Rational& z,
                                 int digits, bool shifted = false);

// Shared machinery for the well-poised product templates: multiplies the
// one-pole decompositions of F_s (multiplicities f_mult, s = 1,2,...),
// G_s (g_mult), H^h_count, then absorbs (2X + n).
PartialFractionTable wellpoised_product_table(long n, const std::vector<int>& f_mult,
                                              const std::vector<int>& g_mult, int h_count);

// P_0 from the table (shifted = true applies the j(j+1)/2, exponent j+2
// weights of the twice-differentiated series).
Polynomial tail_polynomial(const PartialFractionTable& t, bool shifted);

// P[0] = tail polynomial, P[j] = sum_i c_{i,j} z^i for j = 1..order.
std::vector<Polynomial> pole_polynomials(const PartialFractionTable& t, int order,
                                         bool shifted);

}  // namespace zetaforms
