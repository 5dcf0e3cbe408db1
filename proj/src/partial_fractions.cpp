#include "zetaforms/partial_fractions.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetaforms {

std::size_t PartialFractionTable::max_order() const {
    std::size_t m = 0;
    for (const auto& row : rows) m = std::max(m, row.size());
    return m;
}

Rational PartialFractionTable::c(long i, std::size_t j) const {
    if (j == 0) throw std::invalid_argument("pole order starts at 1");
    long k = i - first_pole;
    if (k < 0 || k >= static_cast<long>(rows.size())) return Rational(0);
    const auto& row = rows[static_cast<std::size_t>(k)];
    if (j > row.size()) return Rational(0);
    return row[j - 1];
}

void PartialFractionTable::add(long i, std::size_t j, const Rational& v) {
    if (j == 0) throw std::invalid_argument("pole order starts at 1");
    if (rows.empty()) first_pole = i;
    if (i < first_pole) {
        rows.insert(rows.begin(), static_cast<std::size_t>(first_pole - i), {});
        first_pole = i;
    } else if (i > last_pole()) {
        rows.resize(rows.size() + static_cast<std::size_t>(i - last_pole()));
    }
    auto& row = rows[static_cast<std::size_t>(i - first_pole)];
    if (row.size() < j) row.resize(j, Rational(0));
    row[j - 1] += v;
}

Rational PartialFractionTable::eval(const Rational& x) const {
    Rational total(0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        Rational base = x + Rational(first_pole + static_cast<long>(k));
        if (base == 0) throw std::domain_error("evaluation at a pole");
        Rational inv = Rational(1) / base;
        Rational p = inv;
        for (std::size_t j = 0; j < rows[k].size(); ++j) {
            if (rows[k][j] != 0) total += rows[k][j] * p;
            p *= inv;
        }
    }
    return total;
}

Rational PartialFractionTable::eval_derivative(const Rational& x, unsigned m) const {
    // d^m/dx^m (x+i)^{-j} = (-1)^m (j)_m (x+i)^{-j-m}
    Rational total(0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        Rational base = x + Rational(first_pole + static_cast<long>(k));
        if (base == 0) throw std::domain_error("evaluation at a pole");
        for (std::size_t j = 1; j <= rows[k].size(); ++j) {
            const Rational& cij = rows[k][j - 1];
            if (cij == 0) continue;
            Rational w = pochhammer(Rational(static_cast<long>(j)), m);
            if (m % 2 == 1) w = -w;
            total += cij * w / pow(base, static_cast<unsigned long>(j + m));
        }
    }
    return total;
}

Rational PartialFractionTable::residue_sum() const {
    Rational total(0);
    for (const auto& row : rows)
        if (!row.empty()) total += row[0];
    return total;
}

PartialFractionTable pf_from_residues(long first_pole, const std::vector<Rational>& residues) {
    PartialFractionTable t;
    t.first_pole = first_pole;
    t.rows.reserve(residues.size());
    for (const auto& r : residues) t.rows.push_back({r});
    return t;
}

PartialFractionTable pf_multiply_simple(const PartialFractionTable& t,
                                        const PartialFractionTable& simple) {
    PartialFractionTable out;
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        long i = t.first_pole + static_cast<long>(k);
        for (std::size_t j = 1; j <= t.rows[k].size(); ++j) {
            const Rational& cij = t.rows[k][j - 1];
            if (cij == 0) continue;
            for (std::size_t l = 0; l < simple.rows.size(); ++l) {
                if (simple.rows[l].size() != 1)
                    throw std::invalid_argument("pf_multiply_simple: second factor not simple");
                long q = simple.first_pole + static_cast<long>(l);
                const Rational& e = simple.rows[l][0];
                if (e == 0) continue;
                Rational ce = cij * e;
                if (q == i) {
                    out.add(i, j + 1, ce);
                    continue;
                }
                // 1/((X+i)^j (X+q)) = sum_m (-1)^{j-m} (q-i)^{-(j-m+1)} /(X+i)^m
                //                     + (i-q)^{-j} /(X+q)
                Rational d(q - i);
                Rational dp = Rational(1) / d;  // d^{-(j-m+1)} built from m = j down
                for (std::size_t m = j; m >= 1; --m) {
                    Rational term = ce * dp;
                    if ((j - m) % 2 == 1) term = -term;
                    out.add(i, m, term);
                    dp /= d;
                }
                Rational at_q = ce * pow_si(Rational(i - q), -static_cast<long>(j));
                out.add(q, 1, at_q);
            }
        }
    }
    return out;
}

PartialFractionTable pf_multiply_2x_plus(PartialFractionTable t, const Rational& b) {
    // (2X + b)/(X+i)^j = 2/(X+i)^{j-1} + (b - 2i)/(X+i)^j ; for j = 1 the
    // first piece is the constant 2, and all such constants must cancel.
    PartialFractionTable out;
    out.first_pole = t.first_pole;
    out.rows.resize(t.rows.size());
    Rational constant(0);
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        long i = t.first_pole + static_cast<long>(k);
        for (std::size_t j = 1; j <= t.rows[k].size(); ++j) {
            const Rational& cij = t.rows[k][j - 1];
            if (cij == 0) continue;
            if (j == 1)
                constant += 2 * cij;
            else
                out.add(i, j - 1, 2 * cij);
            out.add(i, j, cij * (b - 2 * Rational(i)));
        }
    }
    if (constant != 0)
        throw std::logic_error("pf_multiply_2x_plus: function does not vanish at infinity");
    return out;
}

void pf_scale(PartialFractionTable& t, const Rational& s) {
    for (auto& row : t.rows)
        for (auto& v : row) v *= s;
}

void FactoredRational::multiply_root(const Rational& root, int exponent) {
    if (exponent == 0) return;
    auto [it, inserted] = exponents.emplace(root, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0) exponents.erase(it);
    }
}

void FactoredRational::multiply_pochhammer(const Rational& shift, unsigned long len,
                                           int exponent) {
    for (unsigned long u = 0; u < len; ++u)
        multiply_root(-shift - Rational(static_cast<long>(u)), exponent);
}

namespace {

// Taylor coefficients of W(eps) where R(x0 + eps) = eps^m W(eps) and m is the
// net vanishing order of R at x0. Uses log-differentiation: the log of the
// nonvanishing part has Taylor coefficients built from power sums of
// 1/(x0 - root), and exp is recovered by the standard recurrence.
std::vector<Rational> shifted_taylor(const FactoredRational& f, const Rational& x0,
                                     std::size_t terms, long& vanishing_order) {
    vanishing_order = 0;
    Rational w0 = f.prefactor;
    std::vector<Rational> log_coeff(terms, Rational(0));  // log_coeff[t-1] = L_t
    for (const auto& [root, e] : f.exponents) {
        if (root == x0) {
            vanishing_order += e;
            continue;
        }
        Rational base = x0 - root;
        w0 *= pow_si(base, e);
        Rational inv = Rational(1) / base;
        Rational p = inv;
        for (std::size_t t = 1; t <= terms; ++t) {
            Rational term = Rational(e) * p / Rational(static_cast<long>(t));
            if (t % 2 == 0) term = -term;
            log_coeff[t - 1] += term;
            p *= inv;
        }
    }
    // exp of sum L_t eps^t: E_0 = 1, k E_k = sum_{t=1}^{k} t L_t E_{k-t}
    std::vector<Rational> e(terms + 1, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= terms; ++k) {
        Rational acc(0);
        for (std::size_t t = 1; t <= k; ++t)
            acc += Rational(static_cast<long>(t)) * log_coeff[t - 1] * e[k - t];
        e[k] = acc / Rational(static_cast<long>(k));
    }
    for (auto& x : e) x *= w0;
    return e;
}

}  // namespace

Rational FactoredRational::value(const Rational& x) const {
    long m = 0;
    auto w = shifted_taylor(*this, x, 0, m);
    if (m < 0) throw std::domain_error("evaluation at a pole");
    return m == 0 ? w[0] : Rational(0);
}

Rational FactoredRational::derivative1(const Rational& x) const {
    long m = 0;
    auto w = shifted_taylor(*this, x, 1, m);
    if (m < 0) throw std::domain_error("evaluation at a pole");
    if (m == 0) return w[1];
    if (m == 1) return w[0];
    return Rational(0);
}

Rational FactoredRational::derivative2(const Rational& x) const {
    long m = 0;
    auto w = shifted_taylor(*this, x, 2, m);
    if (m < 0) throw std::domain_error("evaluation at a pole");
    if (m == 0) return 2 * w[2];
    if (m == 1) return 2 * w[1];
    if (m == 2) return 2 * w[0];
    return Rational(0);
}

PartialFractionTable pf_from_factored(const FactoredRational& f) {
    long num_degree = 0, den_degree = 0;
    for (const auto& [root, e] : f.exponents)
        (e > 0 ? num_degree : den_degree) += (e > 0 ? e : -e);
    if (num_degree >= den_degree)
        throw std::invalid_argument("pf_from_factored: function must vanish at infinity");
    PartialFractionTable out;
    for (const auto& [root, e] : f.exponents) {
        if (e >= 0) continue;
        if (!is_integer(root))
            throw std::invalid_argument("pf_from_factored: non-integer pole");
        std::size_t m = static_cast<std::size_t>(-e);
        long pole_i = -static_cast<long>(root.get_num().get_si());
        // c_{i,j} = [eps^{m-j}] of R(x0+eps) * eps^m around x0 = -i
        long order_check = 0;
        auto w = shifted_taylor(f, root, m - 1, order_check);
        for (std::size_t j = 1; j <= m; ++j)
            if (w[m - j] != 0) out.add(pole_i, j, w[m - j]);
    }
    return out;
}

}  // namespace zetaforms
