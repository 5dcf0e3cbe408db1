#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Exact linear form kappa_0 + sum_s kappa_s zeta(s) produced by evaluating a
// polylogarithm decomposition at z = 1. Arguments whose coefficients are
// forced to vanish by symmetry are recorded (and asserted zero on build).
struct ZetaLinearForm {
    Rational kappa0;
    std::map<int, Rational> kappa;  // zeta argument -> exact coefficient
    std::vector<int> vanished_args;
    std::string construction;
    int a = 0, r = 0;
    long n = 0;

    Rational coefficient(int s) const {
        auto it = kappa.find(s);
        return it == kappa.end() ? Rational(0) : it->second;
    }
};

// The z = -1 specialization: coefficients on 1, log 2 and zeta values after
// substituting Li_l(-1) = -(1 - 2^{1-l}) zeta(l), Li_1(-1) = -log 2.
struct MinusOneForm {
    Rational one_coeff;
    Rational log2_coeff;
    std::map<int, Rational> zeta_coeff;
    std::string construction;
    int a = 0, r = 0;
    long n = 0;
};

}  // namespace zetaforms
