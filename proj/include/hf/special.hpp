#pragma once

#include "hf/poly.hpp"

namespace hf {

/// B_n from  sum_{j=0}^{n} C(n+1, j) B_j = 0,  B_0 = 1  (so B_1 = -1/2).
Rational bernoulli_number(int n);

/// E_n from  sum_j C(2n, 2j) E_{2j} = 0,  E_0 = 1;  odd-index values vanish.
Rational euler_number(int n);

/// B_n(x) = sum_j C(n, j) B_j x^(n-j).
Poly bernoulli_poly(int n);

/// E_n(x) = sum_j C(n, j) (E_j / 2^j) (x - 1/2)^(n-j).
Poly euler_poly(int n);

/// (x + 1) / 2, the argument substitution used throughout.
Poly half_shift();

/// B_n(1-x) = (-1)^n B_n(x) and E_n(1-x) = (-1)^n E_n(x).
bool verify_reflection(int n);

/// E_{n-1}(x) = (2^n / n) (B_n((x+1)/2) - B_n(x/2)), and the quarter-argument
/// form E_{n-1}((x+1)/2) = (2^n / n) (B_n((3+x)/4) - B_n((1+x)/4)). n >= 1.
bool verify_euler_from_bernoulli(int n);

}  // namespace hf
