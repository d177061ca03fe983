#pragma once

#include "hf/determinant.hpp"
#include "hf/sequence.hpp"

#include <string>

namespace hf {

/// The (n+1) x (n+1) Hankel matrix (c_{i+j})_{0 <= i,j <= n}.
///
/// Index convention everywhere in this library: H_n is the determinant of
/// the (n+1) x (n+1) matrix, so H_0 = c_0.
struct HankelMatrix {
    int n = 0;
    PolyMatrix entries;
    std::string source;

    const Poly& operator()(int i, int j) const { return entries(i, j); }
    int size() const { return n + 1; }
};

HankelMatrix hankel_matrix(const MomentSeq& seq, int n);

/// H_n(seq) by Bareiss elimination. H_{-1} = 1 by convention.
Poly hankel_det(const MomentSeq& seq, int n);

/// (-1)^{C(n+1,2)} prod_{l=1}^{n} [l^4 / (4(2l+1)(2l-1))]^{n+1-l}  — H_n(B_k).
Rational closed_bernoulli_numbers(int n);

/// (-1)^{C(n+1,2)} (x/2)^{n+1} prod_{l=1}^{n} [l^4 (x^2 - l^2) / (4(2l+1)(2l-1))]^{n+1-l}
/// — H_n(B_{2k+1}((x+1)/2)), expanded.
Poly closed_bernoulli_odd(int n);

enum class EulerClosedKind {
    numbers,      // H_n(E_k)
    polynomials,  // H_n(E_k(x))
    nu0,          // H_n(E_{2k}((x+1)/2))
    nu1,          // H_n(E_{2k+1}((x+1)/2))
    nu2,          // H_n(E_{2k+2}((x+1)/2))
};

/// Product formulas for the Euler families, expanded.
Poly closed_euler(EulerClosedKind kind, int n);

/// prod_{l=1}^{n} [l^4 (2l-1)^4 / ((4l-3)(4l-1)^2(4l+1))]^{n-l+1}  — H_n(B_{2k}(1/2)).
Rational closed_chen(int n);

/// A polynomial written as  constant * x^x_power * prod_l (x^2 - l^2)^e_l * residual,
/// with residual monic (1 when the polynomial splits completely this way).
struct EvenLinearFactorization {
    Rational constant;
    int x_power = 0;
    std::vector<std::pair<int, int>> factors;  // (l, e_l), increasing l
    Poly residual{1};

    Poly expand() const;
};

/// Strips factors x and (x^2 - l^2), l = 1, 2, ..., by exact trial division.
/// The zero polynomial is a DomainError.
EvenLinearFactorization factor_even_linear(const Poly& p);

/// Factored form in the layout of a printed table, e.g.
/// -\frac{1}{4\,320}x^3(x^2-1)^2(x^2-2^2)
std::string render_factored_latex(const EvenLinearFactorization& f);
/// Plain-text factored form, e.g.  -1/4320 * x^3 * (x^2-1)^2 * (x^2-4)
std::string render_factored_plain(const EvenLinearFactorization& f);

}  // namespace hf
