#pragma once

#include "hf/sequence.hpp"
#include "hf/ypoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hf {

/// Three-term recurrence data
///   P_0 = 1,  P_1 = y + s_0,  P_{n+1} = (y + s_n) P_n - t_n P_{n-1},
/// equivalently the J-fraction  c0 / (1 + s_0 t - t_1 t^2 / (1 + s_1 t - ...)).
///
/// s[i] is s_i; t[i] is t_{i+1} (there is no t_0).
struct JacobiParams {
    Poly c0;
    std::vector<Poly> s;
    std::vector<Poly> t;

    const Poly& t_at(int n) const;  // t_n, n >= 1
};

/// Linear functional y^k -> c_k applied to p (the constant term maps through c_0).
Poly apply_functional(const MomentSeq& seq, const YPoly& p);

/// Monic P_n from the bordered Hankel determinant divided by H_{n-1}.
/// DegenerateMomentsError when H_{n-1} = 0; ExactDivisionError when a
/// coefficient of P_n is not a polynomial in x.
YPoly orth_poly_det(const MomentSeq& seq, int n);

/// P_n from the recurrence. ArityError unless s_0..s_{n-1} and t_1..t_{n-1} exist.
YPoly orth_poly_rec(const JacobiParams& params, int n);

/// s_0..s_{depth-1}, t_1..t_depth and c0 from raw moments:
///   t_n = H_n H_{n-2} / H_{n-1}^2   (H_{-1} = 1),
/// s_n from once-shifted Hankel determinants (see s_from_shifted), falling back
/// to the subleading coefficients of the determinant polynomials,
///   s_n = [y^n] P_{n+1} - [y^{n-1}] P_n,
/// when the shifted determinant used as a divisor vanishes.
/// DegenerateMomentsError when H_n = 0 for some n < depth.
JacobiParams jacobi_from_moments(const MomentSeq& seq, int depth);

/// Families with published recurrences. Their own sign convention is
///   F_{n+1} = (y + sigma_n) F_n + tau_n F_{n-1},
/// so in JacobiParams terms s_n = sigma_n and t_n = -tau_n.
struct Family {
    enum class Kind { touchard, alsalam_carlitz, bernoulli_odd, euler_nu };
    Kind kind = Kind::touchard;
    int nu = 0;  // euler_nu only, 0 <= nu <= 2

    /// touchard | alsalam-carlitz | bernoulli-odd | euler-nu0 | euler-nu1 | euler-nu2
    static Family parse(std::string_view name);
    std::string str() const;
    static std::vector<Family> all();
};

/// sigma_n = C(n+1, 2) - (x^2 - 1)/4
Poly bernoulli_odd_sigma(int n);
/// tau_n = n^4 (x^2 - n^2) / (4 (2n+1)(2n-1)),  n >= 1
Poly bernoulli_odd_tau(int n);
/// sigma_n = (2n+1)(n + nu/2) - (x^2 - 1)/4
Poly euler_sigma(int nu, int n);
/// tau_n = n^2/4 (x^2 - (2n + nu - 1)^2),  n >= 1
Poly euler_tau(int nu, int n);

Poly family_sigma(const Family& f, int n);
Poly family_tau(const Family& f, int n);

/// The moments the family is orthogonal for.
SequenceSpec family_sequence(const Family& f);
/// c0 = first moment of family_sequence(f).
Poly family_c0(const Family& f);
/// s_n = sigma_n (n < depth), t_n = -tau_n (1 <= n <= depth).
JacobiParams family_params(const Family& f, int depth);

/// n-th member from the published recurrence.
YPoly named_family(const Family& f, int n);

/// Functional of y^r P_n, P_n from orth_poly_det. Zero for r < n and
/// H_n / H_{n-1} for r = n.
Poly verify_orthogonality(const MomentSeq& seq, int n, int r);

}  // namespace hf
