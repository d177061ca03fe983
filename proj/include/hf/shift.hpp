#pragma once

#include "hf/determinant.hpp"
#include "hf/orthopoly.hpp"
#include "hf/sequence.hpp"

#include <functional>
#include <vector>

namespace hf {

/// Leading (n+1) x (n+1) block of the tridiagonal matrix with diagonal -s_i,
/// superdiagonal 1 and subdiagonal t_i (row i, column i-1 holds t_i).
struct BandMatrix {
    std::vector<Poly> s;  // s_0, s_1, ...
    std::vector<Poly> t;  // t_1, t_2, ... (t[i] is t_{i+1})
    int n = 0;

    PolyMatrix materialize() const;
};

/// d_n = det of the leading block, by  d_{n+1} = -s_{n+1} d_n - t_{n+1} d_{n-1},
/// d_{-1} = 1, d_0 = -s_0. For the published (sigma, tau) families (t = -tau)
/// this reads d_{n+1} = -sigma_{n+1} d_n + tau_{n+1} d_{n-1}.
/// ArityError if s_0..s_n or t_1..t_n are missing.
Poly dn_via_recurrence(const std::vector<Poly>& s, const std::vector<Poly>& t, int n);

/// The same d_n as an exact determinant of the materialized band matrix.
Poly dn_via_determinant(const BandMatrix& m);

/// prod_{l=0}^{n} (x^2 - (2l+1)^2) / 4
Poly dn0_closed(int n);

/// Band matrix of the Euler family with parameter nu (subdiagonal -tau_i).
BandMatrix euler_band(int nu, int n);

/// H_n(a_{k+shift}) from data of the unshifted sequence:
///   shift 1:  H_n(a) d_n
///   shift 2:  H_n(a) sum_{l=-1}^{n} d_l^2 prod_{j=l+2}^{n+1} t_j
/// (the second is H_n(a) (prod_{l=1}^{n+1} t_l) sum_l d_l^2 / prod_{j=1}^{l+1} t_j
/// with the division carried out term by term).
Poly shifted_hankel(const MomentSeq& seq, int n, int shift);

/// The same from already extracted parameters (s_0..s_n, t_1..t_{n+1}).
Poly shifted_hankel(const Poly& hankel_n, const JacobiParams& params, int n, int shift);

/// s_n from Hankel determinants of the sequence and of its shift by one:
///   s_n = -(H_{n-1} H'_n / H_n + H_n H'_{n-2} / H_{n-1}) / H'_{n-1},
/// where h(m) = H_m(a_k) for m >= -1 (h(-1) = 1) and h_shift(m) = H_m(a_{k+1})
/// for m >= -2 (h_shift(-1) = 1, h_shift(-2) = 0).
/// DegenerateMomentsError when a divisor vanishes.
Poly s_from_hankel_values(int n, const std::function<Poly(int)>& h, const std::function<Poly(int)>& h_shift);

Poly s_from_shifted(const MomentSeq& seq, int n);

}  // namespace hf
