#include "hf/shift.hpp"

#include "hf/determinant.hpp"
#include "hf/errors.hpp"
#include "hf/hankel.hpp"

namespace hf {

PolyMatrix BandMatrix::materialize() const {
    if (n < 0) return PolyMatrix(0);
    if (static_cast<int>(s.size()) <= n || static_cast<int>(t.size()) < n)
        throw ArityError("band matrix parameters too short for size " + std::to_string(n + 1));
    PolyMatrix m(n + 1);
    for (int i = 0; i <= n; ++i) {
        m(i, i) = -s[static_cast<std::size_t>(i)];
        if (i + 1 <= n) m(i, i + 1) = Poly(1);
        if (i >= 1) m(i, i - 1) = t[static_cast<std::size_t>(i - 1)];
    }
    return m;
}

Poly dn_via_recurrence(const std::vector<Poly>& s, const std::vector<Poly>& t, int n) {
    if (n < -1) throw DomainError("d_n needs n >= -1");
    if (n == -1) return Poly(1);
    if (static_cast<int>(s.size()) <= n || static_cast<int>(t.size()) < n)
        throw ArityError("recurrence parameters too short for d_" + std::to_string(n));
    Poly before(1);
    Poly current = -s[0];
    for (int m = 0; m < n; ++m) {
        Poly next = -s[static_cast<std::size_t>(m + 1)] * current - t[static_cast<std::size_t>(m)] * before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

Poly dn_via_determinant(const BandMatrix& m) { return bareiss_determinant(m.materialize()); }

Poly dn0_closed(int n) {
    Poly acc(1);
    for (int l = 0; l <= n; ++l) {
        const Rational odd(2 * l + 1);
        acc *= Poly(std::vector<Rational>{-odd * odd / 4, 0, Rational(1) / 4});
    }
    return acc;
}

BandMatrix euler_band(int nu, int n) {
    BandMatrix b;
    b.n = n;
    for (int i = 0; i <= n; ++i) b.s.push_back(euler_sigma(nu, i));
    for (int i = 1; i <= n; ++i) b.t.push_back(-euler_tau(nu, i));
    return b;
}

Poly shifted_hankel(const Poly& hankel_n, const JacobiParams& params, int n, int shift) {
    if (n < 0) throw DomainError("negative Hankel index");
    if (shift == 1) return hankel_n * dn_via_recurrence(params.s, params.t, n);
    if (shift != 2) throw DomainError("only shifts 1 and 2 are supported");
    if (static_cast<int>(params.t.size()) < n + 1) throw ArityError("need t_1..t_{n+1}");
    Poly sum;
    for (int l = -1; l <= n; ++l) {
        const Poly d = dn_via_recurrence(params.s, params.t, l);
        Poly term = d * d;
        for (int j = l + 2; j <= n + 1; ++j) term *= params.t_at(j);
        sum += term;
    }
    return hankel_n * sum;
}

Poly shifted_hankel(const MomentSeq& seq, int n, int shift) {
    if (shift != 1 && shift != 2) throw DomainError("only shifts 1 and 2 are supported");
    const JacobiParams params = jacobi_from_moments(seq, n + 1);
    return shifted_hankel(hankel_det(seq, n), params, n, shift);
}

Poly s_from_hankel_values(int n, const std::function<Poly(int)>& h, const std::function<Poly(int)>& h_shift) {
    if (n < 0) throw DomainError("s_n needs n >= 0");
    const Poly hn = h(n);
    const Poly hn1 = h(n - 1);
    const Poly hs1 = h_shift(n - 1);
    if (hn.is_zero() || hn1.is_zero() || hs1.is_zero())
        throw DegenerateMomentsError("vanishing Hankel determinant in the shifted-determinant formula for s_" +
                                     std::to_string(n));
    // Common denominator H'_{n-1} H_n H_{n-1}.
    const Poly numerator = hn1 * hn1 * h_shift(n) + hn * hn * h_shift(n - 2);
    return -divide_exact(numerator, hs1 * hn * hn1);
}

Poly s_from_shifted(const MomentSeq& seq, int n) {
    const MomentSeq shifted = make_shifted(seq, 1);
    auto h = [&seq](int m) { return hankel_det(seq, m); };
    auto hs = [&shifted](int m) { return m == -2 ? Poly() : hankel_det(shifted, m); };
    return s_from_hankel_values(n, h, hs);
}

}  // namespace hf
