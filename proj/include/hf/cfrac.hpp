#pragma once

#include "hf/errors.hpp"
#include "hf/orthopoly.hpp"
#include "hf/poly.hpp"
#include "hf/rational.hpp"
#include "hf/series.hpp"

#include <functional>
#include <string>

namespace hf {

/// Ring operations a continued-fraction element type must provide.
template <class T>
struct CfRing;

template <>
struct CfRing<Rational> {
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational divide(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct CfRing<Poly> {
    static bool is_zero(const Poly& v) { return v.is_zero(); }
    static Poly one(const Poly&) { return Poly(1); }
    static Poly zero(const Poly&) { return Poly(); }
    static Poly divide(const Poly& a, const Poly& b) { return divide_exact(a, b); }
};

template <>
struct CfRing<TruncSeries> {
    static bool is_zero(const TruncSeries& v) { return v.is_zero(); }
    // Exact constants, precise enough not to limit products with `like`.
    static TruncSeries one(const TruncSeries& like) {
        return TruncSeries::constant(like.var(), Poly(1), like.order() - std::min(0, like.min_exp()));
    }
    static TruncSeries zero(const TruncSeries& like) {
        return TruncSeries(like.var(), 0, like.order() - std::min(0, like.min_exp()));
    }
    static TruncSeries divide(const TruncSeries& a, const TruncSeries& b) { return hf::divide(a, b); }
};

/// b0 + a_1/(b_1 + a_2/(b_2 + ...)), partial quantities given by pure generators.
template <class T>
struct ContinuedFraction {
    T b0;
    std::function<T(int)> partial_num;  // a_m, m >= 1
    std::function<T(int)> partial_den;  // b_m, m >= 1
    int depth_hint = 0;
};

/// n-th numerator and denominator, A_n / B_n being the n-th approximant.
/// If some a_m (m <= n) vanishes the fraction terminates: the result is the
/// exact finite value (index m - 1) with `terminated` set.
template <class T>
struct Approximant {
    T numerator;
    T denominator;
    int index = 0;
    bool terminated = false;
};

template <class T>
Approximant<T> cf_approximant(const ContinuedFraction<T>& cf, int n) {
    using R = CfRing<T>;
    if (n < 0) throw DomainError("approximant index must be nonnegative");
    T a_prev = R::one(cf.b0);  // A_{-1}
    T a_cur = cf.b0;           // A_0
    T b_prev = R::zero(cf.b0);  // B_{-1}
    T b_cur = R::one(cf.b0);    // B_0
    for (int m = 1; m <= n; ++m) {
        const T am = cf.partial_num(m);
        if (R::is_zero(am)) return {std::move(a_cur), std::move(b_cur), m - 1, true};
        const T bm = cf.partial_den(m);
        T a_next = bm * a_cur + am * a_prev;
        T b_next = bm * b_cur + am * b_prev;
        a_prev = std::move(a_cur);
        a_cur = std::move(a_next);
        b_prev = std::move(b_cur);
        b_cur = std::move(b_next);
    }
    return {std::move(a_cur), std::move(b_cur), n, false};
}

template <class T>
T cf_value(const ContinuedFraction<T>& cf, int n) {
    const Approximant<T> ap = cf_approximant(cf, n);
    return CfRing<T>::divide(ap.numerator, ap.denominator);
}

/// A_n B_{n-1} - A_{n-1} B_n = (-1)^{n-1} a_1 ... a_n, n >= 1.
template <class T>
bool cf_determinant_identity_holds(const ContinuedFraction<T>& cf, int n) {
    if (n < 1) throw DomainError("determinant identity needs n >= 1");
    using R = CfRing<T>;
    const Approximant<T> cur = cf_approximant(cf, n);
    const Approximant<T> prev = cf_approximant(cf, n - 1);
    if (cur.terminated) return true;
    T product = R::one(cf.b0);
    for (int m = 1; m <= n; ++m) product = product * cf.partial_num(m);
    if (n % 2 == 0) product = -product;
    const T lhs = cur.numerator * prev.denominator - prev.numerator * cur.denominator;
    return R::is_zero(lhs - product);
}

/// Equivalence transform with scale factors r_m (r_0 = 1):
///   d_0 = b_0,  d_m = r_m b_m,  c_m = r_m r_{m-1} a_m.
/// Every approximant is preserved. EquivalenceError if r_0 != 1 or r_m = 0
/// for some 1 <= m <= depth.
template <class T>
ContinuedFraction<T> cf_equivalence(const ContinuedFraction<T>& cf, std::function<T(int)> r, int depth) {
    using R = CfRing<T>;
    if (!R::is_zero(r(0) - R::one(cf.b0))) throw EquivalenceError("equivalence transform requires r_0 = 1");
    for (int m = 1; m <= depth; ++m)
        if (R::is_zero(r(m))) throw EquivalenceError("scale factor r_" + std::to_string(m) + " vanishes");
    ContinuedFraction<T> out{cf.b0, {}, {}, depth};
    out.partial_den = [cf, r](int m) { return r(m) * cf.partial_den(m); };
    out.partial_num = [cf, r](int m) { return r(m) * r(m - 1) * cf.partial_num(m); };
    return out;
}

/// Even canonical contraction: its k-th approximant is the (2k)-th of cf.
///   d_0 = b_0,  c_1 = a_1 b_2,  d_1 = a_2 + b_1 b_2,
///   c_{k+1} = -a_{2k} a_{2k+1} b_{2k+2} / b_{2k},
///   d_{k+1} = a_{2k+2} + b_{2k+1} b_{2k+2} + a_{2k+1} b_{2k+2} / b_{2k}.
/// ContractionError unless b_{2k} != 0 for 1 <= k <= depth.
template <class T>
ContinuedFraction<T> cf_even_contraction(const ContinuedFraction<T>& cf, int depth) {
    using R = CfRing<T>;
    for (int k = 1; k <= depth; ++k)
        if (R::is_zero(cf.partial_den(2 * k)))
            throw ContractionError("even contraction needs b_" + std::to_string(2 * k) + " != 0");
    auto a = cf.partial_num;
    auto b = cf.partial_den;
    ContinuedFraction<T> out{cf.b0, {}, {}, depth};
    out.partial_num = [a, b](int k) -> T {
        if (k == 1) return a(1) * b(2);
        const int j = k - 1;
        if (R::is_zero(b(2 * j))) throw ContractionError("b_" + std::to_string(2 * j) + " vanishes");
        return -R::divide(a(2 * j) * a(2 * j + 1) * b(2 * j + 2), b(2 * j));
    };
    out.partial_den = [a, b](int k) -> T {
        if (k == 1) return a(2) + b(1) * b(2);
        const int j = k - 1;
        if (R::is_zero(b(2 * j))) throw ContractionError("b_" + std::to_string(2 * j) + " vanishes");
        return a(2 * j + 2) + b(2 * j + 1) * b(2 * j + 2) + R::divide(a(2 * j + 1) * b(2 * j + 2), b(2 * j));
    };
    return out;
}

/// Odd canonical contraction: its 0-th approximant is A_1/B_1 of cf and its
/// k-th is the (2k+1)-th of cf.
///   d_0 = (b_0 b_1 + a_1) / b_1,
///   c_1 = -a_1 a_2 b_3 / b_1,        d_1 = b_1 (a_3 + b_2 b_3) + a_2 b_3,
///   c_2 = -a_3 a_4 b_5 b_1 / b_3,
///   c_k = -a_{2k-1} a_{2k} b_{2k+1} / b_{2k-1}                 (k >= 3),
///   d_k = a_{2k+1} + b_{2k} b_{2k+1} + a_{2k} b_{2k+1} / b_{2k-1}   (k >= 2).
/// ContractionError unless b_{2k+1} != 0 for 0 <= k <= depth.
template <class T>
ContinuedFraction<T> cf_odd_contraction(const ContinuedFraction<T>& cf, int depth) {
    using R = CfRing<T>;
    for (int k = 0; k <= depth; ++k)
        if (R::is_zero(cf.partial_den(2 * k + 1)))
            throw ContractionError("odd contraction needs b_" + std::to_string(2 * k + 1) + " != 0");
    auto a = cf.partial_num;
    auto b = cf.partial_den;
    auto checked = [b](int m) {
        T v = b(m);
        if (R::is_zero(v)) throw ContractionError("b_" + std::to_string(m) + " vanishes");
        return v;
    };
    ContinuedFraction<T> out{R::divide(cf.b0 * b(1) + a(1), b(1)), {}, {}, depth};
    out.partial_num = [a, b, checked](int k) -> T {
        if (k == 1) return -R::divide(a(1) * a(2) * b(3), checked(1));
        if (k == 2) return -R::divide(a(3) * a(4) * b(5) * b(1), checked(3));
        return -R::divide(a(2 * k - 1) * a(2 * k) * b(2 * k + 1), checked(2 * k - 1));
    };
    out.partial_den = [a, b, checked](int k) -> T {
        if (k == 1) return b(1) * (a(3) + b(2) * b(3)) + a(2) * b(3);
        return a(2 * k + 1) + b(2 * k) * b(2 * k + 1) + R::divide(a(2 * k) * b(2 * k + 1), checked(2 * k - 1));
    };
    return out;
}

/// The J-fraction  c0 / (1 + s_0 t - t_1 t^2 / (1 + s_1 t - t_2 t^2 / ...))
/// as a continued fraction over series in `var` known through `order`:
///   b_0 = 0,  a_1 = c0,  b_m = 1 + s_{m-1} t,  a_m = -t_{m-1} t^2  (m >= 2).
/// Approximant n reads s_0..s_{n-1} and t_1..t_{n-1}; reading past the
/// supplied parameters raises ArityError.
ContinuedFraction<TruncSeries> jfraction(const JacobiParams& params, const std::string& var, int order);

/// Formal expansion of the J-fraction in z, where the J-fraction variable is
/// t = z^2, through z^order. Computed at depth ceil(order/2) + 1 and checked
/// against depth + 1 through the requested order. ArityError if params are
/// too short for that depth.
TruncSeries jfraction_series(const JacobiParams& params, int order);

/// jfraction_series(params, order) agrees with sum_k seq(k) z^{2k} through z^order.
bool verify_jfraction_vs_moments(const MomentSeq& seq, const JacobiParams& params, int order);

/// sum_k seq(k) z^{2k} through z^order.
TruncSeries moment_series(const MomentSeq& seq, int order);

}  // namespace hf
