#include "hf/verify.hpp"

#include "hf/cfrac.hpp"
#include "hf/errors.hpp"
#include "hf/formal.hpp"
#include "hf/hankel.hpp"
#include "hf/numerics.hpp"
#include "hf/orthopoly.hpp"
#include "hf/sequence.hpp"
#include "hf/shift.hpp"
#include "hf/special.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace hf {

namespace {

// Records the first failure and counts all of them.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures_ == 0) first_ = what;
        ++failures_;
    }
    std::string result() const {
        if (failures_ == 0) return {};
        if (failures_ == 1) return first_;
        return first_ + " (and " + std::to_string(failures_ - 1) + " more)";
    }

private:
    std::string first_;
    int failures_ = 0;
};

using Check = std::function<std::string(const VerifyOptions&)>;

struct Entry {
    IdentityInfo info;
    Check check;
};

std::string at(const std::string& what, int n) { return what + " at n=" + std::to_string(n); }

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    int p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rational(p, den(rng));
}

Poly random_poly(std::mt19937_64& rng, int max_degree, bool nonzero) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, i == d && nonzero));
    return Poly(std::move(c));
}

MomentSeq random_sequence(std::mt19937_64& rng, int count) {
    std::vector<Poly> values;
    for (int i = 0; i < count; ++i) values.push_back(Poly(random_rational(rng, false)));
    return sequence_from_values("random", std::move(values));
}

// Laplace expansion along the first row, independent of the eliminator.
Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    if (n == 1) return m[0][0];
    Poly sum;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const Poly term = m[0][j] * cofactor_det(minor);
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

Poly cofactor_hankel(const MomentSeq& seq, int n) {
    std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(i)].push_back(seq(i + j));
    return cofactor_det(m);
}

MomentSeq seq(const std::string& text) { return make_sequence(text); }

// Sequences whose Jacobi parameters are polynomials in x.
const std::vector<std::string>& polynomial_parameter_sequences() {
    static const std::vector<std::string> names = {
        "bernoulli-num",    "euler-num",        "bernoulli-poly",   "euler-poly",
        "bernoulli-odd-half", "euler-nu-half(0)", "euler-nu-half(1)", "euler-nu-half(2)"};
    return names;
}

Poly from_ints(std::initializer_list<long> coeffs, long den) {
    std::vector<Rational> c;
    for (long v : coeffs) c.push_back(Rational(v, den));
    return Poly(std::move(c));
}

// ---- exact-core ----

std::string check_ring_axioms(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed);
    Checker c;
    for (int i = 0; i < std::max(o.random_cases, 1000); ++i) {
        const Rational a = random_rational(rng, false), b = random_rational(rng, false),
                       d = random_rational(rng, false);
        c.expect((a + b) + d == a + (b + d) && a * b == b * a && a * (b + d) == a * b + a * d,
                 "rational ring axiom");
        const Poly p = random_poly(rng, 3, false), q = random_poly(rng, 3, true), r = random_poly(rng, 2, false);
        c.expect((p * q) * r == p * (q * r) && p * q == q * p && p * (q + r) == p * q + p * r, "poly ring axiom");
        c.expect(divide_exact(p * q, q) == p, "exact division after product");
        c.expect(p.compose(q).compose(r) == p.compose(q.compose(r)), "composition associativity");
    }
    return c.result();
}

std::string check_series_division(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed + 1);
    Checker c;
    for (int i = 0; i < o.random_cases; ++i) {
        std::vector<Poly> num, den;
        for (int k = 0; k <= 6; ++k) num.push_back(random_poly(rng, 2, false));
        den.push_back(Poly(random_rational(rng, true)));
        for (int k = 1; k <= 6; ++k) den.push_back(random_poly(rng, 2, false));
        const TruncSeries n = TruncSeries::from_coefficients("t", num, 6);
        const TruncSeries d = TruncSeries::from_coefficients("t", den, 6);
        const TruncSeries q = divide(n, d);
        c.expect((q * d).agrees_with(n), "series quotient times divisor");
    }
    return c.result();
}

// ---- special-seq ----

std::string check_generating_functions(const VerifyOptions&) {
    constexpr int N = 30;
    Checker c;
    const TruncSeries t = TruncSeries::monomial("t", Poly(1), 1, N + 1);
    const TruncSeries one = TruncSeries::constant("t", Poly(1), N + 1);
    const TruncSeries bern = divide(t, exp_series("t", Poly(1), N + 1) - one);
    const TruncSeries eul = divide(exp_series("t", Poly(1), N) * Poly(2), exp_series("t", Poly(2), N) + one);
    for (int n = 0; n <= N; ++n) {
        c.expect(bern.coeff(n) * factorial(static_cast<unsigned long>(n)) == Poly(bernoulli_number(n)),
                 at("Bernoulli generating function", n));
        c.expect(eul.coeff(n) * factorial(static_cast<unsigned long>(n)) == Poly(euler_number(n)),
                 at("Euler generating function", n));
    }
    return c.result();
}

std::string check_special_relations(const VerifyOptions&) {
    Checker c;
    for (int n = 0; n <= 30; ++n) {
        if (n >= 1) c.expect(verify_euler_from_bernoulli(n), at("Euler from Bernoulli", n));
        c.expect(bernoulli_poly(n)(Rational(0)) == bernoulli_number(n), at("B_n(0) = B_n", n));
        c.expect(euler_poly(n)(Rational(1, 2)) * pow(Rational(2), n) == euler_number(n), at("2^n E_n(1/2) = E_n", n));
        c.expect(verify_reflection(n), at("reflection", n));
    }
    for (int j = 1; j <= 15; ++j) c.expect(bernoulli_number(2 * j + 1).is_zero(), at("odd Bernoulli number", 2 * j + 1));
    for (int j = 0; j <= 15; ++j) c.expect(euler_number(2 * j + 1).is_zero(), at("odd Euler number", 2 * j + 1));
    return c.result();
}

// ---- hankel-engine ----

std::string check_hankel_oracle(const VerifyOptions& o) {
    Checker c;
    const int top = std::min(4, o.max_depth);
    for (const char* name :
         {"bernoulli-num", "euler-num", "bernoulli-poly", "euler-poly", "bernoulli-odd-half", "bernoulli-nu-half(0)",
          "bernoulli-even-mid", "euler-nu-half(0)", "euler-nu-half(1)", "euler-nu-half(2)"}) {
        const MomentSeq s = seq(name);
        for (int n = 0; n <= top; ++n)
            c.expect(hankel_det(s, n) == cofactor_hankel(s, n), at(std::string(name) + " eliminator vs cofactors", n));
    }
    return c.result();
}

std::string check_bernoulli_number_hankel(const VerifyOptions& o) {
    Checker c;
    const MomentSeq s = seq("bernoulli-num");
    for (int n = 0; n <= std::min(8, o.max_depth); ++n)
        c.expect(hankel_det(s, n) == Poly(closed_bernoulli_numbers(n)), at("H_n(B_k)", n));
    return c.result();
}

std::string check_bernoulli_odd_hankel(const VerifyOptions& o) {
    Checker c;
    const MomentSeq s = seq("bernoulli-odd-half");
    for (int n = 0; n <= std::min(6, o.max_depth); ++n)
        c.expect(hankel_det(s, n) == closed_bernoulli_odd(n), at("H_n(B_{2k+1}((x+1)/2))", n));
    return c.result();
}

std::string check_bernoulli_poly_invariance(const VerifyOptions& o) {
    Checker c;
    const MomentSeq a = seq("bernoulli-poly"), b = seq("bernoulli-num");
    for (int n = 0; n <= std::min(5, o.max_depth); ++n) c.expect(hankel_det(a, n) == hankel_det(b, n), at("H_n(B_k(x))", n));
    return c.result();
}

std::string check_euler_number_hankel(const VerifyOptions& o) {
    Checker c;
    const MomentSeq s = seq("euler-num");
    for (int n = 0; n <= std::min(5, o.max_depth); ++n)
        c.expect(hankel_det(s, n) == closed_euler(EulerClosedKind::numbers, n), at("H_n(E_k)", n));
    return c.result();
}

std::string check_euler_poly_hankel(const VerifyOptions& o) {
    Checker c;
    const MomentSeq s = seq("euler-poly"), e = seq("euler-num");
    for (int n = 0; n <= std::min(5, o.max_depth); ++n) {
        const Poly h = hankel_det(s, n);
        c.expect(h == closed_euler(EulerClosedKind::polynomials, n), at("H_n(E_k(x))", n));
        c.expect(h == hankel_det(e, n) * pow(Rational(1, 2), static_cast<long>(n) * (n + 1)),
                 at("H_n(E_k(x)) = 2^{-n(n+1)} H_n(E_k)", n));
    }
    return c.result();
}

std::string check_euler_nu_hankel(const VerifyOptions& o) {
    Checker c;
    const EulerClosedKind kinds[] = {EulerClosedKind::nu0, EulerClosedKind::nu1, EulerClosedKind::nu2};
    for (int nu = 0; nu <= 2; ++nu) {
        const MomentSeq s = seq("euler-nu-half(" + std::to_string(nu) + ")");
        for (int n = 0; n <= std::min(4, o.max_depth); ++n)
            c.expect(hankel_det(s, n) == closed_euler(kinds[nu], n),
                     at("H_n(E_{2k+" + std::to_string(nu) + "}((x+1)/2))", n));
    }
    return c.result();
}

std::string check_chen_hankel(const VerifyOptions& o) {
    Checker c;
    const MomentSeq s = seq("bernoulli-even-mid");
    for (int n = 0; n <= std::min(4, o.max_depth); ++n)
        c.expect(hankel_det(s, n) == Poly(closed_chen(n)), at("H_n(B_{2k}(1/2))", n));
    return c.result();
}

std::string check_bernoulli_even_hankel(const VerifyOptions&) {
    Checker c;
    const MomentSeq s = seq("bernoulli-nu-half(0)");
    c.expect(hankel_det(s, 1) == Poly({Rational(1, 45), Rational(0), Rational(-1, 12)}), "H_1(B_{2k}((x+1)/2))");
    const Poly sextic({Rational(16, 55125), Rational(0), Rational(-11, 4725), Rational(0), Rational(97, 18900),
                       Rational(0), Rational(-1, 540)});
    c.expect(hankel_det(s, 2) == sextic, "H_2(B_{2k}((x+1)/2))");
    const EvenLinearFactorization f = factor_even_linear(sextic);
    c.expect(f.x_power == 0 && f.factors.empty(), "sextic has no factor x or x^2 - l^2");
    return c.result();
}

std::string check_scaling_invariance(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed + 2);
    Checker c;
    for (int i = 0; i < o.random_cases; ++i) {
        const int n = i % (std::min(4, o.max_depth) + 1);
        const MomentSeq s = random_sequence(rng, 2 * n + 1);
        const Poly p = random_poly(rng, 1, true);
        const MomentSeq scaled("scaled", [s, p](int k) { return pow(p, static_cast<unsigned>(k)) * s(k); });
        c.expect(hankel_det(scaled, n) == pow(p, static_cast<unsigned>(n * (n + 1))) * hankel_det(s, n),
                 at("scaling", n));
    }
    return c.result();
}

std::string check_binomial_invariance(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed + 3);
    Checker c;
    for (int i = 0; i < o.random_cases; ++i) {
        const int n = i % (std::min(4, o.max_depth) + 1);
        const MomentSeq s = random_sequence(rng, 2 * n + 1);
        const MomentSeq t("binomial", [s](int k) {
            Poly sum;
            for (int j = 0; j <= k; ++j)
                sum += s(j) * Poly::monomial(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)), k - j);
            return sum;
        });
        c.expect(hankel_det(t, n) == hankel_det(s, n), at("binomial transform", n));
    }
    return c.result();
}

// ---- orthopoly-engine ----

std::string check_orthogonality(const VerifyOptions& o) {
    Checker c;
    const int top = std::min(5, o.max_depth);
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        for (int n = 1; n <= top; ++n) {
            for (int r = 0; r < n; ++r)
                c.expect(verify_orthogonality(s, n, r).is_zero(), at(f.str() + " functional of y^" + std::to_string(r) + " P_n", n));
            c.expect(verify_orthogonality(s, n, n) * hankel_det(s, n - 1) == hankel_det(s, n),
                     at(f.str() + " functional of y^n P_n", n));
        }
    }
    const YPoly r4 = named_family(Family{Family::Kind::touchard, 0}, 4);
    const YPoly expected({Poly(Rational(12, 35)), Poly(Rational(10, 7)), Poly(Rational(17, 7)), Poly(2), Poly(1)});
    c.expect(r4 == expected, "R_4 coefficients");
    c.expect(orth_poly_det(seq("bernoulli-num"), 4) == expected, "R_4 from moments");
    return c.result();
}

std::string check_jacobi_recovery(const VerifyOptions& o, const std::vector<Family>& families) {
    Checker c;
    const int depth = std::min(5, o.max_depth) + 1;
    for (const Family& f : families) {
        const JacobiParams got = jacobi_from_moments(make_sequence(family_sequence(f)), depth);
        const JacobiParams want = family_params(f, depth);
        c.expect(got.c0 == want.c0, f.str() + " c0");
        for (int n = 0; n < depth; ++n) {
            c.expect(got.s[static_cast<std::size_t>(n)] == want.s[static_cast<std::size_t>(n)], at(f.str() + " sigma_n", n));
            c.expect(got.t_at(n + 1) == want.t_at(n + 1), at(f.str() + " tau_n", n + 1));
        }
    }
    return c.result();
}

std::string check_det_vs_rec(const VerifyOptions& o) {
    Checker c;
    const int top = std::min(5, o.max_depth);
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        const JacobiParams p = jacobi_from_moments(s, top + 1);
        for (int n = 0; n <= top; ++n) {
            const YPoly det = orth_poly_det(s, n);
            c.expect(det == orth_poly_rec(p, n), at(f.str() + " determinant vs recurrence", n));
            c.expect(det == named_family(f, n), at(f.str() + " determinant vs published recurrence", n));
        }
    }
    return c.result();
}

std::string check_hankel_from_jacobi(const VerifyOptions& o) {
    Checker c;
    const int top = std::min(5, o.max_depth);
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        const JacobiParams p = family_params(f, top);
        for (int n = 0; n <= top; ++n) {
            Poly prod = pow(p.c0, static_cast<unsigned>(n + 1));
            for (int l = 1; l <= n; ++l) prod *= pow(p.t_at(l), static_cast<unsigned>(n + 1 - l));
            c.expect(prod == hankel_det(s, n), at(f.str() + " c0^{n+1} t_1^n ... t_n", n));
        }
    }
    return c.result();
}

// ---- cfrac-engine ----

std::string check_jfraction(const VerifyOptions&, const std::vector<Family>& families) {
    Checker c;
    for (const Family& f : families) {
        const MomentSeq s = make_sequence(family_sequence(f));
        for (int order = 0; order <= 12; order += 2)
            c.expect(verify_jfraction_vs_moments(s, family_params(f, order / 2 + 3), order),
                     f.str() + " J-fraction through z^" + std::to_string(order));
        JacobiParams bad = family_params(f, 9);
        bad.t[0] += Poly(1);
        c.expect(!verify_jfraction_vs_moments(s, bad, 12), f.str() + " perturbed t_1 must not match");
    }
    return c.result();
}

std::string check_formal(const VerifyOptions&, const std::vector<std::pair<FormalKind, std::string>>& kinds) {
    Checker c;
    for (const auto& [kind, name] : kinds) {
        const MomentSeq s = seq(name);
        for (int order = 0; order <= 16; order += 2) {
            const TruncSeries f = formal_F(kind, order);
            c.expect(f.log_coeff().is_zero() && f.agrees_with(moment_series(s, order)) && f.order() == order,
                     formal_kind_name(kind) + " through z^" + std::to_string(order));
        }
    }
    return c.result();
}

ContinuedFraction<Rational> random_cf(std::mt19937_64& rng, int terms) {
    std::vector<Rational> a, b;
    for (int i = 0; i <= terms; ++i) {
        a.push_back(random_rational(rng, true));
        b.push_back(random_rational(rng, true));
    }
    ContinuedFraction<Rational> cf;
    cf.b0 = random_rational(rng, false);
    cf.partial_num = [a](int m) { return a.at(static_cast<std::size_t>(m)); };
    cf.partial_den = [b](int m) { return b.at(static_cast<std::size_t>(m)); };
    cf.depth_hint = terms;
    return cf;
}

// Equal as points (A : B) of the projective line; an infinite value (B = 0)
// is a legitimate approximant of a random fraction.
bool same_value(const Approximant<Rational>& p, const Approximant<Rational>& q) {
    const bool p_null = p.numerator.is_zero() && p.denominator.is_zero();
    const bool q_null = q.numerator.is_zero() && q.denominator.is_zero();
    return !p_null && !q_null && p.numerator * q.denominator == q.numerator * p.denominator;
}

std::string check_contraction_laws(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed + 4);
    Checker c;
    const int cases = std::max(o.random_cases, 500);
    for (int i = 0; i < cases; ++i) {
        const int depth = 1 + i % 4;
        const ContinuedFraction<Rational> cf = random_cf(rng, 2 * depth + 2);
        for (int n = 1; n <= 2 * depth + 1; ++n) c.expect(cf_determinant_identity_holds(cf, n), at("determinant identity", n));
        const auto even = cf_even_contraction(cf, depth);
        const auto odd = cf_odd_contraction(cf, depth);
        for (int k = 0; k <= depth; ++k) {
            c.expect(same_value(cf_approximant(even, k), cf_approximant(cf, 2 * k)), at("even contraction", k));
            c.expect(same_value(cf_approximant(odd, k), cf_approximant(cf, 2 * k + 1)), at("odd contraction", k));
        }
        std::vector<Rational> r{Rational(1)};
        for (int m = 1; m <= 2 * depth + 2; ++m) r.push_back(random_rational(rng, true));
        const auto eq = cf_equivalence(cf, std::function<Rational(int)>([r](int m) { return r.at(static_cast<std::size_t>(m)); }),
                                       2 * depth + 2);
        for (int m = 0; m <= 2 * depth + 2; ++m)
            c.expect(same_value(cf_approximant(eq, m), cf_approximant(cf, m)), at("equivalence", m));
    }
    return c.result();
}

// ---- shift-engine ----

std::string check_band_minor_closed(const VerifyOptions& o) {
    Checker c;
    for (int n = 0; n <= std::min(5, o.max_depth); ++n) {
        const BandMatrix m = euler_band(0, n);
        const Poly closed = dn0_closed(n);
        c.expect(closed == dn_via_recurrence(m.s, m.t, n), at("d_n^(0) closed vs recurrence", n));
        c.expect(closed == dn_via_determinant(m), at("d_n^(0) closed vs determinant", n));
    }
    return c.result();
}

std::string check_band_minor_table(const VerifyOptions& o) {
    Checker c;
    const std::vector<Poly> table = {from_ints({-3, 0, 1}, 4), from_ints({41, 0, -18, 0, 1}, 16),
                                     from_ints({-1323, 0, 655, 0, -53, 0, 1}, 64),
                                     from_ints({77841, 0, -41364, 0, 3958, 0, -116, 0, 1}, 256)};
    for (int n = 0; n <= std::min(3, o.max_depth); ++n) {
        const BandMatrix m = euler_band(1, n);
        c.expect(dn_via_recurrence(m.s, m.t, n) == table[static_cast<std::size_t>(n)], at("d_n^(1) row", n));
    }
    for (int nu = 0; nu <= 2; ++nu)
        for (int n = -1; n <= std::min(5, o.max_depth); ++n) {
            const BandMatrix m = euler_band(nu, std::max(n, 0));
            if (n >= 0) c.expect(dn_via_recurrence(m.s, m.t, n) == dn_via_determinant(m), at("d_n^(nu) recurrence vs determinant", n));
        }
    std::mt19937_64 rng(o.seed + 5);
    for (int i = 0; i < o.random_cases / 4; ++i) {
        BandMatrix m;
        m.n = i % (std::min(5, o.max_depth) + 1);
        for (int k = 0; k <= m.n; ++k) {
            m.s.push_back(random_poly(rng, 2, false));
            m.t.push_back(random_poly(rng, 2, false));
        }
        c.expect(dn_via_recurrence(m.s, m.t, m.n) == dn_via_determinant(m), at("random band recurrence vs determinant", m.n));
    }
    return c.result();
}

std::string check_shift(const VerifyOptions& o, int shift) {
    Checker c;
    for (const std::string& name : polynomial_parameter_sequences()) {
        const MomentSeq s = seq(name);
        const MomentSeq shifted = make_shifted(s, shift);
        for (int n = 0; n <= std::min(4, o.max_depth); ++n)
            c.expect(shifted_hankel(s, n, shift) == hankel_det(shifted, n), at(name + " shift " + std::to_string(shift), n));
    }
    return c.result();
}

std::string check_shift_nu_two(const VerifyOptions& o) {
    Checker c;
    const MomentSeq c0 = seq("euler-nu-half(0)"), c2 = seq("euler-nu-half(2)");
    const MomentSeq adapted = make_shifted(c0, 1);
    for (int k = 0; k <= 10; ++k) c.expect(c2(k) == adapted(k), at("E_{2k+2} = E_{2(k+1)} adapter", k));
    for (int n = 0; n <= std::min(3, o.max_depth); ++n)
        c.expect(hankel_det(c2, n) == hankel_det(c0, n) * dn0_closed(n), at("H_n(c^(2)) = H_n(c^(0)) d_n^(0)", n));
    return c.result();
}

std::string check_shift_nu_three(const VerifyOptions& o) {
    Checker c;
    const MomentSeq c1 = seq("euler-nu-half(1)"), c3 = seq("euler-nu-half(3)");
    const MomentSeq adapted = make_shifted(c1, 1);
    for (int k = 0; k <= 10; ++k) c.expect(c3(k) == adapted(k), at("E_{2k+3} = E_{2(k+1)+1} adapter", k));
    for (int n = 0; n <= std::min(3, o.max_depth); ++n) {
        const BandMatrix m = euler_band(1, n);
        c.expect(hankel_det(c3, n) == hankel_det(c1, n) * dn_via_recurrence(m.s, m.t, n),
                 at("H_n(c^(3)) = H_n(c^(1)) d_n^(1)", n));
    }
    return c.result();
}

std::string check_bernoulli_shift_factors(const VerifyOptions& o) {
    Checker c;
    const MomentSeq s = seq("bernoulli-nu-half(3)");
    for (int n = 0; n <= std::min(3, o.max_depth); ++n) {
        const Poly closed = closed_bernoulli_odd(n);
        const Poly h = hankel_det(s, n);
        const EvenLinearFactorization f = factor_even_linear(closed);
        for (int e = 1; e <= f.x_power; ++e)
            c.expect(divides(pow(Poly::x(), static_cast<unsigned>(e)), h), at("x^" + std::to_string(e) + " divides", n));
        for (const auto& [l, e] : f.factors)
            c.expect(divides(pow(Poly({Rational(-l * l), Rational(0), Rational(1)}), static_cast<unsigned>(e)), h),
                     at("(x^2-" + std::to_string(l * l) + ")^" + std::to_string(e) + " divides", n));
        c.expect(divides(closed, h), at("closed form divides H_n(B_{2k+3}((x+1)/2))", n));
    }
    return c.result();
}

std::string check_s_from_shifted(const VerifyOptions& o) {
    Checker c;
    const int top = std::min(5, o.max_depth);
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        for (int n = 0; n < top; ++n) {
            Poly got;
            try {
                got = s_from_shifted(s, n);
            } catch (const DegenerateMomentsError&) {
                continue;  // the shifted determinant used as divisor vanishes
            }
            c.expect(got == family_sigma(f, n), at(f.str() + " s_n from shifted determinants", n));
        }
    }
    return c.result();
}

// ---- numerics ----

std::string check_numeric(IdentityKind kind, const std::vector<IdentityParams>& sets, double tol) {
    Checker c;
    for (const IdentityParams& p : sets) {
        const IdentityReport r = validate_identity(kind, p, 30);
        std::ostringstream os;
        os << identity_kind_name(kind) << " s=" << p.s << " a=" << p.a << " b=" << p.b << " error " << r.abs_err;
        c.expect(r.abs_err < tol, os.str());
    }
    return c.result();
}

std::string check_polygamma(const VerifyOptions& o) {
    Checker c;
    const double gamma = 0.57721566490153286061;
    const double pi = 3.14159265358979323846;
    c.expect(std::abs(digamma(1.0) + gamma) < 1e-12, "psi(1)");
    c.expect(std::abs(digamma(0.5) + gamma + 2.0 * std::log(2.0)) < 1e-12, "psi(1/2)");
    c.expect(std::abs(trigamma(1.0) - pi * pi / 6.0) < 1e-12, "psi'(1)");
    c.expect(std::abs(trigamma(0.5) - pi * pi / 2.0) < 1e-12, "psi'(1/2)");
    std::mt19937_64 rng(o.seed + 6);
    std::uniform_real_distribution<double> v(0.1, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double x = v(rng);
        c.expect(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-13, "digamma recurrence");
        c.expect(std::abs(trigamma(x) - trigamma(x + 1.0) - 1.0 / (x * x)) < 1e-12, "trigamma recurrence");
    }
    return c.result();
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        const std::vector<Family> bo = {Family{Family::Kind::bernoulli_odd, 0}};
        const std::vector<Family> en = {Family{Family::Kind::euler_nu, 0}, Family{Family::Kind::euler_nu, 1},
                                        Family{Family::Kind::euler_nu, 2}};
        std::vector<Entry> e = {
            {{"ring-axioms", "exact-core", "ring laws for rationals and polynomials, exact division, composition"},
             check_ring_axioms},
            {{"series-division", "exact-core", "series quotient times divisor reproduces the numerator"},
             check_series_division},
            {{"generating-functions", "special-seq", "B_n and E_n from their exponential generating functions, n <= 30"},
             check_generating_functions},
            {{"special-relations", "special-seq", "values at 0 and 1/2, reflection, Euler from Bernoulli, odd vanishing"},
             check_special_relations},
            {{"hankel-oracle", "hankel-engine", "eliminator agrees with cofactor expansion"}, check_hankel_oracle},
            {{"bernoulli-number-hankel", "hankel-engine", "H_n(B_k) product formula"}, check_bernoulli_number_hankel},
            {{"bernoulli-odd-hankel", "hankel-engine", "H_n(B_{2k+1}((x+1)/2)) product formula"},
             check_bernoulli_odd_hankel},
            {{"bernoulli-poly-invariance", "hankel-engine", "H_n(B_k(x)) = H_n(B_k)"}, check_bernoulli_poly_invariance},
            {{"euler-number-hankel", "hankel-engine", "H_n(E_k) product formula"}, check_euler_number_hankel},
            {{"euler-poly-hankel", "hankel-engine", "H_n(E_k(x)) product formula and 2^{-n(n+1)} relation"},
             check_euler_poly_hankel},
            {{"euler-nu-hankel", "hankel-engine", "H_n(E_{2k+nu}((x+1)/2)) product formulas, nu = 0, 1, 2"},
             check_euler_nu_hankel},
            {{"chen-hankel", "hankel-engine", "H_n(B_{2k}(1/2)) product formula"}, check_chen_hankel},
            {{"bernoulli-even-hankel", "hankel-engine", "H_1 and H_2 of B_{2k}((x+1)/2), no linear factors"},
             check_bernoulli_even_hankel},
            {{"scaling-invariance", "hankel-engine", "H_n(p^k c_k) = p^{n(n+1)} H_n(c_k), randomized"},
             check_scaling_invariance},
            {{"binomial-invariance", "hankel-engine", "Hankel determinants invariant under binomial transform, randomized"},
             check_binomial_invariance},
            {{"orthogonality", "orthopoly-engine", "functional of y^r P_n, all families; R_4"}, check_orthogonality},
            {{"jacobi-bernoulli-odd", "orthopoly-engine", "recovered recurrence of the B_{2k+1}((x+1)/2) family"},
             [bo](const VerifyOptions& o) { return check_jacobi_recovery(o, bo); }},
            {{"jacobi-euler-nu", "orthopoly-engine", "recovered recurrences of the E_{2k+nu}((x+1)/2) families"},
             [en](const VerifyOptions& o) { return check_jacobi_recovery(o, en); }},
            {{"orthopoly-det-vs-rec", "orthopoly-engine", "determinant and recurrence polynomials agree"},
             check_det_vs_rec},
            {{"hankel-from-jacobi", "orthopoly-engine", "H_n = c0^{n+1} t_1^n ... t_n"}, check_hankel_from_jacobi},
            {{"jfraction-bernoulli-odd", "cfrac-engine", "J-fraction expansion of B_{2k+1}((x+1)/2) through z^12"},
             [bo](const VerifyOptions& o) { return check_jfraction(o, bo); }},
            {{"jfraction-euler-nu", "cfrac-engine", "J-fraction expansions of E_{2k+nu}((x+1)/2) through z^12"},
             [en](const VerifyOptions& o) { return check_jfraction(o, en); }},
            {{"formal-digamma-bernoulli-odd", "cfrac-engine", "trigamma expansion gives sum B_{2k+1}((x+1)/2) z^2k"},
             [](const VerifyOptions& o) {
                 return check_formal(o, {{FormalKind::bernoulli_odd, "bernoulli-odd-half"}});
             }},
            {{"formal-digamma-euler-nu", "cfrac-engine", "digamma expansions give sum E_{2k+nu}((x+1)/2) z^2k"},
             [](const VerifyOptions& o) {
                 return check_formal(o, {{FormalKind::euler_nu0, "euler-nu-half(0)"},
                                         {FormalKind::euler_nu1, "euler-nu-half(1)"},
                                         {FormalKind::euler_nu2, "euler-nu-half(2)"}});
             }},
            {{"contraction-laws", "cfrac-engine", "contractions and equivalence preserve approximants, randomized"},
             check_contraction_laws},
            {{"band-minor-closed", "shift-engine", "d_n^(0) product formula"}, check_band_minor_closed},
            {{"band-minor-table", "shift-engine", "d_n^(1) rows; recurrence vs determinant"}, check_band_minor_table},
            {{"shift-one", "shift-engine", "H_n(a_{k+1}) = H_n(a_k) d_n"},
             [](const VerifyOptions& o) { return check_shift(o, 1); }},
            {{"shift-two", "shift-engine", "H_n(a_{k+2}) from the band minors"},
             [](const VerifyOptions& o) { return check_shift(o, 2); }},
            {{"shift-nu-two", "shift-engine", "H_n(c^(2)) = H_n(c^(0)) d_n^(0)"}, check_shift_nu_two},
            {{"shift-nu-three", "shift-engine", "H_n(c^(3)) = H_n(c^(1)) d_n^(1)"}, check_shift_nu_three},
            {{"bernoulli-shift-factors", "shift-engine", "H_n(B_{2k+3}((x+1)/2)) keeps the linear factors"},
             check_bernoulli_shift_factors},
            {{"s-from-shifted", "shift-engine", "s_n from shifted Hankel determinants"}, check_s_from_shifted},
            {{"polygamma", "numerics", "special values and recurrences of digamma and trigamma"}, check_polygamma},
            {{"ramanujan-cf", "numerics", "trigamma difference continued fraction"},
             [](const VerifyOptions&) {
                 std::string r = check_numeric(IdentityKind::ramanujan_48,
                                               {{10.0, 0.0, 0.5}, {8.0, 0.0, 0.3}, {12.0, 0.0, 1.5}}, 1e-10);
                 if (r.empty()) r = check_numeric(IdentityKind::ramanujan_48, {{4.0, 0.0, 1.0}}, 1e-14);
                 return r;
             }},
            {{"lange-t-cf", "numerics", "digamma continued fraction with partial denominators s"},
             [](const VerifyOptions&) {
                 return check_numeric(IdentityKind::lange_518, {{10.0, 0.5, 1.0}, {8.0, 1.0, 0.5}, {12.0, 2.0, 1.5}},
                                      1e-10);
             }},
            {{"lange-u-cf", "numerics", "digamma continued fraction with partial denominators 1"},
             [](const VerifyOptions&) {
                 return check_numeric(IdentityKind::lange_520, {{10.0, 0.5, 0.0}, {8.0, 1.5, 0.0}, {12.0, 3.0, 0.0}},
                                      1e-10);
             }},
        };
        std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
        return e;
    }();
    return table;
}

VerifyResult run_one(const Entry& e, const VerifyOptions& o) {
    VerifyResult r;
    r.id = e.info.id;
    r.module = e.info.module;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = e.check(o);
    } catch (const std::exception& ex) {
        r.detail = std::string("exception: ") + ex.what();
    }
    r.pass = r.detail.empty();
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

const std::vector<IdentityInfo>& verification_catalog() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const Entry& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

std::vector<std::string> verification_modules() {
    std::vector<std::string> mods;
    for (const IdentityInfo& i : verification_catalog())
        if (std::find(mods.begin(), mods.end(), i.module) == mods.end()) mods.push_back(i.module);
    std::sort(mods.begin(), mods.end());
    return mods;
}

std::vector<VerifyResult> run_verification(const std::string& scope, const VerifyOptions& options) {
    if (options.max_depth < 1) throw DomainError("max depth must be at least 1");
    std::vector<const Entry*> selected;
    for (const Entry& e : entries())
        if (scope == "all" || scope == e.info.id || scope == e.info.module) selected.push_back(&e);
    if (selected.empty()) {
        std::string known = "all";
        for (const std::string& m : verification_modules()) known += ", " + m;
        for (const IdentityInfo& i : verification_catalog()) known += ", " + i.id;
        throw ParseError("unknown verification scope '" + scope + "' (known: " + known + ")");
    }
    std::vector<VerifyResult> results;
    if (options.parallel && selected.size() > 1) {
        std::vector<std::future<VerifyResult>> jobs;
        for (const Entry* e : selected) jobs.push_back(std::async(std::launch::async, run_one, std::cref(*e), std::cref(options)));
        for (auto& j : jobs) results.push_back(j.get());
    } else {
        for (const Entry* e : selected) results.push_back(run_one(*e, options));
    }
    std::sort(results.begin(), results.end(), [](const VerifyResult& a, const VerifyResult& b) { return a.id < b.id; });
    return results;
}

}  // namespace hf
