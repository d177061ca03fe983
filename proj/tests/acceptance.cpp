// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "../tools/cli.hpp"

#include "hf/cfrac.hpp"
#include "hf/errors.hpp"
#include "hf/formal.hpp"
#include "hf/hankel.hpp"
#include "hf/numerics.hpp"
#include "hf/orthopoly.hpp"
#include "hf/sequence.hpp"
#include "hf/series.hpp"
#include "hf/shift.hpp"
#include "hf/special.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hf;

namespace {

// Collects the first failure of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && first_.empty()) first_ = what;
        if (!ok) ++failures_;
    }
    std::string result() const {
        if (first_.empty()) return {};
        return first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : "");
    }

private:
    std::string first_;
    int failures_ = 0;
};

std::string at(const std::string& what, int n) { return what + " at n=" + std::to_string(n); }

Poly X() { return Poly::x(); }
Poly x2_minus(int c) { return X() * X() - Poly(c); }
int sign_binom(int n) { return (n * (n + 1) / 2) % 2 == 0 ? 1 : -1; }

Rational fact(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(HF_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string bernoulli_numbers() {
    Check c;
    const MomentSeq b = make_sequence("bernoulli-num");
    const std::vector<Rational> want = {Rational(1),          Rational(-1, 12),       Rational(-1, 540),
                                        Rational(1, 42000),   Rational(1, 3215625),   Rational(-4, 623959875),
                                        Rational::parse("-64/213746467935")};
    for (int n = 0; n <= 6; ++n) c.expect(hankel_det(b, n) == Poly(want[static_cast<std::size_t>(n)]), at("H_n(B_k)", n));
    const Rational h10 = -Rational::parse("4398046511104") * Rational::parse("14348907") * Rational(625) /
                         (Rational::parse("285311670611") * Rational::parse("10604499373") * Rational(1419857) *
                          Rational(6859));
    c.expect(hankel_det(b, 10) == Poly(h10), "H_10(B_k)");
    return c.result();
}

std::string bernoulli_odd() {
    Check c;
    const MomentSeq s = make_sequence("bernoulli-odd-half");
    for (int n = 0; n <= 6; ++n) {
        // (-1)^{C(n+1,2)} (x/2)^{n+1} prod_l [l^4 (x^2 - l^2) / (4(2l+1)(2l-1))]^{n+1-l}
        Poly want = pow(X() * Rational(1, 2), static_cast<unsigned>(n + 1)) * Poly(sign_binom(n));
        for (int l = 1; l <= n; ++l)
            want *= pow(x2_minus(l * l) * Rational(l * l * l * l, 4 * (2 * l + 1) * (2 * l - 1)),
                        static_cast<unsigned>(n + 1 - l));
        c.expect(hankel_det(s, n) == want, at("H_n(B_{2k+1}((x+1)/2))", n));
        c.expect(closed_bernoulli_odd(n) == want, at("closed form", n));
    }
    c.expect(cli::render_table(1, cli::Format::latex) == read_golden("table1.tex"), "printed rows n <= 4");
    return c.result();
}

std::string euler_closed() {
    Check c;
    const MomentSeq en = make_sequence("euler-num"), ep = make_sequence("euler-poly");
    for (int n = 0; n <= 5; ++n) {
        Rational prod(1);
        for (int l = 1; l <= n; ++l) prod *= fact(l) * fact(l);
        const Rational numbers = Rational(sign_binom(n)) * prod;
        Rational quarter(1);
        for (int i = 0; i < n * (n + 1) / 2; ++i) quarter *= Rational(1, 4);
        c.expect(hankel_det(en, n) == Poly(numbers), at("H_n(E_k)", n));
        c.expect(hankel_det(ep, n) == Poly(numbers * quarter), at("H_n(E_k(x)) = 2^{-n(n+1)} H_n(E_k)", n));
    }
    const MomentSeq c0 = make_sequence("euler-nu-half(0)"), c1 = make_sequence("euler-nu-half(1)"),
                    c2 = make_sequence("euler-nu-half(2)");
    for (int n = 0; n <= 4; ++n) {
        Poly p0(sign_binom(n)), p1 = pow(X() * Rational(1, 2), static_cast<unsigned>(n + 1)) * Poly(sign_binom(n)),
            p2 = pow(x2_minus(1) * Rational(1, 4), static_cast<unsigned>(n + 1)) * Poly(sign_binom(n));
        for (int l = 1; l <= n; ++l) {
            const auto e = static_cast<unsigned>(n + 1 - l);
            const Rational q(l * l, 4);
            p0 *= pow(x2_minus((2 * l - 1) * (2 * l - 1)) * q, e);
            p1 *= pow(x2_minus(4 * l * l) * q, e);
            p2 *= pow(x2_minus((2 * l + 1) * (2 * l + 1)) * q, e);
        }
        c.expect(hankel_det(c0, n) == p0, at("nu = 0", n));
        c.expect(hankel_det(c1, n) == p1, at("nu = 1", n));
        c.expect(hankel_det(c2, n) == p2, at("nu = 2", n));
    }
    return c.result();
}

std::string orthogonality() {
    Check c;
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        for (int n = 1; n <= 5; ++n) {
            const YPoly p = orth_poly_det(s, n);
            for (int r = 0; r <= n; ++r) {
                YPoly yr = YPoly::y_plus(Poly());
                YPoly mono(Poly(1));
                for (int i = 0; i < r; ++i) mono = mono * yr;
                const Poly v = apply_functional(s, mono * p);
                if (r < n)
                    c.expect(v.is_zero(), at(f.str() + " L(y^r P_n) = 0", n));
                else
                    c.expect(v * hankel_det(s, n - 1) == hankel_det(s, n), at(f.str() + " L(y^n P_n) = H_n/H_{n-1}", n));
            }
            c.expect(p == named_family(f, n), at(f.str() + " determinant vs recurrence", n));
        }
    }
    const YPoly r4({Poly(Rational(12, 35)), Poly(Rational(10, 7)), Poly(Rational(17, 7)), Poly(2), Poly(1)});
    c.expect(orth_poly_det(make_sequence("bernoulli-num"), 4) == r4, "R_4");
    return c.result();
}

std::string jacobi_recovery() {
    Check c;
    const int depth = 6;
    const Poly shift = x2_minus(1) * Rational(1, 4);
    const JacobiParams b = jacobi_from_moments(make_sequence("bernoulli-odd-half"), depth);
    for (int n = 0; n <= 5; ++n) {
        c.expect(b.s[static_cast<std::size_t>(n)] == Poly(n * (n + 1) / 2) - shift, at("bernoulli sigma_n", n));
        const int m = n + 1;
        const Poly tau = (Poly(m * m) - X() * X()) * Rational(-m * m * m * m, 4 * (2 * m - 1) * (2 * m + 1));
        c.expect(b.t_at(m) == -tau, at("bernoulli tau_n", m));
    }
    for (int nu = 0; nu <= 2; ++nu) {
        const JacobiParams e = jacobi_from_moments(make_sequence("euler-nu-half(" + std::to_string(nu) + ")"), depth);
        for (int n = 0; n <= 5; ++n) {
            const Poly sigma = Poly(Rational(2 * n + 1) * Rational(2 * n + nu, 2)) - shift;
            c.expect(e.s[static_cast<std::size_t>(n)] == sigma, at("nu=" + std::to_string(nu) + " sigma_n", n));
            const int m = n + 1;
            const Poly tau = x2_minus((2 * m + nu - 1) * (2 * m + nu - 1)) * Rational(m * m, 4);
            c.expect(e.t_at(m) == -tau, at("nu=" + std::to_string(nu) + " tau_n", m));
        }
    }
    return c.result();
}

std::string formal_fractions() {
    Check c;
    const std::vector<std::pair<std::string, std::string>> fams = {
        {"bernoulli-odd", "bernoulli-odd-half"},
        {"euler-nu0", "euler-nu-half(0)"},
        {"euler-nu1", "euler-nu-half(1)"},
        {"euler-nu2", "euler-nu-half(2)"},
    };
    for (const auto& [family, seq] : fams) {
        const Family f = Family::parse(family);
        const MomentSeq s = make_sequence(seq);
        c.expect(verify_jfraction_vs_moments(s, family_params(f, 9), 12), family + " J-fraction through z^12");
        const TruncSeries formal = formal_F(parse_formal_kind(family), 16);
        c.expect(formal.log_coeff().is_zero() && formal.valuation() >= 0 && formal.order() == 16,
                 family + " logarithms cancel");
        c.expect(formal.agrees_with(moment_series(s, 16)), family + " polygamma series through z^16");
    }
    return c.result();
}

std::optional<Rational> backward(const ContinuedFraction<Rational>& cf, int n) {
    if (n == 0) return cf.b0;
    Rational v = cf.partial_den(n);
    for (int m = n - 1; m >= 1; --m) {
        if (v.is_zero()) return std::nullopt;
        v = cf.partial_den(m) + cf.partial_num(m + 1) / v;
    }
    if (v.is_zero()) return std::nullopt;
    return cf.b0 + cf.partial_num(1) / v;
}

Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 9), sign(0, 1);
    return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

std::string contractions() {
    Check c;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Rational> a, b, r;
        for (int i = 0; i <= 9; ++i) {
            a.push_back(random_nonzero(rng));
            b.push_back(random_nonzero(rng));
            r.push_back(i == 0 ? Rational(1) : random_nonzero(rng));
        }
        const ContinuedFraction<Rational> cf{b[0], [a](int m) { return a.at(m); }, [b](int m) { return b.at(m); }, 9};
        const int depth = 1 + trial % 4;
        const ContinuedFraction<Rational> even = cf_even_contraction(cf, depth);
        const ContinuedFraction<Rational> odd = cf_odd_contraction(cf, depth);
        const ContinuedFraction<Rational> equiv =
            cf_equivalence(cf, std::function<Rational(int)>([r](int m) { return r.at(m); }), 2 * depth + 1);
        for (int k = 0; k <= depth; ++k) {
            const auto want_even = backward(cf, 2 * k), got_even = backward(even, k);
            if (want_even && got_even) c.expect(*want_even == *got_even, at("even contraction", k));
            const auto want_odd = backward(cf, 2 * k + 1), got_odd = backward(odd, k);
            if (want_odd && got_odd) c.expect(*want_odd == *got_odd, at("odd contraction", k));
        }
        for (int n = 0; n <= 2 * depth + 1; ++n) {
            const Approximant<Rational> p = cf_approximant(cf, n), q = cf_approximant(equiv, n);
            c.expect(p.numerator * q.denominator == q.numerator * p.denominator, at("equivalence transform", n));
        }
    }
    return c.result();
}

std::string shifts() {
    Check c;
    const std::vector<Poly> table3 = {
        x2_minus(3) * Rational(1, 4),
        (pow(X(), 4) - Poly(18) * X() * X() + Poly(41)) * Rational(1, 16),
        (pow(X(), 6) - Poly(53) * pow(X(), 4) + Poly(655) * X() * X() - Poly(1323)) * Rational(1, 64),
        (pow(X(), 8) - Poly(116) * pow(X(), 6) + Poly(3958) * pow(X(), 4) - Poly(41364) * X() * X() + Poly(77841)) *
            Rational(1, 256),
    };
    for (int n = 0; n <= 3; ++n) {
        const BandMatrix m = euler_band(1, n);
        c.expect(dn_via_recurrence(m.s, m.t, n) == table3[static_cast<std::size_t>(n)], at("d_n^(1) row", n));
        c.expect(dn_via_determinant(m) == table3[static_cast<std::size_t>(n)], at("d_n^(1) determinant", n));
    }
    for (int n = 0; n <= 5; ++n) {
        Poly prod(1);
        for (int l = 0; l <= n; ++l) prod *= x2_minus((2 * l + 1) * (2 * l + 1)) * Rational(1, 4);
        c.expect(dn_via_determinant(euler_band(0, n)) == prod, at("d_n^(0) product", n));
    }
    for (const char* name : {"bernoulli-num", "euler-num", "bernoulli-odd-half", "euler-nu-half(0)", "euler-nu-half(1)"}) {
        const MomentSeq s = make_sequence(name);
        for (int n = 0; n <= 4; ++n) {
            c.expect(shifted_hankel(s, n, 1) == hankel_det(make_shifted(s, 1), n), at(std::string(name) + " shift 1", n));
            c.expect(shifted_hankel(s, n, 2) == hankel_det(make_shifted(s, 2), n), at(std::string(name) + " shift 2", n));
        }
    }
    const MomentSeq c0 = make_sequence("euler-nu-half(0)"), c1 = make_sequence("euler-nu-half(1)"),
                    c2 = make_sequence("euler-nu-half(2)"), c3 = make_sequence("euler-nu-half(3)");
    const MomentSeq b3 = make_sequence("bernoulli-nu-half(3)"), b1 = make_sequence("bernoulli-odd-half");
    for (int n = 0; n <= 3; ++n) {
        c.expect(hankel_det(c2, n) == hankel_det(c0, n) * dn_via_determinant(euler_band(0, n)), at("nu 0 -> 2", n));
        c.expect(hankel_det(c3, n) == hankel_det(c1, n) * dn_via_determinant(euler_band(1, n)), at("nu 1 -> 3", n));
        const Poly h = hankel_det(b3, n);
        const Poly base = hankel_det(b1, n);
        const EvenLinearFactorization f = factor_even_linear(base);
        for (int e = 1; e <= f.x_power; ++e) c.expect(divides(pow(X(), static_cast<unsigned>(e)), h), at("x divides", n));
        for (const auto& [l, e] : f.factors)
            c.expect(divides(pow(x2_minus(l * l), static_cast<unsigned>(e)), h), at("(x^2-l^2) divides", n));
    }
    return c.result();
}

std::string controls() {
    Check c;
    const MomentSeq s = make_sequence("bernoulli-nu-half(0)");
    c.expect(hankel_det(s, 1) == X() * X() * Rational(-1, 12) + Poly(Rational(1, 45)), "n=1 quadratic");
    const Poly sextic = pow(X(), 6) * Rational(-1, 540) + pow(X(), 4) * Rational(97, 18900) +
                        X() * X() * Rational(-11, 4725) + Poly(Rational(16, 55125));
    c.expect(hankel_det(s, 2) == sextic, "n=2 sextic");
    const MomentSeq mid = make_sequence("bernoulli-even-mid");
    for (int n = 0; n <= 4; ++n) {
        Rational prod(1);
        for (int l = 1; l <= n; ++l) {
            const Rational q(static_cast<long>(l) * l * l * l * (2 * l - 1) * (2 * l - 1) * (2 * l - 1) * (2 * l - 1),
                             static_cast<long>(4 * l - 3) * (4 * l - 1) * (4 * l - 1) * (4 * l + 1));
            for (int e = 0; e < n - l + 1; ++e) prod *= q;
        }
        c.expect(hankel_det(mid, n) == Poly(prod), at("Chen product", n));
    }
    return c.result();
}

std::string analytic() {
    Check c;
    struct Case {
        IdentityKind kind;
        IdentityParams p;
        double tol;
    };
    const std::vector<Case> cases = {
        {IdentityKind::ramanujan_48, {10, 0, 0.5}, 1e-10}, {IdentityKind::ramanujan_48, {8, 0, 0.3}, 1e-10},
        {IdentityKind::ramanujan_48, {12, 0, 1.5}, 1e-10}, {IdentityKind::lange_518, {10, 0.5, 1}, 1e-10},
        {IdentityKind::lange_518, {8, 1, 0.5}, 1e-10},     {IdentityKind::lange_518, {12, 2, 1.5}, 1e-10},
        {IdentityKind::lange_520, {10, 0.5, 0}, 1e-10},    {IdentityKind::lange_520, {8, 1.5, 0}, 1e-10},
        {IdentityKind::lange_520, {12, 3, 0}, 1e-10},      {IdentityKind::ramanujan_48, {4, 0, 1}, 1e-14},
    };
    for (const Case& k : cases) {
        const IdentityReport r = validate_identity(k.kind, k.p, 30);
        std::ostringstream os;
        os << r.identity << " s=" << k.p.s << " a=" << k.p.a << " b=" << k.p.b << " error " << r.abs_err;
        c.expect(r.abs_err < k.tol, os.str());
    }
    return c.result();
}

std::string properties() {
    Check c;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    auto random_seq = [&](int count) {
        std::vector<Poly> v;
        for (int i = 0; i < count; ++i) v.push_back(Poly(Rational(num(rng), den(rng))));
        return sequence_from_values("random", std::move(v));
    };
    for (int i = 0; i < 200; ++i) {
        const int n = i % 5;
        const MomentSeq s = random_seq(2 * n + 1);
        Poly p = Poly::linear(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if (p.is_zero()) p = X();
        const MomentSeq scaled("scaled", [s, p](int k) { return pow(p, static_cast<unsigned>(k)) * s(k); });
        c.expect(hankel_det(scaled, n) == pow(p, static_cast<unsigned>(n * (n + 1))) * hankel_det(s, n),
                 at("H_n(p^k c_k) = p^{n(n+1)} H_n(c_k)", n));
    }
    for (int i = 0; i < 200; ++i) {
        const int n = i % 5;
        const MomentSeq s = random_seq(2 * n + 1);
        const MomentSeq t("binomial", [s](int k) {
            Poly sum;
            Rational binom(1);
            for (int j = 0; j <= k; ++j) {
                sum += s(j) * Poly::monomial(binom, k - j);
                binom = binom * Rational(k - j) / Rational(j + 1);
            }
            return sum;
        });
        c.expect(hankel_det(t, n) == hankel_det(s, n), at("binomial transform", n));
    }
    constexpr int N = 30;
    const TruncSeries one = TruncSeries::constant("t", Poly(1), N + 1);
    const TruncSeries t = TruncSeries::monomial("t", Poly(1), 1, N + 1);
    const TruncSeries b = divide(t, exp_series("t", Poly(1), N + 1) - one);
    const TruncSeries e = divide(exp_series("t", Poly(1), N) * Poly(2), exp_series("t", Poly(2), N) + one);
    for (int n = 0; n <= N; ++n) {
        c.expect(b.coeff(n) * fact(n) == Poly(bernoulli_number(n)), at("t/(e^t-1)", n));
        c.expect(e.coeff(n) * fact(n) == Poly(euler_number(n)), at("1/cosh t", n));
    }
    return c.result();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"Bernoulli-number Hankel values", bernoulli_numbers},
        {"odd Bernoulli polynomial determinants and printed rows", bernoulli_odd},
        {"Euler closed forms", euler_closed},
        {"orthogonality and R_4", orthogonality},
        {"recurrence parameters from moments", jacobi_recovery},
        {"formal continued fractions and polygamma series", formal_fractions},
        {"contraction and equivalence laws", contractions},
        {"shifted sequences and band minors", shifts},
        {"non-factoring controls and Chen's product", controls},
        {"analytic continued fractions", analytic},
        {"randomized invariances and generating functions", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const bool pass = detail.empty();
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
        if (!pass) std::cout << ": " << detail;
        std::cout << "\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
