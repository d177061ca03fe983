#include "hf/errors.hpp"
#include "hf/hankel.hpp"
#include "hf/orthopoly.hpp"
#include "hf/sequence.hpp"
#include "hf/special.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace hf;
using hf::test::P;

TEST_SUITE("orthopoly-engine") {

TEST_CASE("Touchard-type polynomial R_4") {
    const Family touchard = Family::parse("touchard");
    const YPoly want({P({"12/35"}), P({"10/7"}), P({"17/7"}), P({"2"}), P({"1"})});
    CHECK(named_family(touchard, 4) == want);
    CHECK(orth_poly_det(make_sequence("bernoulli-num"), 4) == want);
    CHECK(named_family(touchard, 1) == YPoly::y_plus(P({"1/2"})));
}

TEST_CASE("orthogonality sweep, all families") {
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        for (int n = 1; n <= 5; ++n) {
            for (int r = 0; r < n; ++r) CHECK_MESSAGE(verify_orthogonality(s, n, r).is_zero(), f.str() << " n=" << n << " r=" << r);
            CHECK(verify_orthogonality(s, n, n) * hankel_det(s, n - 1) == hankel_det(s, n));
        }
    }
}

TEST_CASE("recovered recurrence parameters equal the published ones") {
    for (const Family& f : Family::all()) {
        const JacobiParams got = jacobi_from_moments(make_sequence(family_sequence(f)), 6);
        const JacobiParams want = family_params(f, 6);
        CHECK(got.c0 == want.c0);
        REQUIRE(got.s.size() == 6);
        REQUIRE(got.t.size() == 6);
        for (int n = 0; n < 6; ++n) {
            CHECK_MESSAGE(got.s[static_cast<std::size_t>(n)] == want.s[static_cast<std::size_t>(n)], f.str() << " s_" << n);
            CHECK_MESSAGE(got.t_at(n + 1) == want.t_at(n + 1), f.str() << " t_" << n + 1);
        }
    }
}

TEST_CASE("parameter formulas") {
    CHECK(bernoulli_odd_sigma(0) == P({"1/4", "0", "-1/4"}));
    CHECK(bernoulli_odd_tau(1) == P({"-1/12", "0", "1/12"}));
    CHECK(euler_sigma(1, 0) == P({"3/4", "0", "-1/4"}));
    CHECK(euler_tau(0, 1) == P({"-1/4", "0", "1/4"}));
    CHECK(family_c0(Family::parse("bernoulli-odd")) == P({"0", "1/2"}));
    CHECK(family_c0(Family::parse("euler-nu1")) == P({"0", "1/2"}));
    CHECK(Family::parse("euler-nu2").str() == "euler-nu2");
    CHECK_THROWS_AS(Family::parse("laguerre"), ParseError);
    CHECK_THROWS_AS(bernoulli_odd_tau(0), DomainError);
}

TEST_CASE("determinant and recurrence agree") {
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        const JacobiParams p = jacobi_from_moments(s, 6);
        for (int n = 0; n <= 5; ++n) {
            const YPoly det = orth_poly_det(s, n);
            CHECK(det.is_monic());
            CHECK(det == orth_poly_rec(p, n));
            CHECK(det == named_family(f, n));
        }
    }
}

TEST_CASE("Hankel determinants from the parameters") {
    for (const Family& f : Family::all()) {
        const MomentSeq s = make_sequence(family_sequence(f));
        const JacobiParams p = family_params(f, 5);
        for (int n = 0; n <= 5; ++n) {
            Poly prod = pow(p.c0, static_cast<unsigned>(n + 1));
            for (int l = 1; l <= n; ++l) prod *= pow(p.t_at(l), static_cast<unsigned>(n + 1 - l));
            CHECK(prod == hankel_det(s, n));
        }
    }
}

TEST_CASE("functional and small cases") {
    const MomentSeq s = sequence_from_values("v", {Poly(1), Poly(2), Poly(5), Poly(14)});
    CHECK(apply_functional(s, YPoly::y_plus(Poly(3))) == Poly(5));
    // P_1 = y - c1/c0
    CHECK(orth_poly_det(s, 1) == YPoly::y_plus(Poly(-2)));
    CHECK(orth_poly_det(s, 0) == YPoly(Poly(1)));
}

TEST_CASE("errors") {
    const MomentSeq zero = sequence_from_values("zero", std::vector<Poly>(9));
    CHECK_THROWS_AS(orth_poly_det(zero, 1), DegenerateMomentsError);
    CHECK_THROWS_AS(jacobi_from_moments(zero, 2), DegenerateMomentsError);
    JacobiParams short_params;
    short_params.c0 = Poly(1);
    short_params.s = {Poly(0)};
    CHECK_THROWS_AS(orth_poly_rec(short_params, 3), ArityError);
    CHECK_THROWS_AS(short_params.t_at(1), ArityError);
    // parameters of the midpoint even-index sequence are not polynomial in x
    CHECK_THROWS_AS(jacobi_from_moments(make_sequence("bernoulli-nu-half(0)"), 3), ExactDivisionError);
}

TEST_CASE("euler-num needs the fallback for s_1") {
    const JacobiParams p = jacobi_from_moments(make_sequence("euler-num"), 4);
    for (const Poly& s : p.s) CHECK(s.is_zero());
    for (int n = 1; n <= 4; ++n) CHECK(p.t_at(n) == Poly(-n * n));
}

}  // TEST_SUITE
