#include "hf/errors.hpp"
#include "hf/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

using namespace hf;

namespace {

constexpr double kGamma = 0.57721566490153286061;

// Partial sum of 1/(v+k)^2 plus the Euler-Maclaurin tail.
double trigamma_oracle(double v) {
    const int terms = 1'000'000;
    double sum = 0.0;
    for (int k = terms - 1; k >= 0; --k) sum += 1.0 / ((v + k) * (v + k));
    const double w = v + terms;
    return sum + 1.0 / w + 1.0 / (2 * w * w) + 1.0 / (6 * w * w * w);
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("digamma special values") {
    CHECK(digamma(1.0) == doctest::Approx(-kGamma).epsilon(1e-14));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - kGamma).epsilon(1e-14));
    CHECK(digamma(0.5) == doctest::Approx(-kGamma - 2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(std::abs(digamma(1.4616321449683623)) < 1e-13);  // positive zero
}

TEST_CASE("trigamma special values") {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(trigamma(1.0) == doctest::Approx(pi2 / 6).epsilon(1e-14));
    CHECK(trigamma(0.5) == doctest::Approx(pi2 / 2).epsilon(1e-14));
    for (double v : {0.3, 1.7, 4.25, 11.0, 37.5}) CHECK(std::abs(trigamma(v) - trigamma_oracle(v)) < 1e-10);
}

TEST_CASE("recurrences in the argument") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(0.1, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double v = dist(rng);
        CHECK(std::abs(digamma(v + 1) - digamma(v) - 1 / v) < 1e-13);
        CHECK(std::abs(trigamma(v + 1) - trigamma(v) + 1 / (v * v)) < 1e-12 * (1 + 1 / (v * v)));
    }
}

TEST_CASE("polygamma domain") {
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(digamma(-1.5), DomainError);
    CHECK_THROWS_AS(trigamma(0.0), DomainError);
    CHECK_THROWS_AS(trigamma(std::nan("")), DomainError);
}

TEST_CASE("floating continued fractions") {
    // 1/(1 + 1/(1 + ...)) -> golden ratio conjugate.
    FloatCF golden{0.0, [](int) { return 1.0; }, [](int) { return 1.0; }, 60};
    const FloatCFResult g = cf_eval_float(golden);
    CHECK(g.value == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-15));
    CHECK(g.index == 60);
    CHECK_FALSE(g.terminated);
    // sqrt(2) = 1 + 1/(2 + 1/(2 + ...)).
    FloatCF root2{1.0, [](int) { return 1.0; }, [](int) { return 2.0; }, 40};
    CHECK(cf_eval_float(root2).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // Terminating fraction: a_3 = 0 leaves 1/(1 + 1/1).
    FloatCF stop{0.0, [](int m) { return m == 3 ? 0.0 : 1.0; }, [](int) { return 1.0; }, 10};
    const FloatCFResult s = cf_eval_float(stop);
    CHECK(s.terminated);
    CHECK(s.index == 2);
    CHECK(s.value == doctest::Approx(0.5));
    // Huge partial quantities are rescaled, not overflowed.
    FloatCF big{0.0, [](int) { return 1e200; }, [](int) { return 1e200; }, 50};
    CHECK(std::isfinite(cf_eval_float(big).value));
    // B_1 = 0.
    FloatCF pole{0.0, [](int) { return 1.0; }, [](int) { return 0.0; }, 1};
    CHECK(cf_eval_float(pole).warning);
}

TEST_CASE("identity names") {
    for (const std::string& name : identity_kind_names()) CHECK(identity_kind_name(parse_identity_kind(name)) == name);
    CHECK_THROWS_AS(parse_identity_kind("lange-999"), ParseError);
}

TEST_CASE("analytic continued fractions converge") {
    struct Case {
        IdentityKind kind;
        IdentityParams p;
    };
    const Case cases[] = {
        {IdentityKind::ramanujan_48, {10, 0, 0.5}}, {IdentityKind::ramanujan_48, {8, 0, 0.3}},
        {IdentityKind::ramanujan_48, {12, 0, 1.5}}, {IdentityKind::lange_518, {10, 0.5, 1}},
        {IdentityKind::lange_518, {8, 1, 0.5}},     {IdentityKind::lange_518, {12, 2, 1.5}},
        {IdentityKind::lange_520, {10, 0.5, 0}},    {IdentityKind::lange_520, {8, 1.5, 0}},
        {IdentityKind::lange_520, {12, 3, 0}},
    };
    for (const Case& c : cases) {
        const IdentityReport r = validate_identity(c.kind, c.p, 30);
        CHECK_MESSAGE(r.abs_err < 1e-10, r.identity << " s=" << c.p.s);
        double prev = INFINITY;
        for (int depth = 5; depth <= 30; depth += 5) {
            const double err = validate_identity(c.kind, c.p, depth).abs_err;
            CHECK(err <= prev + 1e-15);  // monotone down to the rounding floor
            prev = err;
        }
    }
}

TEST_CASE("terminating Ramanujan fraction") {
    const IdentityReport r = validate_identity(IdentityKind::ramanujan_48, {4, 0, 1}, 30);
    CHECK(r.cf.terminated);
    CHECK(r.rhs == doctest::Approx(1.0 / 16));
    CHECK(r.abs_err < 1e-14);
    CHECK_THROWS_AS(validate_identity(IdentityKind::lange_518, {1, 3, 1}, 10), DomainError);
}

}  // TEST_SUITE
