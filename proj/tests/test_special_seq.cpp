#include "hf/errors.hpp"
#include "hf/sequence.hpp"
#include "hf/series.hpp"
#include "hf/special.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <gmpxx.h>

#include <thread>

using namespace hf;
using hf::test::P;
using hf::test::Q;

namespace {

// Akiyama-Tanigawa: yields B_n with B_1 = +1/2.
std::vector<mpq_class> akiyama_tanigawa(int count) {
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) {
        a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(j - 1)].canonicalize();
        }
        out.push_back(a[0]);
    }
    return out;
}

// Zigzag numbers by the boustrophedon triangle; E_{2n} = (-1)^n zigzag(2n).
std::vector<mpz_class> zigzag(int count) {
    std::vector<mpz_class> out{1};
    std::vector<mpz_class> row{1};
    for (int n = 1; n < count; ++n) {
        std::vector<mpz_class> next{0};
        for (std::size_t k = 0; k < row.size(); ++k) next.push_back(next.back() + row[row.size() - 1 - k]);
        row = next;
        out.push_back(row.back());
    }
    return out;
}

Rational from_mpq(const mpq_class& q) { return Rational(q); }

}  // namespace

TEST_SUITE("special-seq") {

TEST_CASE("numbers and polynomials of the printed table") {
    const char* bn[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"};
    const int en[] = {1, 0, -1, 0, 5, 0, -61};
    for (int n = 0; n <= 6; ++n) {
        CHECK(bernoulli_number(n) == Q(bn[n]));
        CHECK(euler_number(n) == Rational(en[n]));
    }
    CHECK(bernoulli_poly(3) == P({"0", "1/2", "-3/2", "1"}));
    CHECK(bernoulli_poly(6) == P({"1/42", "0", "-1/2", "0", "5/2", "-3", "1"}));
    CHECK(euler_poly(3) == P({"1/4", "0", "-3/2", "1"}));
    CHECK(euler_poly(5) == P({"-1/2", "0", "5/2", "0", "-5/2", "1"}));
    CHECK(euler_poly(6) == P({"0", "-3", "0", "5", "0", "-3", "1"}));
}

TEST_CASE("Bernoulli numbers against the Akiyama-Tanigawa oracle") {
    const auto oracle = akiyama_tanigawa(41);
    for (int n = 0; n <= 40; ++n) {
        const Rational want = n == 1 ? -from_mpq(oracle[1]) : from_mpq(oracle[static_cast<std::size_t>(n)]);
        CHECK(bernoulli_number(n) == want);
    }
}

TEST_CASE("Euler numbers against the boustrophedon oracle") {
    const auto z = zigzag(41);
    for (int n = 0; n <= 40; ++n) {
        const Rational want = n % 2 ? Rational(0) : Rational(z[static_cast<std::size_t>(n)]) * Rational(sign_power(n / 2));
        CHECK(euler_number(n) == want);
    }
}

TEST_CASE("generating-function oracles, n <= 30") {
    constexpr int N = 30;
    const TruncSeries one = TruncSeries::constant("t", Poly(1), N + 1);
    const TruncSeries t = TruncSeries::monomial("t", Poly(1), 1, N + 1);
    const TruncSeries b = divide(t, exp_series("t", Poly(1), N + 1) - one);
    // 1/cosh t = 2 e^t / (e^{2t} + 1)
    const TruncSeries e = divide(exp_series("t", Poly(1), N) * Poly(2), exp_series("t", Poly(2), N) + one);
    for (int n = 0; n <= N; ++n) {
        const Rational nf(factorial(static_cast<unsigned long>(n)));
        CHECK(b.coeff(n) * nf == Poly(bernoulli_number(n)));
        CHECK(e.coeff(n) * nf == Poly(euler_number(n)));
    }
}

TEST_CASE("polynomial difference and derivative laws") {
    const Poly xp1 = Poly::linear(Rational(1), Rational(1));
    for (int n = 1; n <= 20; ++n) {
        CHECK(bernoulli_poly(n).compose(xp1) - bernoulli_poly(n) == Poly::monomial(Rational(n), n - 1));
        CHECK(bernoulli_poly(n).derivative() == bernoulli_poly(n - 1) * Rational(n));
        CHECK(euler_poly(n).compose(xp1) + euler_poly(n) == Poly::monomial(Rational(2), n));
        CHECK(euler_poly(n).derivative() == euler_poly(n - 1) * Rational(n));
    }
}

TEST_CASE("special values and relations") {
    for (int n = 0; n <= 30; ++n) {
        CHECK(bernoulli_poly(n)(Rational(0)) == bernoulli_number(n));
        CHECK(euler_poly(n)(Rational(1, 2)) * pow(Rational(2), n) == euler_number(n));
        CHECK(verify_reflection(n));
        if (n >= 1) CHECK(verify_euler_from_bernoulli(n));
    }
    for (int j = 1; j <= 15; ++j) CHECK(bernoulli_number(2 * j + 1).is_zero());
    for (int j = 0; j <= 15; ++j) CHECK(euler_number(2 * j + 1).is_zero());
    CHECK_THROWS_AS(bernoulli_number(-1), DomainError);
    CHECK_THROWS_AS(verify_euler_from_bernoulli(0), DomainError);
}

TEST_CASE("sequence specs parse and print canonically") {
    for (const char* text : {"bernoulli-num", "euler-nu-half(1)", "shifted(euler-nu-half(0),1)",
                             "scaled(bernoulli-num,[\"0\",\"1\"])", "binomial-transform(euler-num)",
                             "bernoulli-nu-half(3)"}) {
        const SequenceSpec s = SequenceSpec::parse(text);
        CHECK(SequenceSpec::parse(s.str()).str() == s.str());
    }
    CHECK_THROWS_AS(SequenceSpec::parse("nope"), ParseError);
    CHECK_THROWS_AS(SequenceSpec::parse("shifted(bernoulli-num"), ParseError);
    try {
        SequenceSpec::parse("nope");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bernoulli-odd-half") != std::string::npos);
    }
}

TEST_CASE("built-in sequences") {
    const Poly h = half_shift();
    const MomentSeq odd = make_sequence("bernoulli-odd-half");
    for (int k = 0; k <= 6; ++k) CHECK(odd(k) == bernoulli_poly(2 * k + 1).compose(h));
    const MomentSeq e1 = make_sequence("euler-nu-half(1)");
    CHECK(e1(0) == P({"0", "1/2"}));
    const MomentSeq mid = make_sequence("bernoulli-even-mid");
    CHECK(mid(1) == Poly(Rational(-1, 12)));
    const MomentSeq sh = make_sequence("shifted(euler-nu-half(0),1)");
    const MomentSeq e2 = make_sequence("euler-nu-half(2)");
    for (int k = 0; k <= 6; ++k) CHECK(sh(k) == e2(k));
    const MomentSeq sc = make_sequence("scaled(bernoulli-num,[\"0\",\"1\"])");
    CHECK(sc(2) == Poly::monomial(Rational(1, 6), 2));
    // binomial transform of B_k is B_k(x)
    const MomentSeq bt = make_sequence("binomial-transform(bernoulli-num)");
    for (int k = 0; k <= 8; ++k) CHECK(bt(k) == bernoulli_poly(k));
    const MomentSeq vals = sequence_from_values("v", {Poly(1), Poly(2)});
    CHECK(vals(1) == Poly(2));
    CHECK_THROWS_AS(vals(2), DomainError);
    CHECK_THROWS_AS(odd(-1), DomainError);
}

TEST_CASE("moment cache is a function under concurrent use") {
    const MomentSeq s = make_sequence("euler-nu-half(1)");
    std::vector<std::vector<Poly>> seen(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < seen.size(); ++i)
        threads.emplace_back([&, i] { seen[i] = s.prefix(25); });
    for (auto& t : threads) t.join();
    for (const auto& v : seen) CHECK(v == seen[0]);
    CHECK(s.prefix(25) == seen[0]);
}

}  // TEST_SUITE
