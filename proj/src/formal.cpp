#include "hf/formal.hpp"

#include "hf/errors.hpp"
#include "hf/special.hpp"

#include <array>
#include <string>
#include <utility>

namespace hf {

TruncSeries psi_asymptotic(const Poly& a, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k)
        coeffs[static_cast<std::size_t>(k)] =
            bernoulli_poly(k).compose(a) * (Rational(sign_power(k - 1)) / Rational(k));
    return TruncSeries("w", 0, order, std::move(coeffs), Poly(1));
}

TruncSeries psi_prime_asymptotic(const Poly& a, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n + 1 <= order; ++n)
        coeffs[static_cast<std::size_t>(n + 1)] = bernoulli_poly(n).compose(a) * Rational(sign_power(n));
    return TruncSeries("w", 0, order, std::move(coeffs));
}

FormalKind parse_formal_kind(std::string_view name) {
    if (name == "bernoulli-odd") return FormalKind::bernoulli_odd;
    if (name == "euler-nu0") return FormalKind::euler_nu0;
    if (name == "euler-nu1") return FormalKind::euler_nu1;
    if (name == "euler-nu2") return FormalKind::euler_nu2;
    throw ParseError("unknown formal series kind '" + std::string(name) + "'");
}

std::string formal_kind_name(FormalKind kind) {
    switch (kind) {
    case FormalKind::bernoulli_odd: return "bernoulli-odd";
    case FormalKind::euler_nu0: return "euler-nu0";
    case FormalKind::euler_nu1: return "euler-nu1";
    case FormalKind::euler_nu2: return "euler-nu2";
    }
    return "?";
}

namespace {

// psi(1/(2z) + a) as a series in z: w = 2z.
TruncSeries psi_quarter(const Poly& a, int order) {
    return psi_asymptotic(a, order).rescaled(Rational(2)).relabeled("z");
}

TruncSeries cancel_log(const TruncSeries& s) {
    if (!s.log_coeff().is_zero())
        throw FormalCancellationError("residual logarithm " + s.log_coeff().str() + " after combination");
    return s;
}

// Combination of psi(1/(2z) + a) over a in {(3+x)/4, (1+x)/4, (3-x)/4, (1-x)/4}.
TruncSeries euler_combination(const std::array<int, 4>& signs, int order) {
    const Rational q(1, 4);
    const std::array<Poly, 4> args = {Poly::linear(q, Rational(3, 4)), Poly::linear(q, q),
                                      Poly::linear(-q, Rational(3, 4)), Poly::linear(-q, q)};
    TruncSeries sum("z", 0, order);
    for (std::size_t i = 0; i < 4; ++i) sum += psi_quarter(args[i], order) * Poly(signs[i]);
    return cancel_log(sum);
}

TruncSeries euler_nu0(int order) {
    return euler_combination({1, -1, 1, -1}, order + 1).shifted(-1) * Poly(Rational(1, 2));
}

}  // namespace

TruncSeries formal_F(FormalKind kind, int order) {
    if (order < 0 || order % 2 != 0) throw DomainError("formal series order must be even and nonnegative");
    TruncSeries out("z", 0, order);
    switch (kind) {
    case FormalKind::bernoulli_odd: {
        const Rational h(1, 2);
        TruncSeries diff = psi_prime_asymptotic(Poly::linear(-h, h), order + 2) -
                           psi_prime_asymptotic(Poly::linear(h, h), order + 2);
        out = cancel_log(diff).relabeled("z").shifted(-2) * Poly(h);
        break;
    }
    case FormalKind::euler_nu0: out = euler_nu0(order); break;
    case FormalKind::euler_nu1:
        out = euler_combination({-1, 1, 1, -1}, order + 2).shifted(-2) * Poly(Rational(1, 2));
        break;
    case FormalKind::euler_nu2: {
        const TruncSeries f0 = euler_nu0(order + 2);
        out = (f0 - TruncSeries::constant("z", Poly(1), order + 2)).shifted(-2);
        break;
    }
    }
    for (int e = out.min_exp(); e < 0; ++e)
        if (!out.coeff(e).is_zero())
            throw FormalCancellationError("nonzero coefficient at z^" + std::to_string(e));
    return out.truncated(order);
}

}  // namespace hf
