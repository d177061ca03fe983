#include "hf/hankel.hpp"

#include "hf/errors.hpp"
#include "hf/text.hpp"

namespace hf {

HankelMatrix hankel_matrix(const MomentSeq& seq, int n) {
    if (n < 0) throw DomainError("Hankel index must be nonnegative");
    HankelMatrix h{n, PolyMatrix(n + 1), seq.name()};
    const std::vector<Poly> c = seq.prefix(2 * n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) h.entries(i, j) = c[static_cast<std::size_t>(i + j)];
    return h;
}

Poly hankel_det(const MomentSeq& seq, int n) {
    if (n == -1) return Poly(1);
    return bareiss_determinant(hankel_matrix(seq, n).entries);
}

namespace {

long pair_count(int n) { return static_cast<long>(n) * (n + 1) / 2; }

}  // namespace

Rational closed_bernoulli_numbers(int n) {
    if (n < 0) throw DomainError("negative index");
    Rational acc = sign_power(pair_count(n));
    for (int l = 1; l <= n; ++l) {
        const Rational factor = pow(Rational(l), 4) / Rational(4L * (2 * l + 1) * (2 * l - 1));
        acc *= pow(factor, n + 1 - l);
    }
    return acc;
}

Poly closed_bernoulli_odd(int n) {
    if (n < 0) throw DomainError("negative index");
    Poly acc = Poly(sign_power(pair_count(n))) * pow(Poly::linear(Rational(1) / 2, 0), n + 1);
    for (int l = 1; l <= n; ++l) {
        const Rational scale = pow(Rational(l), 4) / Rational(4L * (2 * l + 1) * (2 * l - 1));
        const Poly factor = Poly(std::vector<Rational>{-Rational(l) * Rational(l), 0, 1}) * scale;
        acc *= pow(factor, static_cast<unsigned>(n + 1 - l));
    }
    return acc;
}

Poly closed_euler(EulerClosedKind kind, int n) {
    if (n < 0) throw DomainError("negative index");
    const Rational sign = sign_power(pair_count(n));
    auto factorial_product = [n] {
        Rational acc(1);
        for (int l = 1; l <= n; ++l) acc *= Rational(factorial(static_cast<unsigned long>(l))) * Rational(factorial(static_cast<unsigned long>(l)));
        return acc;
    };
    // prod_l (l^2/4 (x^2 - (2l + offset)^2))^{n+1-l}
    auto tau_product = [n](int offset) {
        Poly acc(1);
        for (int l = 1; l <= n; ++l) {
            const Rational root = 2 * l + offset;
            const Poly tau = Poly(std::vector<Rational>{-root * root, 0, 1}) * (Rational(l * l) / 4);
            acc *= pow(tau, static_cast<unsigned>(n + 1 - l));
        }
        return acc;
    };
    switch (kind) {
        case EulerClosedKind::numbers: return Poly(sign * factorial_product());
        case EulerClosedKind::polynomials:
            return Poly(pow(Rational(-1) / 4, pair_count(n)) * factorial_product());
        case EulerClosedKind::nu0: return tau_product(-1) * sign;
        case EulerClosedKind::nu1:
            return pow(Poly::linear(Rational(1) / 2, 0), static_cast<unsigned>(n + 1)) * tau_product(0) * sign;
        case EulerClosedKind::nu2: {
            const Poly c0 = Poly(std::vector<Rational>{Rational(-1) / 4, 0, Rational(1) / 4});
            return pow(c0, static_cast<unsigned>(n + 1)) * tau_product(1) * sign;
        }
    }
    throw DomainError("unhandled Euler closed form");
}

Rational closed_chen(int n) {
    if (n < 0) throw DomainError("negative index");
    Rational acc(1);
    for (int l = 1; l <= n; ++l) {
        const Rational num = pow(Rational(l), 4) * pow(Rational(2 * l - 1), 4);
        const Rational den = Rational(4 * l - 3) * pow(Rational(4 * l - 1), 2) * Rational(4 * l + 1);
        acc *= pow(num / den, n - l + 1);
    }
    return acc;
}

Poly EvenLinearFactorization::expand() const {
    Poly acc = Poly::monomial(constant, x_power);
    for (const auto& [l, e] : factors)
        acc *= pow(Poly(std::vector<Rational>{-Rational(l) * Rational(l), 0, 1}), static_cast<unsigned>(e));
    return acc * residual;
}

EvenLinearFactorization factor_even_linear(const Poly& p) {
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    EvenLinearFactorization f;
    Poly rest = p;
    while (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
        rest = divide_exact(rest, Poly::x());
        ++f.x_power;
    }
    // Integer roots are bounded by the Cauchy bound 1 + max |a_i / a_n|.
    Rational bound(1);
    for (int i = 0; i < rest.degree(); ++i) {
        Rational r = rest.coeff(i) / rest.leading();
        if (r.sign() < 0) r = -r;
        if (bound < r + 1) bound = r + 1;
    }
    for (int l = 1; rest.degree() >= 2 && !(bound < Rational(l)); ++l) {
        const Poly factor(std::vector<Rational>{-Rational(l) * Rational(l), 0, 1});
        int e = 0;
        while (rest.degree() >= 2 && rest(Rational(l)).is_zero() && rest(Rational(-l)).is_zero()) {
            rest = divide_exact(rest, factor);
            ++e;
        }
        if (e > 0) f.factors.emplace_back(l, e);
    }
    f.constant = rest.leading();
    f.residual = rest / rest.leading();
    return f;
}

std::string render_factored_latex(const EvenLinearFactorization& f) {
    std::string out;
    const Rational c = f.constant;
    const bool has_body = f.x_power > 0 || !f.factors.empty() || f.residual != Poly(1);
    if (c.sign() < 0) out += "-";
    const Rational mag = c.sign() < 0 ? -c : c;
    if (!mag.is_one() || !has_body) out += text::rational_latex(mag);
    auto exponent = [](int e) { return e < 10 ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}"; };
    if (f.x_power > 0) out += "x" + (f.x_power > 1 ? exponent(f.x_power) : std::string());
    for (const auto& [l, e] : f.factors) {
        out += "(x^2-" + (l == 1 ? std::string("1") : std::to_string(l) + "^2") + ")";
        if (e > 1) out += exponent(e);
    }
    if (f.residual != Poly(1)) out += "\\left(" + text::poly_latex(f.residual) + "\\right)";
    return out;
}

std::string render_factored_plain(const EvenLinearFactorization& f) {
    std::string out = f.constant.str();
    if (f.x_power > 0) out += " * x" + (f.x_power > 1 ? "^" + std::to_string(f.x_power) : std::string());
    for (const auto& [l, e] : f.factors) {
        out += " * (x^2-" + std::to_string(l * l) + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (f.residual != Poly(1)) out += " * (" + f.residual.str() + ")";
    return out;
}

}  // namespace hf
