#include "hf/orthopoly.hpp"

#include "hf/errors.hpp"
#include "hf/hankel.hpp"
#include "hf/shift.hpp"
#include "hf/special.hpp"

namespace hf {

const Poly& JacobiParams::t_at(int n) const {
    if (n < 1 || n > static_cast<int>(t.size())) throw ArityError("t_" + std::to_string(n) + " not available");
    return t[static_cast<std::size_t>(n - 1)];
}

Poly apply_functional(const MomentSeq& seq, const YPoly& p) {
    Poly acc;
    for (int k = 0; k <= p.degree(); ++k) {
        const Poly& c = p.ycoeffs()[static_cast<std::size_t>(k)];
        if (!c.is_zero()) acc += c * seq(k);
    }
    return acc;
}

YPoly orth_poly_det(const MomentSeq& seq, int n) {
    if (n < 0) throw DomainError("negative degree");
    if (n == 0) return YPoly(Poly(1));
    const Poly norm = hankel_det(seq, n - 1);
    if (norm.is_zero())
        throw DegenerateMomentsError("H_" + std::to_string(n - 1) + "(" + seq.name() + ") vanishes");
    const std::vector<Poly> c = seq.prefix(2 * n);
    // Expand the bordered determinant along its last row (1, y, ..., y^n).
    std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        PolyMatrix minor(n);
        for (int i = 0; i < n; ++i)
            for (int col = 0, mc = 0; col <= n; ++col) {
                if (col == j) continue;
                minor(i, mc++) = c[static_cast<std::size_t>(i + col)];
            }
        Poly cofactor = bareiss_determinant(std::move(minor));
        if ((n + j) % 2 != 0) cofactor = -cofactor;
        coeffs[static_cast<std::size_t>(j)] = divide_exact(cofactor, norm);
    }
    return YPoly(std::move(coeffs));
}

YPoly orth_poly_rec(const JacobiParams& params, int n) {
    if (n < 0) throw DomainError("negative degree");
    if (n == 0) return YPoly(Poly(1));
    if (static_cast<int>(params.s.size()) < n || static_cast<int>(params.t.size()) < n - 1)
        throw ArityError("recurrence parameters too short for degree " + std::to_string(n));
    YPoly previous(Poly(1));
    YPoly current = YPoly::y_plus(params.s[0]);
    for (int m = 1; m < n; ++m) {
        YPoly next = YPoly::y_plus(params.s[static_cast<std::size_t>(m)]) * current - previous * params.t_at(m);
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

JacobiParams jacobi_from_moments(const MomentSeq& seq, int depth) {
    if (depth < 0) throw DomainError("negative depth");
    const MomentSeq shifted = make_shifted(seq, 1);
    // h[m + 1] = H_m(seq) for m = -1 .. depth
    std::vector<Poly> h{Poly(1)};
    for (int m = 0; m <= depth; ++m) h.push_back(hankel_det(seq, m));
    auto H = [&h](int m) { return h[static_cast<std::size_t>(m + 1)]; };
    for (int m = 0; m < depth; ++m)
        if (H(m).is_zero())
            throw DegenerateMomentsError("H_" + std::to_string(m) + "(" + seq.name() + ") vanishes");

    std::vector<Poly> hs{Poly(), Poly(1)};  // hs[m + 2] = H_m(shifted), m = -2 .. depth-1
    for (int m = 0; m < depth; ++m) hs.push_back(hankel_det(shifted, m));
    auto HS = [&hs](int m) { return hs[static_cast<std::size_t>(m + 2)]; };

    JacobiParams p;
    p.c0 = seq(0);
    for (int n = 1; n <= depth; ++n) {
        const Poly denom = H(n - 1) * H(n - 1);
        p.t.push_back(divide_exact(H(n) * H(n - 2), denom));
    }
    for (int n = 0; n < depth; ++n) {
        if (!HS(n - 1).is_zero()) {
            p.s.push_back(s_from_hankel_values(n, H, HS));
            continue;
        }
        const YPoly next = orth_poly_det(seq, n + 1);
        const Poly sub_next = next.coeff(n);
        const Poly sub_here = n == 0 ? Poly() : orth_poly_det(seq, n).coeff(n - 1);
        p.s.push_back(sub_next - sub_here);
    }
    return p;
}

Family Family::parse(std::string_view name) {
    if (name == "touchard") return {Kind::touchard, 0};
    if (name == "alsalam-carlitz") return {Kind::alsalam_carlitz, 0};
    if (name == "bernoulli-odd") return {Kind::bernoulli_odd, 0};
    if (name == "euler-nu0") return {Kind::euler_nu, 0};
    if (name == "euler-nu1") return {Kind::euler_nu, 1};
    if (name == "euler-nu2") return {Kind::euler_nu, 2};
    throw ParseError("unknown family '" + std::string(name) +
                     "'; known families: touchard, alsalam-carlitz, bernoulli-odd, euler-nu0, euler-nu1, euler-nu2");
}

std::string Family::str() const {
    switch (kind) {
        case Kind::touchard: return "touchard";
        case Kind::alsalam_carlitz: return "alsalam-carlitz";
        case Kind::bernoulli_odd: return "bernoulli-odd";
        case Kind::euler_nu: return "euler-nu" + std::to_string(nu);
    }
    return "?";
}

std::vector<Family> Family::all() {
    return {{Kind::touchard, 0}, {Kind::alsalam_carlitz, 0}, {Kind::bernoulli_odd, 0},
            {Kind::euler_nu, 0}, {Kind::euler_nu, 1},        {Kind::euler_nu, 2}};
}

namespace {

// (x^2 - 1)/4
Poly quarter_x2_minus_1() { return Poly(std::vector<Rational>{Rational(-1) / 4, 0, Rational(1) / 4}); }

Poly x2_minus(const Rational& c) { return Poly(std::vector<Rational>{-c, 0, 1}); }

void check_nu(int nu) {
    if (nu < 0 || nu > 2) throw DomainError("Euler family parameter must be 0, 1 or 2");
}

}  // namespace

Poly bernoulli_odd_sigma(int n) {
    return Poly(Rational(static_cast<long>(n) * (n + 1) / 2)) - quarter_x2_minus_1();
}

Poly bernoulli_odd_tau(int n) {
    if (n < 1) throw DomainError("tau_n needs n >= 1");
    const Rational scale = pow(Rational(n), 4) / Rational(4L * (2 * n + 1) * (2 * n - 1));
    return x2_minus(Rational(n) * Rational(n)) * scale;
}

Poly euler_sigma(int nu, int n) {
    check_nu(nu);
    return Poly(Rational(2 * n + 1) * (Rational(n) + Rational(nu) / 2)) - quarter_x2_minus_1();
}

Poly euler_tau(int nu, int n) {
    check_nu(nu);
    if (n < 1) throw DomainError("tau_n needs n >= 1");
    const Rational root(2 * n + nu - 1);
    return x2_minus(root * root) * (Rational(n) * Rational(n) / 4);
}

Poly family_sigma(const Family& f, int n) {
    switch (f.kind) {
        case Family::Kind::touchard: return Poly(Rational(1) / 2);
        case Family::Kind::alsalam_carlitz: return Poly();
        case Family::Kind::bernoulli_odd: return bernoulli_odd_sigma(n);
        case Family::Kind::euler_nu: return euler_sigma(f.nu, n);
    }
    throw DomainError("unhandled family");
}

Poly family_tau(const Family& f, int n) {
    if (n < 1) throw DomainError("tau_n needs n >= 1");
    switch (f.kind) {
        case Family::Kind::touchard:
            return Poly(pow(Rational(n), 4) / Rational(4L * (2 * n + 1) * (2 * n - 1)));
        case Family::Kind::alsalam_carlitz: return Poly(Rational(n) * Rational(n));
        case Family::Kind::bernoulli_odd: return bernoulli_odd_tau(n);
        case Family::Kind::euler_nu: return euler_tau(f.nu, n);
    }
    throw DomainError("unhandled family");
}

SequenceSpec family_sequence(const Family& f) {
    using K = SequenceSpec::Kind;
    switch (f.kind) {
        case Family::Kind::touchard: return SequenceSpec::simple(K::bernoulli_num);
        case Family::Kind::alsalam_carlitz: return SequenceSpec::simple(K::euler_num);
        case Family::Kind::bernoulli_odd: return SequenceSpec::simple(K::bernoulli_odd_half);
        case Family::Kind::euler_nu: check_nu(f.nu); return SequenceSpec::simple(K::euler_nu_half, f.nu);
    }
    throw DomainError("unhandled family");
}

Poly family_c0(const Family& f) {
    switch (f.kind) {
        case Family::Kind::touchard:
        case Family::Kind::alsalam_carlitz: return Poly(1);
        case Family::Kind::bernoulli_odd: return bernoulli_poly(1).compose(half_shift());
        case Family::Kind::euler_nu: check_nu(f.nu); return euler_poly(f.nu).compose(half_shift());
    }
    throw DomainError("unhandled family");
}

JacobiParams family_params(const Family& f, int depth) {
    JacobiParams p;
    p.c0 = family_c0(f);
    for (int n = 0; n < depth; ++n) p.s.push_back(family_sigma(f, n));
    for (int n = 1; n <= depth; ++n) p.t.push_back(-family_tau(f, n));
    return p;
}

YPoly named_family(const Family& f, int n) {
    if (n < 0) throw DomainError("negative degree");
    if (n == 0) return YPoly(Poly(1));
    YPoly previous(Poly(1));
    YPoly current = YPoly::y_plus(family_sigma(f, 0));
    for (int m = 1; m < n; ++m) {
        YPoly next = YPoly::y_plus(family_sigma(f, m)) * current + previous * family_tau(f, m);
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

Poly verify_orthogonality(const MomentSeq& seq, int n, int r) {
    if (r < 0 || r > n) throw DomainError("orthogonality check needs 0 <= r <= n");
    return apply_functional(seq, orth_poly_det(seq, n).shifted(r));
}

}  // namespace hf
