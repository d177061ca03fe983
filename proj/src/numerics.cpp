#include "hf/numerics.hpp"

#include "hf/errors.hpp"
#include "hf/special.hpp"

#include <array>
#include <cmath>

namespace hf {

namespace {

constexpr double kRaise = 10.0;
constexpr int kTerms = 9;  // B_2 .. B_18

const std::array<double, kTerms>& even_bernoulli() {
    static const std::array<double, kTerms> table = [] {
        std::array<double, kTerms> t{};
        for (int k = 1; k <= kTerms; ++k) t[static_cast<std::size_t>(k - 1)] = bernoulli_number(2 * k).to_double();
        return t;
    }();
    return table;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " needs a positive finite argument, got " + std::to_string(v));
}

}  // namespace

double digamma(double v) {
    require_positive(v, "digamma");
    double shift = 0.0;
    while (v < kRaise) {
        shift -= 1.0 / v;
        v += 1.0;
    }
    const double inv2 = 1.0 / (v * v);
    double pw = inv2;
    double sum = std::log(v) - 0.5 / v;
    for (int k = 1; k <= kTerms; ++k) {
        sum -= even_bernoulli()[static_cast<std::size_t>(k - 1)] / (2.0 * k) * pw;
        pw *= inv2;
    }
    return sum + shift;
}

double trigamma(double v) {
    require_positive(v, "trigamma");
    double shift = 0.0;
    while (v < kRaise) {
        shift += 1.0 / (v * v);
        v += 1.0;
    }
    const double inv2 = 1.0 / (v * v);
    double pw = inv2 / v;
    double sum = 1.0 / v + 0.5 * inv2;
    for (int k = 1; k <= kTerms; ++k) {
        sum += even_bernoulli()[static_cast<std::size_t>(k - 1)] * pw;
        pw *= inv2;
    }
    return sum + shift;
}

FloatCFResult cf_eval_float(const FloatCF& cf) {
    if (cf.depth < 1) throw DomainError("float continued fraction needs depth >= 1");
    constexpr double kBig = 1e150;
    constexpr double kTiny = 1e-300;
    double a_prev = 1.0, a_cur = cf.b0;
    double b_prev = 0.0, b_cur = 1.0;
    FloatCFResult out;
    out.value = cf.b0;
    for (int m = 1; m <= cf.depth; ++m) {
        const double am = cf.partial_num(m);
        if (am == 0.0) {
            out.terminated = true;
            break;
        }
        const double bm = cf.partial_den(m);
        const double a_next = bm * a_cur + am * a_prev;
        const double b_next = bm * b_cur + am * b_prev;
        a_prev = a_cur;
        a_cur = a_next;
        b_prev = b_cur;
        b_cur = b_next;
        const double scale = std::max(std::abs(a_cur), std::abs(b_cur));
        if (scale > kBig || (scale > 0.0 && scale < 1.0 / kBig)) {
            a_prev /= scale;
            a_cur /= scale;
            b_prev /= scale;
            b_cur /= scale;
        }
        if (std::abs(b_cur) <= kTiny * std::max(1.0, std::abs(a_cur))) {
            out.warning = true;
            out.message = "denominator B_" + std::to_string(m) + " vanishes; returning approximant " +
                          std::to_string(out.index);
            continue;
        }
        out.value = a_cur / b_cur;
        out.index = m;
    }
    if (out.terminated && out.index + 1 < cf.depth && out.message.empty())
        out.message = "terminated after approximant " + std::to_string(out.index);
    return out;
}

IdentityKind parse_identity_kind(std::string_view name) {
    if (name == "ramanujan-48") return IdentityKind::ramanujan_48;
    if (name == "lange-518") return IdentityKind::lange_518;
    if (name == "lange-520") return IdentityKind::lange_520;
    throw ParseError("unknown identity '" + std::string(name) + "' (known: ramanujan-48, lange-518, lange-520)");
}

std::string identity_kind_name(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::ramanujan_48: return "ramanujan-48";
    case IdentityKind::lange_518: return "lange-518";
    case IdentityKind::lange_520: return "lange-520";
    }
    return "?";
}

std::vector<std::string> identity_kind_names() { return {"ramanujan-48", "lange-518", "lange-520"}; }

FloatCF identity_cf(IdentityKind kind, const IdentityParams& p, int depth) {
    FloatCF cf;
    cf.depth = depth;
    const double s = p.s, a = p.a, b = p.b;
    switch (kind) {
    case IdentityKind::ramanujan_48:
        cf.partial_num = [b](int m) {
            if (m == 1) return b;
            const double k = m - 1;
            return -4.0 * (k * k - b * b) * k * k * k * k;
        };
        cf.partial_den = [s, b](int m) {
            const double k = m;
            return (2.0 * k - 1.0) * (s * s - b * b + 2.0 * k * (k - 1.0) + 1.0);
        };
        break;
    case IdentityKind::lange_518:
        cf.partial_num = [a, b](int m) {
            if (m == 1) return 1.0;
            const int k = m - 1;
            if (k % 2 == 1) {
                const double j = k;
                return j * j * b * b - a * a;
            }
            const double n = k / 2;
            return 4.0 * n * n * b * b;
        };
        cf.partial_den = [s](int) { return s; };
        break;
    case IdentityKind::lange_520: {
        const double q = s * s - 1.0;
        if (q == 0.0) throw DomainError("lange-520 needs s^2 != 1");
        cf.partial_num = [a, q](int m) {
            if (m == 1) return a / q;
            const int k = m - 1;
            const double n = (k + 1) / 2;
            if (k % 2 == 1) return (4.0 * n * n - a * a) / q;
            return 4.0 * n * n / q;
        };
        cf.partial_den = [](int) { return 1.0; };
        break;
    }
    }
    return cf;
}

double identity_lhs(IdentityKind kind, const IdentityParams& p) {
    const double s = p.s, a = p.a, b = p.b;
    switch (kind) {
    case IdentityKind::ramanujan_48:
        return (trigamma((s - b + 1.0) / 2.0) - trigamma((s + b + 1.0) / 2.0)) / 4.0;
    case IdentityKind::lange_518:
        if (b == 0.0) throw DomainError("lange-518 needs b != 0");
        return (digamma((s - a + 3.0 * b) / (4.0 * b)) - digamma((s - a + b) / (4.0 * b)) +
                digamma((s + a + 3.0 * b) / (4.0 * b)) - digamma((s + a + b) / (4.0 * b))) /
               (4.0 * b);
    case IdentityKind::lange_520:
        return (digamma((s - a + 3.0) / 4.0) - digamma((s + a + 3.0) / 4.0) + digamma((s + a + 1.0) / 4.0) -
                digamma((s - a + 1.0) / 4.0)) /
               4.0;
    }
    return 0.0;
}

IdentityReport validate_identity(IdentityKind kind, const IdentityParams& p, int depth) {
    IdentityReport r;
    r.identity = identity_kind_name(kind);
    r.params = p;
    r.depth = depth;
    r.lhs = identity_lhs(kind, p);
    r.cf = cf_eval_float(identity_cf(kind, p, depth));
    r.rhs = r.cf.value;
    r.abs_err = std::abs(r.lhs - r.rhs);
    return r;
}

}  // namespace hf
