#include "hf/poly.hpp"

#include "hf/errors.hpp"

#include <sstream>

namespace hf {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw DomainError("negative monomial degree");
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Poly(std::move(cs));
}

Poly Poly::linear(const Rational& a, const Rational& b) { return Poly(std::vector<Rational>{b, a}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::operator()(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Accumulate in mpq_class directly; canonicalizing once per output slot.
    std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& q : acc) out.emplace_back(std::move(q));
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    if (c.is_zero()) throw DomainError("polynomial division by zero scalar");
    for (auto& v : coeffs_) v /= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned e) {
    Poly result(1);
    Poly base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw DomainError("polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly(), p};
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - q.degree() + 1));
    const Rational lead = q.leading();
    const auto& qc = q.coeffs();
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        const Rational c = rem[static_cast<std::size_t>(k + q.degree())] / lead;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= q.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= c * qc[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw ExactDivisionError("exact division by the zero polynomial");
    auto [quo, rem] = divmod(p, q);
    if (!rem.is_zero())
        throw ExactDivisionError("(" + p.str() + ") is not divisible by (" + q.str() + ")");
    return quo;
}

bool divides(const Poly& q, const Poly& p) {
    if (q.is_zero()) return p.is_zero();
    return divmod(p, q).second.is_zero();
}

}  // namespace hf
