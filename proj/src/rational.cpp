#include "hf/rational.hpp"

#include "hf/errors.hpp"

#include <cctype>

namespace hf {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    const Integer num = parse_integer(trim(t.substr(0, slash)), text);
    const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
    if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational pow(const Rational& r, long e) {
    if (e < 0) {
        if (r.is_zero()) throw DomainError("zero raised to a negative power");
        return pow(Rational(1) / r, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace hf
