#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace hf {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

    /// Throws DomainError when den == 0.
    Rational(const Integer& num, const Integer& den);

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (q may carry a sign; the result is canonical).
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    /// Canonical text: "p/q", or "p" when q = 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// r^e for any integer exponent; a negative exponent of zero is a DomainError.
Rational pow(const Rational& r, long e);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// (-1)^e as an integer parity, never through floating point.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace hf
