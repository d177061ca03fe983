#pragma once

#include "hf/rational.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hf {

/// Dense univariate polynomial over the rationals in the indeterminate x.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty list and equality is structural.
class Poly {
public:
    /// degree() of the zero polynomial.
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    Poly(I c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();
    static Poly monomial(const Rational& c, int degree);
    /// a*x + b
    static Poly linear(const Rational& a, const Rational& b);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const;
    Rational leading() const;

    Rational operator()(const Rational& at) const;

    /// p(inner(x)).
    Poly compose(const Poly& inner) const;
    Poly derivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    /// Division by a nonzero scalar.
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form such as "x^2 - x + 1/6".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned e);

/// Quotient and remainder of Euclidean division; q must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

/// p / q when q divides p exactly; ExactDivisionError otherwise.
Poly divide_exact(const Poly& p, const Poly& q);

bool divides(const Poly& q, const Poly& p);

}  // namespace hf
