#pragma once

#include "hf/poly.hpp"

#include <string>
#include <vector>

namespace hf {

/// Truncated formal Laurent series in a named variable with coefficients in
/// Q[x], optionally carrying one symbolic logarithm term log_coeff * log(var).
///
/// The coefficient of var^e is known for min_exp <= e <= order; anything above
/// order is unknown and never read. Binary operations keep only the exponents
/// both operands determine. log_coeff is additive only: it survives sums,
/// differences and scaling by a polynomial, and any product that would
/// multiply it by a non-constant series raises DomainError.
class TruncSeries {
public:
    /// Zero series known through `order`.
    TruncSeries(std::string var, int min_exp, int order);
    /// coeffs[i] is the coefficient of var^(min_exp + i); known through `order`.
    TruncSeries(std::string var, int min_exp, int order, std::vector<Poly> coeffs, Poly log_coeff = {});

    static TruncSeries constant(std::string var, const Poly& c, int order);
    static TruncSeries monomial(std::string var, const Poly& c, int exponent, int order);
    /// Finite sum  sum_i poly_coeffs[i] var^i  known through `order`.
    static TruncSeries from_coefficients(std::string var, const std::vector<Poly>& coeffs, int order);

    const std::string& var() const { return var_; }
    int min_exp() const { return min_exp_; }
    int order() const { return order_; }
    const Poly& log_coeff() const { return log_; }

    /// Coefficient of var^e. Zero below min_exp; DomainError above order.
    Poly coeff(int e) const;
    /// Lowest exponent with a nonzero coefficient, or order + 1 if none.
    int valuation() const;
    bool is_zero() const;

    /// Same series with the log term replaced.
    TruncSeries with_log(const Poly& log_coeff) const;
    /// Forget everything above new_order (new_order <= order()).
    TruncSeries truncated(int new_order) const;
    /// Multiply by var^k (exponent shift). The log term must be zero.
    TruncSeries shifted(int k) const;
    /// Substitute var -> c * var, i.e. scale the coefficient of var^e by c^e.
    TruncSeries rescaled(const Rational& c) const;
    /// Substitute var -> new_var^k (k >= 1): exponent e becomes k*e.
    TruncSeries stretched(int k, std::string new_var) const;
    /// Same coefficients, new variable label.
    TruncSeries relabeled(std::string new_var) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Poly& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Poly& c) { return a *= c; }
    friend TruncSeries operator*(const Poly& c, TruncSeries a) { return a *= c; }
    TruncSeries operator-() const;

    /// Equal coefficients on the common known range, equal log terms, same variable.
    bool agrees_with(const TruncSeries& o) const;

    std::string str() const;

private:
    void check_var(const TruncSeries& o) const;
    Poly& slot(int e) { return coeffs_[static_cast<std::size_t>(e - min_exp_)]; }

    std::string var_;
    int min_exp_ = 0;
    int order_ = 0;
    std::vector<Poly> coeffs_;
    Poly log_;
};

/// num / den up to the precision both determine. Both log terms must be zero
/// and the lowest nonzero coefficient of den must divide exactly at every step;
/// otherwise SeriesDivisionError.
TruncSeries divide(const TruncSeries& num, const TruncSeries& den);

/// exp(c * var) through `order`.
TruncSeries exp_series(std::string var, const Poly& c, int order);

}  // namespace hf
