#pragma once

#include "hf/poly.hpp"

#include <string>
#include <vector>

namespace hf {

/// Polynomial in a second indeterminate y with coefficients in Q[x].
/// Stored lowest y-degree first, without trailing zero coefficients.
class YPoly {
public:
    YPoly() = default;
    YPoly(const Poly& c);  // NOLINT(google-explicit-constructor)
    explicit YPoly(std::vector<Poly> ycoeffs);

    /// y
    static YPoly y();
    /// y + c
    static YPoly y_plus(const Poly& c);

    int degree() const { return static_cast<int>(ycoeffs_.size()) - 1; }
    bool is_zero() const { return ycoeffs_.empty(); }
    bool is_monic() const { return !ycoeffs_.empty() && ycoeffs_.back() == Poly(1); }
    const std::vector<Poly>& ycoeffs() const { return ycoeffs_; }
    /// Coefficient of y^i; zero outside the stored range.
    Poly coeff(int i) const;

    /// Multiplication by y^k.
    YPoly shifted(int k) const;

    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    YPoly& operator*=(const Poly& c);

    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);
    friend YPoly operator*(YPoly a, const Poly& c) { return a *= c; }
    friend YPoly operator*(const Poly& c, YPoly a) { return a *= c; }
    YPoly operator-() const;

    friend bool operator==(const YPoly& a, const YPoly& b) { return a.ycoeffs_ == b.ycoeffs_; }

    std::string str() const;

private:
    void trim();

    std::vector<Poly> ycoeffs_;
};

}  // namespace hf
