#include "hf/series.hpp"

#include "hf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hf {

TruncSeries::TruncSeries(std::string var, int min_exp, int order)
    : var_(std::move(var)), min_exp_(min_exp), order_(order) {
    if (order < min_exp - 1) throw DomainError("series order below its lowest exponent");
    coeffs_.resize(static_cast<std::size_t>(order - min_exp + 1));
}

TruncSeries::TruncSeries(std::string var, int min_exp, int order, std::vector<Poly> coeffs, Poly log_coeff)
    : TruncSeries(std::move(var), min_exp, order) {
    if (coeffs.size() > coeffs_.size()) {
        for (std::size_t i = coeffs_.size(); i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) throw DomainError("series coefficient beyond truncation order");
        coeffs.resize(coeffs_.size());
    }
    std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
    log_ = std::move(log_coeff);
}

TruncSeries TruncSeries::constant(std::string var, const Poly& c, int order) {
    return monomial(std::move(var), c, 0, order);
}

TruncSeries TruncSeries::monomial(std::string var, const Poly& c, int exponent, int order) {
    TruncSeries s(std::move(var), std::min(exponent, 0), order);
    if (exponent <= order) s.slot(exponent) = c;
    return s;
}

TruncSeries TruncSeries::from_coefficients(std::string var, const std::vector<Poly>& coeffs, int order) {
    TruncSeries s(std::move(var), 0, order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s.coeffs_[i] = coeffs[i];
    return s;
}

Poly TruncSeries::coeff(int e) const {
    if (e > order_) throw DomainError("series coefficient requested beyond truncation order");
    if (e < min_exp_) return {};
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

int TruncSeries::valuation() const {
    for (int e = min_exp_; e <= order_; ++e)
        if (!coeffs_[static_cast<std::size_t>(e - min_exp_)].is_zero()) return e;
    return order_ + 1;
}

bool TruncSeries::is_zero() const { return valuation() > order_ && log_.is_zero(); }

TruncSeries TruncSeries::with_log(const Poly& log_coeff) const {
    TruncSeries r = *this;
    r.log_ = log_coeff;
    return r;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order > order_) throw DomainError("cannot extend a truncated series");
    TruncSeries r(var_, std::min(min_exp_, new_order + 1), new_order);
    for (int e = r.min_exp_; e <= new_order; ++e) r.slot(e) = coeff(e);
    r.log_ = log_;
    return r;
}

TruncSeries TruncSeries::shifted(int k) const {
    if (!log_.is_zero()) throw DomainError("cannot shift a series with a log term");
    TruncSeries r = *this;
    r.min_exp_ += k;
    r.order_ += k;
    return r;
}

TruncSeries TruncSeries::rescaled(const Rational& c) const {
    if (c.is_zero()) throw DomainError("rescaling a series by zero");
    TruncSeries r = *this;
    for (int e = min_exp_; e <= order_; ++e) r.slot(e) *= pow(c, e);
    return r;
}

TruncSeries TruncSeries::stretched(int k, std::string new_var) const {
    if (k < 1) throw DomainError("stretch factor must be positive");
    TruncSeries r(std::move(new_var), min_exp_ * k, order_ * k + (k - 1));
    for (int e = min_exp_; e <= order_; ++e) r.slot(e * k) = coeff(e);
    r.log_ = log_ * Poly(k);
    return r;
}

TruncSeries TruncSeries::relabeled(std::string new_var) const {
    TruncSeries r = *this;
    r.var_ = std::move(new_var);
    return r;
}

void TruncSeries::check_var(const TruncSeries& o) const {
    if (var_ != o.var_) throw DomainError("series variables differ: " + var_ + " vs " + o.var_);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_var(o);
    const int lo = std::min(min_exp_, o.min_exp_);
    const int hi = std::min(order_, o.order_);
    TruncSeries r(var_, std::min(lo, hi + 1), hi);
    for (int e = r.min_exp_; e <= hi; ++e) r.slot(e) = coeff(e) + o.coeff(e);
    r.log_ = log_ + o.log_;
    return *this = std::move(r);
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries& TruncSeries::operator*=(const Poly& c) {
    for (auto& p : coeffs_) p *= c;
    log_ *= c;
    return *this;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& p : r.coeffs_) p = -p;
    r.log_ = -log_;
    return r;
}

namespace {

// A series that is exactly a constant polynomial c (its only stored slot is e = 0).
bool scalar_value(const TruncSeries& s, Poly& out) {
    if (!s.log_coeff().is_zero()) return false;
    for (int e = s.min_exp(); e <= s.order(); ++e)
        if (e != 0 && !s.coeff(e).is_zero()) return false;
    out = (s.min_exp() <= 0 && s.order() >= 0) ? s.coeff(0) : Poly();
    return true;
}

}  // namespace

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_var(b);
    if (!a.log_.is_zero() || !b.log_.is_zero()) {
        Poly c;
        if (a.log_.is_zero() && scalar_value(a, c) && b.order_ >= 0) return b * c;
        if (b.log_.is_zero() && scalar_value(b, c) && a.order_ >= 0) return a * c;
        throw DomainError("product involving a log term is not representable");
    }
    const int va = a.valuation();
    const int vb = b.valuation();
    // Known range: exponents fully determined by both operands.
    const int hi = std::min(a.order_ + std::min(vb, b.order_ + 1), b.order_ + std::min(va, a.order_ + 1));
    const int lo = std::min(a.min_exp_ + b.min_exp_, hi + 1);
    TruncSeries r(a.var_, lo, hi);
    for (int i = va; i <= a.order_; ++i) {
        const Poly& ai = a.coeffs_[static_cast<std::size_t>(i - a.min_exp_)];
        if (ai.is_zero()) continue;
        for (int j = vb; j <= b.order_ && i + j <= hi; ++j) {
            const Poly& bj = b.coeffs_[static_cast<std::size_t>(j - b.min_exp_)];
            if (!bj.is_zero()) r.slot(i + j) += ai * bj;
        }
    }
    return r;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
    if (var_ != o.var_ || log_ != o.log_) return false;
    const int lo = std::min(min_exp_, o.min_exp_);
    const int hi = std::min(order_, o.order_);
    for (int e = lo; e <= hi; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool any = false;
    if (!log_.is_zero()) {
        os << "(" << log_ << ")*log(" << var_ << ")";
        any = true;
    }
    for (int e = min_exp_; e <= order_; ++e) {
        const Poly& c = coeffs_[static_cast<std::size_t>(e - min_exp_)];
        if (c.is_zero()) continue;
        if (any) os << " + ";
        os << "(" << c << ")";
        if (e != 0) os << "*" << var_ << "^" << e;
        any = true;
    }
    if (any) os << " + ";
    os << "O(" << var_ << "^" << order_ + 1 << ")";
    return os.str();
}

TruncSeries divide(const TruncSeries& num, const TruncSeries& den) {
    if (num.var() != den.var()) throw DomainError("series variables differ: " + num.var() + " vs " + den.var());
    if (!num.log_coeff().is_zero() || !den.log_coeff().is_zero())
        throw SeriesDivisionError("series division with a log term");
    const int vd = den.valuation();
    if (vd > den.order()) throw SeriesDivisionError("series division by a series that vanishes to its order");
    const int vn = std::min(num.valuation(), num.order() + 1);
    const int lo = vn - vd;
    // Relative precision of the quotient is the smaller of the two operands'.
    const int hi = std::min(num.order() - vd, den.order() - vd + lo);
    const Poly lead = den.coeff(vd);
    std::vector<Poly> qs;
    for (int k = lo; k <= hi; ++k) {
        // num_{k+vd} = sum_{j} q_j den_{k+vd-j}
        Poly acc = num.coeff(k + vd);
        for (int j = lo; j < k; ++j) {
            const Poly& qj = qs[static_cast<std::size_t>(j - lo)];
            if (!qj.is_zero()) acc -= qj * den.coeff(k + vd - j);
        }
        try {
            qs.push_back(divide_exact(acc, lead));
        } catch (const ExactDivisionError&) {
            throw SeriesDivisionError("leading coefficient (" + lead.str() + ") does not divide (" + acc.str() + ")");
        }
    }
    return TruncSeries(num.var(), std::min(lo, hi + 1), hi, std::move(qs));
}

TruncSeries exp_series(std::string var, const Poly& c, int order) {
    std::vector<Poly> cs;
    Poly term(1);
    for (int n = 0; n <= order; ++n) {
        cs.push_back(term);
        term = term * c / Rational(n + 1);
    }
    return TruncSeries::from_coefficients(std::move(var), cs, order);
}

}  // namespace hf
