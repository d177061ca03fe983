#include "hf/ypoly.hpp"

#include "hf/errors.hpp"

namespace hf {

YPoly::YPoly(const Poly& c) {
    if (!c.is_zero()) ycoeffs_.push_back(c);
}

YPoly::YPoly(std::vector<Poly> ycoeffs) : ycoeffs_(std::move(ycoeffs)) { trim(); }

YPoly YPoly::y() { return YPoly(std::vector<Poly>{Poly(), Poly(1)}); }

YPoly YPoly::y_plus(const Poly& c) { return YPoly(std::vector<Poly>{c, Poly(1)}); }

void YPoly::trim() {
    while (!ycoeffs_.empty() && ycoeffs_.back().is_zero()) ycoeffs_.pop_back();
}

Poly YPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(ycoeffs_.size())) return {};
    return ycoeffs_[static_cast<std::size_t>(i)];
}

YPoly YPoly::shifted(int k) const {
    if (k < 0) throw DomainError("negative y-shift");
    if (is_zero()) return {};
    std::vector<Poly> cs(static_cast<std::size_t>(k));
    cs.insert(cs.end(), ycoeffs_.begin(), ycoeffs_.end());
    return YPoly(std::move(cs));
}

YPoly& YPoly::operator+=(const YPoly& o) {
    if (o.ycoeffs_.size() > ycoeffs_.size()) ycoeffs_.resize(o.ycoeffs_.size());
    for (std::size_t i = 0; i < o.ycoeffs_.size(); ++i) ycoeffs_[i] += o.ycoeffs_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
    if (o.ycoeffs_.size() > ycoeffs_.size()) ycoeffs_.resize(o.ycoeffs_.size());
    for (std::size_t i = 0; i < o.ycoeffs_.size(); ++i) ycoeffs_[i] -= o.ycoeffs_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator*=(const Poly& c) {
    for (auto& p : ycoeffs_) p *= c;
    trim();
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> out(a.ycoeffs_.size() + b.ycoeffs_.size() - 1);
    for (std::size_t i = 0; i < a.ycoeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.ycoeffs_.size(); ++j) out[i + j] += a.ycoeffs_[i] * b.ycoeffs_[j];
    return YPoly(std::move(out));
}

YPoly YPoly::operator-() const {
    YPoly r = *this;
    for (auto& p : r.ycoeffs_) p = -p;
    return r;
}

std::string YPoly::str() const {
    if (ycoeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Poly& c = ycoeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string term;
        if (i == 0 || c != Poly(1)) term = "(" + c.str() + ")";
        if (i > 0) {
            if (!term.empty()) term += "*";
            term += (i == 1) ? "y" : "y^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

}  // namespace hf
