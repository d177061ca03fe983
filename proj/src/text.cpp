#include "hf/text.hpp"

#include "hf/errors.hpp"

namespace hf::text {

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of rational strings");
    std::vector<Rational> cs;
    for (const auto& e : j) {
        if (e.is_string()) cs.push_back(Rational::parse(e.get<std::string>()));
        else if (e.is_number_integer()) cs.emplace_back(e.get<long>());
        else throw ParseError("polynomial coefficient must be a rational string");
    }
    return Poly(std::move(cs));
}

json ypoly_to_json(const YPoly& p) {
    json a = json::array();
    for (const auto& c : p.ycoeffs()) a.push_back(poly_to_json(c));
    return a;
}

YPoly ypoly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("y-polynomial must be a JSON array of polynomials");
    std::vector<Poly> cs;
    for (const auto& e : j) cs.push_back(poly_from_json(e));
    return YPoly(std::move(cs));
}

json series_to_json(const TruncSeries& s) {
    json coeffs = json::array();
    for (int e = s.min_exp(); e <= s.order(); ++e) coeffs.push_back(poly_to_json(s.coeff(e)));
    return json{{"var", s.var()},
                {"min_exp", s.min_exp()},
                {"order", s.order()},
                {"coeffs", coeffs},
                {"log", poly_to_json(s.log_coeff())}};
}

std::string group_digits_latex(const std::string& digits) {
    if (digits.size() < 4) return digits;
    std::string out;
    const std::size_t lead = digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (i - lead) % 3 == 0) out += "\\,";
        out += digits[i];
    }
    return out;
}

std::string rational_latex(const Rational& r) {
    const std::string sign = r.sign() < 0 ? "-" : "";
    const Integer num = abs(r.numerator());
    if (r.is_integer()) return sign + group_digits_latex(num.get_str());
    return sign + "\\frac{" + group_digits_latex(num.get_str()) + "}{" +
           group_digits_latex(r.denominator().get_str()) + "}";
}

std::string poly_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (i == 0 || !mag.is_one()) out += rational_latex(mag);
        if (i >= 1) out += "x";
        if (i > 1) out += "^{" + std::to_string(i) + "}";
    }
    return out;
}

std::string ypoly_latex(const YPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Poly c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c != Poly(1)) out += "\\left(" + poly_latex(c) + "\\right)";
        if (i >= 1) out += "y";
        if (i > 1) out += "^{" + std::to_string(i) + "}";
    }
    return out;
}

}  // namespace hf::text
