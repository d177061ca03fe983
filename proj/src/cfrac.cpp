#include "hf/cfrac.hpp"

#include <string>

namespace hf {

ContinuedFraction<TruncSeries> jfraction(const JacobiParams& params, const std::string& var, int order) {
    ContinuedFraction<TruncSeries> cf{TruncSeries(var, 0, order), {}, {}, 0};
    cf.partial_num = [params, var, order](int m) {
        if (m == 1) return TruncSeries::constant(var, params.c0, order);
        if (m - 1 > static_cast<int>(params.t.size()))
            throw ArityError("J-fraction needs t_" + std::to_string(m - 1));
        return TruncSeries::monomial(var, -params.t_at(m - 1), 2, order);
    };
    cf.partial_den = [params, var, order](int m) {
        if (m - 1 >= static_cast<int>(params.s.size()))
            throw ArityError("J-fraction needs s_" + std::to_string(m - 1));
        return TruncSeries::from_coefficients(var, {Poly(1), params.s[static_cast<std::size_t>(m - 1)]}, order);
    };
    return cf;
}

TruncSeries jfraction_series(const JacobiParams& params, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    const int t_order = order / 2;
    const int depth = (order + 1) / 2 + 1;
    const ContinuedFraction<TruncSeries> cf = jfraction(params, "t", t_order);
    const TruncSeries value = cf_value(cf, depth);
    const TruncSeries check = cf_value(cf, depth + 1);
    if (!value.agrees_with(check))
        throw Error("J-fraction approximants at depths " + std::to_string(depth) + " and " +
                    std::to_string(depth + 1) + " disagree");
    return value.truncated(t_order).stretched(2, "z").truncated(order);
}

TruncSeries moment_series(const MomentSeq& seq, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int k = 0; 2 * k <= order; ++k) coeffs[static_cast<std::size_t>(2 * k)] = seq(k);
    return TruncSeries("z", 0, order, std::move(coeffs));
}

bool verify_jfraction_vs_moments(const MomentSeq& seq, const JacobiParams& params, int order) {
    const TruncSeries lhs = jfraction_series(params, order);
    const TruncSeries rhs = moment_series(seq, order);
    return lhs.order() == rhs.order() && lhs.agrees_with(rhs);
}

}  // namespace hf
