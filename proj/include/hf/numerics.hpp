#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

/// psi(v) for real v > 0 (DomainError otherwise).
double digamma(double v);
/// psi'(v) for real v > 0 (DomainError otherwise).
double trigamma(double v);

/// b0 + a_1/(b_1 + a_2/(b_2 + ...)) over doubles, evaluated at `depth`.
struct FloatCF {
    double b0 = 0.0;
    std::function<double(int)> partial_num;
    std::function<double(int)> partial_den;
    int depth = 1;
};

struct FloatCFResult {
    double value = 0.0;
    int index = 0;            // approximant actually returned
    bool terminated = false;  // some a_m was exactly zero
    bool warning = false;     // B at the returned index is (nearly) zero
    std::string message;
};

/// A_depth / B_depth by the forward recurrence, rescaling to avoid overflow.
/// A zero a_m stops at the exact finite value. A (nearly) vanishing B is
/// reported through `warning` together with the last usable approximant.
FloatCFResult cf_eval_float(const FloatCF& cf);

enum class IdentityKind { ramanujan_48, lange_518, lange_520 };

IdentityKind parse_identity_kind(std::string_view name);
std::string identity_kind_name(IdentityKind kind);
std::vector<std::string> identity_kind_names();

struct IdentityParams {
    double s = 10.0;
    double a = 0.5;
    double b = 0.5;
};

struct IdentityReport {
    std::string identity;
    IdentityParams params;
    int depth = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    FloatCFResult cf;
};

/// The continued-fraction side of an identity.
FloatCF identity_cf(IdentityKind kind, const IdentityParams& p, int depth);
/// The polygamma side of an identity.
double identity_lhs(IdentityKind kind, const IdentityParams& p);

/// Both sides of
///   ramanujan-48:  sum_{k>=0} [1/(s-b+2k+1)^2 - 1/(s+b+2k+1)^2]
///                = b / (1(s^2-b^2+1) - 4(1^2-b^2)1^4 / (3(s^2-b^2+5) - 4(2^2-b^2)2^4 / (5(s^2-b^2+13) - ...)))
///   lange-518:     [psi((s-a+3b)/4b) - psi((s-a+b)/4b) + psi((s+a+3b)/4b) - psi((s+a+b)/4b)] / (4b)
///                = 1 / (s + (b^2-a^2) / (s + 4b^2 / (s + (9b^2-a^2) / (s + 16b^2 / (s + ...)))))
///   lange-520:     [psi((s-a+3)/4) - psi((s+a+3)/4) + psi((s+a+1)/4) - psi((s-a+1)/4)] / 4
///                = a/(s^2-1) / (1 + (4-a^2)/(s^2-1) / (1 + 4/(s^2-1) / (1 + (16-a^2)/(s^2-1) / (1 + 16/(s^2-1) / ...))))
/// (lange-520 ignores b). DomainError when a polygamma argument is not positive.
IdentityReport validate_identity(IdentityKind kind, const IdentityParams& p, int depth);

}  // namespace hf
