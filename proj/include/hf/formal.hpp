#pragma once

#include "hf/poly.hpp"
#include "hf/series.hpp"

#include <string>
#include <string_view>

namespace hf {

/// Asymptotic expansion of psi(z + a) in w = 1/z through w^order:
///   log z + sum_{k>=1} (-1)^{k-1} B_k(a) / k * w^k.
/// The log term (coefficient 1) stands for log z.
TruncSeries psi_asymptotic(const Poly& a, int order);

/// Asymptotic expansion of psi'(z + a) in w = 1/z through w^order:
///   sum_{n>=0} (-1)^n B_n(a) w^{n+1}.
TruncSeries psi_prime_asymptotic(const Poly& a, int order);

enum class FormalKind { bernoulli_odd, euler_nu0, euler_nu1, euler_nu2 };

/// bernoulli-odd | euler-nu0 | euler-nu1 | euler-nu2
FormalKind parse_formal_kind(std::string_view name);
std::string formal_kind_name(FormalKind kind);

/// Generating series in z through z^order assembled from polygamma expansions:
///   bernoulli-odd  (psi'(1/z + (1-x)/2) - psi'(1/z + (1+x)/2)) / (2 z^2)
///   euler-nu0      (psi(Z + (3+x)/4) - psi(Z + (1+x)/4) + psi(Z + (3-x)/4) - psi(Z + (1-x)/4)) / (2z)
///   euler-nu1      (-psi(Z + (3+x)/4) + psi(Z + (1+x)/4) + psi(Z + (3-x)/4) - psi(Z + (1-x)/4)) / (2z^2)
///   euler-nu2      (F_nu0 - 1) / z^2
/// with Z = 1/(2z). These equal sum_k B_{2k+1}((x+1)/2) z^{2k} and
/// sum_k E_{2k+nu}((x+1)/2) z^{2k} respectively.
/// DomainError unless order is even and >= 0; FormalCancellationError if the
/// logarithms fail to cancel.
TruncSeries formal_F(FormalKind kind, int order);

}  // namespace hf
