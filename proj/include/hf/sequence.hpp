#pragma once

#include "hf/poly.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

/// A moment sequence k -> c_k in Q[x], evaluated lazily and memoized.
///
/// Copies share one cache; the cache is internally synchronized, so a
/// MomentSeq may be read from several threads at once. The generator must be
/// pure.
class MomentSeq {
public:
    using Generator = std::function<Poly(int)>;

    MomentSeq(std::string name, Generator gen);

    const std::string& name() const;
    /// c_k for k >= 0.
    Poly operator()(int k) const;
    /// c_0, ..., c_{count-1}
    std::vector<Poly> prefix(int count) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Description of a built-in sequence. Text form (also the CLI syntax):
///
///   bernoulli-num            B_k
///   euler-num                E_k
///   bernoulli-poly           B_k(x)
///   euler-poly               E_k(x)
///   bernoulli-odd-half       B_{2k+1}((x+1)/2)
///   bernoulli-nu-half(v)     B_{2k+v}((x+1)/2)
///   bernoulli-even-mid       B_{2k}(1/2)
///   euler-nu-half(v)         E_{2k+v}((x+1)/2)
///   shifted(S, m)            k -> S_{k+m}
///   scaled(S, P)             k -> P^k S_k, P a JSON polynomial such as ["0","1"]
///   binomial-transform(S)    k -> sum_j C(k,j) S_j x^(k-j)
struct SequenceSpec {
    enum class Kind {
        bernoulli_num,
        euler_num,
        bernoulli_poly,
        euler_poly,
        bernoulli_odd_half,
        bernoulli_nu_half,
        bernoulli_even_mid,
        euler_nu_half,
        shifted,
        scaled,
        binomial_transform,
    };

    Kind kind = Kind::bernoulli_num;
    int param = 0;  // v for the *-nu-half kinds, m for shifted
    std::shared_ptr<const SequenceSpec> base;
    Poly factor;  // scaled only

    static SequenceSpec simple(Kind kind, int param = 0);
    static SequenceSpec shifted(SequenceSpec base, int m);
    static SequenceSpec scaled(SequenceSpec base, Poly factor);
    static SequenceSpec binomial_transform(SequenceSpec base);

    /// ParseError on malformed text; the message lists the known names.
    static SequenceSpec parse(std::string_view text);
    std::string str() const;
};

/// Names accepted by SequenceSpec::parse, with their argument shapes.
const std::vector<std::string>& known_sequence_names();

MomentSeq make_sequence(const SequenceSpec& spec);
MomentSeq make_sequence(std::string_view text);

/// k -> base_{k+m} on an existing sequence. For the Euler moments
/// E_{2k+v}((x+1)/2) a shift by one in k is the same as v -> v + 2.
MomentSeq make_shifted(const MomentSeq& base, int m);

/// Sequence with generator k -> values[k]; DomainError beyond the list.
MomentSeq sequence_from_values(std::string name, std::vector<Poly> values);

}  // namespace hf
