#include "hf/special.hpp"

#include "hf/errors.hpp"

#include <mutex>
#include <vector>

namespace hf {

namespace {

class NumberTable {
public:
    template <class Extend>
    Rational get(int n, Extend extend) {
        if (n < 0) throw DomainError("negative index");
        std::lock_guard lock(mutex_);
        while (static_cast<int>(values_.size()) <= n) values_.push_back(extend(values_));
        return values_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mutex_;
    std::vector<Rational> values_;
};

NumberTable& bernoulli_table() {
    static NumberTable t;
    return t;
}

NumberTable& euler_table() {
    static NumberTable t;
    return t;
}

}  // namespace

Rational bernoulli_number(int n) {
    return bernoulli_table().get(n, [](const std::vector<Rational>& b) {
        const auto m = static_cast<unsigned long>(b.size());
        if (m == 0) return Rational(1);
        Rational acc;
        for (unsigned long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        return -acc / Rational(static_cast<long>(m + 1));
    });
}

Rational euler_number(int n) {
    return euler_table().get(n, [](const std::vector<Rational>& e) {
        const auto m = static_cast<unsigned long>(e.size());
        if (m == 0) return Rational(1);
        if (m % 2 == 1) return Rational(0);
        Rational acc;
        for (unsigned long j = 0; j < m; j += 2) acc += Rational(binomial(m, j)) * e[j];
        return -acc;
    });
}

Poly bernoulli_poly(int n) {
    if (n < 0) throw DomainError("negative index");
    std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        cs[static_cast<std::size_t>(n - j)] =
            Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) * bernoulli_number(j);
    return Poly(std::move(cs));
}

Poly euler_poly(int n) {
    if (n < 0) throw DomainError("negative index");
    const Poly shift = Poly::linear(1, Rational(-1) / 2);
    Poly acc;
    Poly power(1);  // (x - 1/2)^(n-j), built from j = n downwards
    for (int j = n; j >= 0; --j) {
        const Rational e = euler_number(j);
        if (!e.is_zero())
            acc += power * (Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) * e /
                            pow(Rational(2), j));
        power *= shift;
    }
    return acc;
}

Poly half_shift() { return Poly::linear(Rational(1) / 2, Rational(1) / 2); }

bool verify_reflection(int n) {
    const Poly mirror = Poly::linear(-1, 1);
    const Rational sign = sign_power(n);
    const Poly b = bernoulli_poly(n);
    const Poly e = euler_poly(n);
    return b.compose(mirror) == b * sign && e.compose(mirror) == e * sign;
}

bool verify_euler_from_bernoulli(int n) {
    if (n < 1) throw DomainError("identity requires n >= 1");
    const Poly b = bernoulli_poly(n);
    const Rational scale = pow(Rational(2), n) / Rational(n);
    const Poly plain = (b.compose(half_shift()) - b.compose(Poly::linear(Rational(1) / 2, 0))) * scale;
    const Poly quarter = (b.compose(Poly::linear(Rational(1) / 4, Rational(3) / 4)) -
                          b.compose(Poly::linear(Rational(1) / 4, Rational(1) / 4))) *
                         scale;
    const Poly e = euler_poly(n - 1);
    return plain == e && quarter == e.compose(half_shift());
}

}  // namespace hf
