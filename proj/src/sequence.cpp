#include "hf/sequence.hpp"

#include "hf/errors.hpp"
#include "hf/special.hpp"
#include "hf/text.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <unordered_map>

namespace hf {

struct MomentSeq::State {
    std::string name;
    Generator gen;
    std::mutex mutex;
    std::unordered_map<int, Poly> cache;
};

MomentSeq::MomentSeq(std::string name, Generator gen) : state_(std::make_shared<State>()) {
    state_->name = std::move(name);
    state_->gen = std::move(gen);
}

const std::string& MomentSeq::name() const { return state_->name; }

Poly MomentSeq::operator()(int k) const {
    if (k < 0) throw DomainError("negative moment index");
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->cache.find(k); it != state_->cache.end()) return it->second;
    }
    // Generate outside the lock: generators may evaluate other sequences.
    Poly value = state_->gen(k);
    std::lock_guard lock(state_->mutex);
    return state_->cache.try_emplace(k, std::move(value)).first->second;
}

std::vector<Poly> MomentSeq::prefix(int count) const {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int k = 0; k < count; ++k) out.push_back((*this)(k));
    return out;
}

SequenceSpec SequenceSpec::simple(Kind kind, int param) {
    SequenceSpec s;
    s.kind = kind;
    s.param = param;
    return s;
}

SequenceSpec SequenceSpec::shifted(SequenceSpec base, int m) {
    if (m < 0) throw DomainError("sequence shift must be nonnegative");
    SequenceSpec s;
    s.kind = Kind::shifted;
    s.param = m;
    s.base = std::make_shared<const SequenceSpec>(std::move(base));
    return s;
}

SequenceSpec SequenceSpec::scaled(SequenceSpec base, Poly factor) {
    SequenceSpec s;
    s.kind = Kind::scaled;
    s.factor = std::move(factor);
    s.base = std::make_shared<const SequenceSpec>(std::move(base));
    return s;
}

SequenceSpec SequenceSpec::binomial_transform(SequenceSpec base) {
    SequenceSpec s;
    s.kind = Kind::binomial_transform;
    s.base = std::make_shared<const SequenceSpec>(std::move(base));
    return s;
}

namespace {

const std::map<std::string, SequenceSpec::Kind>& plain_kinds() {
    using K = SequenceSpec::Kind;
    static const std::map<std::string, K> m{
        {"bernoulli-num", K::bernoulli_num},         {"euler-num", K::euler_num},
        {"bernoulli-poly", K::bernoulli_poly},       {"euler-poly", K::euler_poly},
        {"bernoulli-odd-half", K::bernoulli_odd_half}, {"bernoulli-even-mid", K::bernoulli_even_mid},
    };
    return m;
}

std::string names_hint() {
    std::string s;
    for (const auto& n : known_sequence_names()) s += (s.empty() ? "" : ", ") + n;
    return "known sequences: " + s;
}

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    SequenceSpec parse_all() {
        SequenceSpec s = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse sequence '" + std::string(text_) + "': " + what + "; " + names_hint());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    Poly json_poly() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected a JSON polynomial");
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated JSON polynomial");
        const auto body = text_.substr(pos_, close - pos_ + 1);
        pos_ = close + 1;
        try {
            return text::poly_from_json(text::json::parse(body));
        } catch (const text::json::exception& e) {
            fail(e.what());
        }
    }

    SequenceSpec parse_spec() {
        using K = SequenceSpec::Kind;
        const std::string name = identifier();
        if (name.empty()) fail("expected a sequence name");
        if (auto it = plain_kinds().find(name); it != plain_kinds().end()) return SequenceSpec::simple(it->second);
        if (name == "euler-nu-half" || name == "bernoulli-nu-half") {
            expect('(');
            const int nu = integer();
            expect(')');
            return SequenceSpec::simple(name == "euler-nu-half" ? K::euler_nu_half : K::bernoulli_nu_half, nu);
        }
        if (name == "shifted") {
            expect('(');
            SequenceSpec base = parse_spec();
            expect(',');
            const int m = integer();
            expect(')');
            return SequenceSpec::shifted(std::move(base), m);
        }
        if (name == "scaled") {
            expect('(');
            SequenceSpec base = parse_spec();
            expect(',');
            Poly p = json_poly();
            expect(')');
            return SequenceSpec::scaled(std::move(base), std::move(p));
        }
        if (name == "binomial-transform") {
            expect('(');
            SequenceSpec base = parse_spec();
            expect(')');
            return SequenceSpec::binomial_transform(std::move(base));
        }
        fail("unknown sequence name '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SequenceSpec SequenceSpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string SequenceSpec::str() const {
    using K = Kind;
    switch (kind) {
        case K::bernoulli_num: return "bernoulli-num";
        case K::euler_num: return "euler-num";
        case K::bernoulli_poly: return "bernoulli-poly";
        case K::euler_poly: return "euler-poly";
        case K::bernoulli_odd_half: return "bernoulli-odd-half";
        case K::bernoulli_even_mid: return "bernoulli-even-mid";
        case K::bernoulli_nu_half: return "bernoulli-nu-half(" + std::to_string(param) + ")";
        case K::euler_nu_half: return "euler-nu-half(" + std::to_string(param) + ")";
        case K::shifted: return "shifted(" + base->str() + "," + std::to_string(param) + ")";
        case K::scaled: return "scaled(" + base->str() + "," + text::poly_to_json(factor).dump() + ")";
        case K::binomial_transform: return "binomial-transform(" + base->str() + ")";
    }
    return "?";
}

const std::vector<std::string>& known_sequence_names() {
    static const std::vector<std::string> names{
        "bernoulli-num",      "euler-num",        "bernoulli-poly", "euler-poly",
        "bernoulli-odd-half", "bernoulli-nu-half(v)", "bernoulli-even-mid", "euler-nu-half(v)",
        "shifted(S,m)",       "scaled(S,P)",      "binomial-transform(S)",
    };
    return names;
}

MomentSeq make_sequence(const SequenceSpec& spec) {
    using K = SequenceSpec::Kind;
    const std::string name = spec.str();
    switch (spec.kind) {
        case K::bernoulli_num: return MomentSeq(name, [](int k) { return Poly(bernoulli_number(k)); });
        case K::euler_num: return MomentSeq(name, [](int k) { return Poly(euler_number(k)); });
        case K::bernoulli_poly: return MomentSeq(name, [](int k) { return bernoulli_poly(k); });
        case K::euler_poly: return MomentSeq(name, [](int k) { return euler_poly(k); });
        case K::bernoulli_odd_half:
            return MomentSeq(name, [](int k) { return bernoulli_poly(2 * k + 1).compose(half_shift()); });
        case K::bernoulli_nu_half: {
            const int nu = spec.param;
            return MomentSeq(name, [nu](int k) { return bernoulli_poly(2 * k + nu).compose(half_shift()); });
        }
        case K::bernoulli_even_mid:
            return MomentSeq(name, [](int k) { return Poly(bernoulli_poly(2 * k)(Rational(1) / 2)); });
        case K::euler_nu_half: {
            const int nu = spec.param;
            return MomentSeq(name, [nu](int k) { return euler_poly(2 * k + nu).compose(half_shift()); });
        }
        case K::shifted: {
            MomentSeq base = make_sequence(*spec.base);
            const int m = spec.param;
            return MomentSeq(name, [base, m](int k) { return base(k + m); });
        }
        case K::scaled: {
            MomentSeq base = make_sequence(*spec.base);
            const Poly p = spec.factor;
            return MomentSeq(name, [base, p](int k) { return pow(p, static_cast<unsigned>(k)) * base(k); });
        }
        case K::binomial_transform: {
            MomentSeq base = make_sequence(*spec.base);
            return MomentSeq(name, [base](int k) {
                Poly acc;
                for (int j = 0; j <= k; ++j)
                    acc += base(j) * Poly::monomial(Rational(binomial(static_cast<unsigned long>(k),
                                                                      static_cast<unsigned long>(j))),
                                                    k - j);
                return acc;
            });
        }
    }
    throw DomainError("unhandled sequence kind");
}

MomentSeq make_sequence(std::string_view text) { return make_sequence(SequenceSpec::parse(text)); }

MomentSeq make_shifted(const MomentSeq& base, int m) {
    if (m < 0) throw DomainError("sequence shift must be nonnegative");
    return MomentSeq("shifted(" + base.name() + "," + std::to_string(m) + ")", [base, m](int k) { return base(k + m); });
}

MomentSeq sequence_from_values(std::string name, std::vector<Poly> values) {
    auto shared = std::make_shared<const std::vector<Poly>>(std::move(values));
    return MomentSeq(std::move(name), [shared](int k) {
        if (k >= static_cast<int>(shared->size())) throw DomainError("moment index beyond the supplied values");
        return (*shared)[static_cast<std::size_t>(k)];
    });
}

}  // namespace hf
