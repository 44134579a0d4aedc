#include "dexc/ring.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace dexc {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw FormatError("not a decimal integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text));
}

}  // namespace

void validate(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::modular:
            if (spec.modulus < 2) {
                throw ConfigError("modular ring needs modulus >= 2, got " +
                                  std::to_string(spec.modulus));
            }
            break;
        case RingKind::floating:
            if (!(spec.tolerance >= 0.0) || !std::isfinite(spec.tolerance)) {
                throw ConfigError("float ring needs a finite tolerance >= 0");
            }
            break;
        default:
            break;
    }
}

std::string_view kind_name(RingKind kind) {
    switch (kind) {
        case RingKind::integer: return "integer";
        case RingKind::rational: return "rational";
        case RingKind::modular: return "modular";
        case RingKind::floating: return "float";
    }
    return "?";
}

RingKind parse_kind(std::string_view name) {
    if (name == "integer") return RingKind::integer;
    if (name == "rational") return RingKind::rational;
    if (name == "modular") return RingKind::modular;
    if (name == "float") return RingKind::floating;
    throw ConfigError("unknown ring kind '" + std::string(name) + "'");
}

std::string to_string(const RingSpec& spec) {
    std::string out(kind_name(spec.kind));
    if (spec.kind == RingKind::modular) {
        out += ":" + std::to_string(spec.modulus);
    } else if (spec.kind == RingKind::floating) {
        out += ":" + FloatRing(spec.tolerance).format(spec.tolerance);
    }
    return out;
}

RingSpec parse_ring_spec(std::string_view text) {
    auto colon = text.find(':');
    RingSpec spec;
    spec.kind = parse_kind(text.substr(0, colon));
    std::string_view param = colon == std::string_view::npos ? std::string_view{}
                                                              : text.substr(colon + 1);
    if (spec.kind == RingKind::modular) {
        auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), spec.modulus);
        if (param.empty() || ec != std::errc{} || ptr != param.data() + param.size()) {
            throw ConfigError("modular ring spec needs 'modular:<m>'");
        }
    } else if (spec.kind == RingKind::floating && !param.empty()) {
        auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), spec.tolerance);
        if (ec != std::errc{} || ptr != param.data() + param.size()) {
            throw ConfigError("bad float tolerance '" + std::string(param) + "'");
        }
    } else if (!param.empty()) {
        throw ConfigError("ring '" + std::string(text) + "' takes no parameter");
    }
    validate(spec);
    return spec;
}

IntegerRing::value_type IntegerRing::parse(std::string_view text) const {
    return parse_integer(text);
}

RationalRing::value_type RationalRing::parse(std::string_view text) const {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw FormatError("rational denominator must be unsigned: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den.is_zero()) {
        throw FormatError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string RationalRing::format(const value_type& a) const {
    const Integer num = boost::multiprecision::numerator(a);
    const Integer den = boost::multiprecision::denominator(a);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

ModularRing::ModularRing(std::uint64_t modulus) : modulus_(modulus) {
    validate(RingSpec{RingKind::modular, modulus, 0.0});
}

ModularRing::value_type ModularRing::from_int(std::int64_t n) const {
    const auto m = static_cast<__int128>(modulus_);
    __int128 r = static_cast<__int128>(n) % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<value_type>(r);
}

ModularRing::value_type ModularRing::add(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) + b) % modulus_);
}

ModularRing::value_type ModularRing::sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(modulus_ - (b - a));
}

ModularRing::value_type ModularRing::mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % modulus_);
}

ModularRing::value_type ModularRing::parse(std::string_view text) const {
    Integer v = parse_integer(text);
    Integer m(modulus_);
    Integer r = v % m;
    if (r < 0) {
        r += m;
    }
    return r.convert_to<value_type>();
}

FloatRing::FloatRing(double tolerance) : tolerance_(tolerance) {
    validate(RingSpec{RingKind::floating, 0, tolerance});
}

bool FloatRing::eq(value_type a, value_type b) const {
    return std::fabs(a - b) <= tolerance_;
}

FloatRing::value_type FloatRing::parse(std::string_view text) const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw FormatError("not a finite decimal number: '" + std::string(text) + "'");
    }
    return v;
}

std::string FloatRing::format(value_type a) const {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, a);
    return std::string(buf, ptr);
}

AnyRing ring_from_spec(const RingSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case RingKind::integer: return IntegerRing{};
        case RingKind::rational: return RationalRing{};
        case RingKind::modular: return ModularRing{spec.modulus};
        case RingKind::floating: return FloatRing{spec.tolerance};
    }
    throw ConfigError("unknown ring kind");
}

RingElement parse_element(const RingSpec& ring, std::string_view text) {
    return visit_ring(ring, [&](const auto& r) {
        return RingElement(ring, RingElement::Value(r.parse(text)));
    });
}

std::string format_element(const RingElement& element) {
    return visit_ring(element.ring(), [&](const auto& r) {
        using V = typename std::decay_t<decltype(r)>::value_type;
        return r.format(std::get<V>(element.value()));
    });
}

std::variant<RingElement, bool> ring_eval(const RingSpec& ring, RingOp op, const RingElement& a,
                                          const std::optional<RingElement>& b) {
    if (a.ring() != ring || (b && b->ring() != ring)) {
        throw RingMismatchError("operand ring differs from " + to_string(ring));
    }
    if (op != RingOp::neg && !b) {
        throw ValidationError("binary ring operation needs two operands");
    }
    return visit_ring(ring, [&](const auto& r) -> std::variant<RingElement, bool> {
        using V = typename std::decay_t<decltype(r)>::value_type;
        const V& x = std::get<V>(a.value());
        auto wrap = [&](V v) { return RingElement(ring, RingElement::Value(std::move(v))); };
        switch (op) {
            case RingOp::add: return wrap(r.add(x, std::get<V>(b->value())));
            case RingOp::sub: return wrap(r.sub(x, std::get<V>(b->value())));
            case RingOp::mul: return wrap(r.mul(x, std::get<V>(b->value())));
            case RingOp::neg: return wrap(r.neg(x));
            case RingOp::eq: return r.eq(x, std::get<V>(b->value()));
        }
        throw ValidationError("unknown ring operation");
    });
}

}  // namespace dexc
