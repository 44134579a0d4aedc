#pragma once

// Commutative rings with unit over which forms, chains and pairings are
// evaluated. Each ring is a small value type carrying its runtime
// parameters (modulus, tolerance) and exposing the arithmetic on its
// `value_type`. Nothing in the library divides.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

#include "dexc/errors.hpp"

namespace dexc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class RingKind { integer, rational, modular, floating };

struct RingSpec {
    RingKind kind = RingKind::integer;
    std::uint64_t modulus = 0;  // modular only
    double tolerance = 0.0;     // floating only

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Throws ConfigError unless the modulus / tolerance fit the kind.
void validate(const RingSpec& spec);

/// "integer", "rational", "modular:7", "float:1e-09".
std::string to_string(const RingSpec& spec);
RingSpec parse_ring_spec(std::string_view text);

std::string_view kind_name(RingKind kind);
RingKind parse_kind(std::string_view name);

template <class R>
concept CommutativeRing =
    std::regular<R> &&
    requires(const R r, const typename R::value_type a, std::string_view s, std::int64_t n) {
        typename R::value_type;
        { r.zero() } -> std::same_as<typename R::value_type>;
        { r.one() } -> std::same_as<typename R::value_type>;
        { r.from_int(n) } -> std::same_as<typename R::value_type>;
        { r.add(a, a) } -> std::same_as<typename R::value_type>;
        { r.sub(a, a) } -> std::same_as<typename R::value_type>;
        { r.neg(a) } -> std::same_as<typename R::value_type>;
        { r.mul(a, a) } -> std::same_as<typename R::value_type>;
        { r.eq(a, a) } -> std::same_as<bool>;
        { r.is_zero(a) } -> std::same_as<bool>;
        { r.parse(s) } -> std::same_as<typename R::value_type>;
        { r.format(a) } -> std::same_as<std::string>;
        { r.spec() } -> std::same_as<RingSpec>;
    };

/// ℤ with arbitrary precision.
class IntegerRing {
 public:
    using value_type = Integer;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t n) const { return n; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    value_type parse(std::string_view text) const;
    std::string format(const value_type& a) const { return a.str(); }
    RingSpec spec() const { return {RingKind::integer, 0, 0.0}; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// ℚ with arbitrary precision; values are kept in lowest terms.
class RationalRing {
 public:
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t n) const { return n; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    value_type parse(std::string_view text) const;
    std::string format(const value_type& a) const;
    RingSpec spec() const { return {RingKind::rational, 0, 0.0}; }

    friend bool operator==(const RationalRing&, const RationalRing&) = default;
};

/// ℤ/m for any m ≥ 2, composite moduli included. Residues live in [0, m).
class ModularRing {
 public:
    using value_type = std::uint64_t;

    explicit ModularRing(std::uint64_t modulus = 2);

    std::uint64_t modulus() const { return modulus_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t n) const;
    value_type add(value_type a, value_type b) const;
    value_type sub(value_type a, value_type b) const;
    value_type neg(value_type a) const { return a == 0 ? 0 : modulus_ - a; }
    value_type mul(value_type a, value_type b) const;
    bool eq(value_type a, value_type b) const { return a == b; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type parse(std::string_view text) const;
    std::string format(value_type a) const { return std::to_string(a); }
    RingSpec spec() const { return {RingKind::modular, modulus_, 0.0}; }

    friend bool operator==(const ModularRing&, const ModularRing&) = default;

 private:
    std::uint64_t modulus_;
};

/// Doubles compared within an absolute tolerance. Equality is not
/// transitive; exact rings should be used wherever results are asserted.
class FloatRing {
 public:
    using value_type = double;

    explicit FloatRing(double tolerance = 0.0);

    double tolerance() const { return tolerance_; }

    value_type zero() const { return 0.0; }
    value_type one() const { return 1.0; }
    value_type from_int(std::int64_t n) const { return static_cast<double>(n); }
    value_type add(value_type a, value_type b) const { return a + b; }
    value_type sub(value_type a, value_type b) const { return a - b; }
    value_type neg(value_type a) const { return -a; }
    value_type mul(value_type a, value_type b) const { return a * b; }
    bool eq(value_type a, value_type b) const;
    bool is_zero(value_type a) const { return eq(a, 0.0); }
    value_type parse(std::string_view text) const;
    std::string format(value_type a) const;
    RingSpec spec() const { return {RingKind::floating, 0, tolerance_}; }

    friend bool operator==(const FloatRing&, const FloatRing&) = default;

 private:
    double tolerance_;
};

static_assert(CommutativeRing<IntegerRing>);
static_assert(CommutativeRing<RationalRing>);
static_assert(CommutativeRing<ModularRing>);
static_assert(CommutativeRing<FloatRing>);

using AnyRing = std::variant<IntegerRing, RationalRing, ModularRing, FloatRing>;

AnyRing ring_from_spec(const RingSpec& spec);

/// Calls `f` with the concrete ring described by `spec`.
template <class F>
decltype(auto) visit_ring(const RingSpec& spec, F&& f) {
    return std::visit(std::forward<F>(f), ring_from_spec(spec));
}

// Runtime-typed elements, for callers that only learn the ring at run time.

class RingElement {
 public:
    using Value = std::variant<Integer, Rational, std::uint64_t, double>;

    RingElement(RingSpec ring, Value value) : ring_(ring), value_(std::move(value)) {}

    const RingSpec& ring() const { return ring_; }
    const Value& value() const { return value_; }

 private:
    RingSpec ring_;
    Value value_;
};

RingElement parse_element(const RingSpec& ring, std::string_view text);
std::string format_element(const RingElement& element);

enum class RingOp { add, sub, neg, mul, eq };

/// Evaluates one ring operation. `neg` ignores `b`; every other op requires
/// it. Operands from different rings raise RingMismatchError.
std::variant<RingElement, bool> ring_eval(const RingSpec& ring, RingOp op, const RingElement& a,
                                          const std::optional<RingElement>& b = std::nullopt);

}  // namespace dexc
