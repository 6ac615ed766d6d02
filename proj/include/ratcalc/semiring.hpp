#pragma once

#include "ratcalc/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace ratcalc {

enum class SemiringId : uint8_t {
    boolean,            // {0,1}, x+y-xy / xy
    natural,            // arbitrary-precision naturals
    integer,            // arbitrary-precision integers
    rational,           // exact rationals, a field
    max_plus,           // [-inf, +inf) with (max, +)
    completed_positive, // [0, +inf] with (+, *), totally starrable
};

class Semiring;

// An element of one concrete semiring. Every value knows its handle, so
// mixed-domain arithmetic is caught at run time. All payloads are exact:
// a rational plus an infinity tag for the two completed instances.
class Value {
public:
    SemiringId ring() const { return ring_; }
    bool operator==(const Value& o) const {
        return ring_ == o.ring_ && tag_ == o.tag_ && q_ == o.q_;
    }
    bool operator!=(const Value& o) const { return !(*this == o); }

    bool is_finite() const { return tag_ == Tag::finite; }
    bool is_neg_inf() const { return tag_ == Tag::neg_inf; }
    bool is_pos_inf() const { return tag_ == Tag::pos_inf; }
    // finite payload; meaningless under an infinity tag
    const Rational& rational() const { return q_; }

private:
    friend class Semiring;
    enum class Tag : uint8_t { finite, neg_inf, pos_inf };

    Value(SemiringId ring, Tag tag, Rational q) : q_(std::move(q)), ring_(ring), tag_(tag) {}

    Rational q_;
    SemiringId ring_;
    Tag tag_;
};

// One of the six concrete arithmetic domains. Handles are stateless
// singletons; all Value construction and arithmetic goes through them.
class Semiring {
public:
    static const Semiring& get(SemiringId id);
    static const Semiring& by_name(std::string_view name); // "bool"|"nat"|"int"|"rat"|"maxplus"|"cpos"

    SemiringId id() const { return id_; }
    std::string_view name() const { return name_; }
    bool is_commutative() const { return true; } // all shipped instances commute
    bool is_field() const { return id_ == SemiringId::rational; }
    bool has_total_star() const { return has_total_star_; }

    Value zero() const;
    Value one() const;

    Value add(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;

    // y with y = 1 + a*y and y = 1 + y*a, per instance's starrable set.
    bool is_starrable(const Value& a) const;
    Value star(const Value& a) const; // throws NotStarrableError

    bool is_zero(const Value& a) const { return a == zero(); }
    bool is_one(const Value& a) const { return a == one(); }

    // Checked constructors.
    Value from_rational(const Rational& q) const; // throws if q is outside the carrier
    Value from_int(long long v) const { return from_rational(Rational(v)); }
    Value from_bool(bool b) const;
    Value neg_infinity() const; // max_plus only
    Value pos_infinity() const; // completed_positive only

    Value parse(std::string_view text) const; // per-instance literal syntax
    std::string to_string(const Value& v) const;

    // Additive inverse; defined only over the field instance.
    Value negate(const Value& a) const;

private:
    explicit Semiring(SemiringId id, std::string_view name, bool total_star)
        : id_(id), name_(name), has_total_star_(total_star) {}

    void check(const Value& v, const char* op) const;
    Value finite(Rational q) const { return Value(id_, Value::Tag::finite, std::move(q)); }

    SemiringId id_;
    std::string_view name_;
    bool has_total_star_;
};

} // namespace ratcalc
