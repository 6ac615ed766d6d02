#include "ratcalc/semiring.hpp"

#include "ratcalc/errors.hpp"

namespace ratcalc {

namespace {

std::string describe(SemiringId id) {
    return std::string(Semiring::get(id).name());
}

} // namespace

const Semiring& Semiring::get(SemiringId id) {
    static const Semiring boolean(SemiringId::boolean, "bool", false);
    static const Semiring natural(SemiringId::natural, "nat", false);
    static const Semiring integer(SemiringId::integer, "int", false);
    static const Semiring rational(SemiringId::rational, "rat", false);
    static const Semiring max_plus(SemiringId::max_plus, "maxplus", false);
    static const Semiring completed(SemiringId::completed_positive, "cpos", true);
    switch (id) {
        case SemiringId::boolean: return boolean;
        case SemiringId::natural: return natural;
        case SemiringId::integer: return integer;
        case SemiringId::rational: return rational;
        case SemiringId::max_plus: return max_plus;
        case SemiringId::completed_positive: return completed;
    }
    throw Error("unknown semiring id");
}

const Semiring& Semiring::by_name(std::string_view name) {
    for (SemiringId id : {SemiringId::boolean, SemiringId::natural, SemiringId::integer,
                          SemiringId::rational, SemiringId::max_plus, SemiringId::completed_positive}) {
        if (get(id).name() == name) return get(id);
    }
    throw ParseError("unknown semiring '" + std::string(name) +
                     "' (expected bool|nat|int|rat|maxplus|cpos)");
}

void Semiring::check(const Value& v, const char* op) const {
    if (v.ring() != id_)
        throw DomainMismatchError(std::string(op) + ": operand from semiring '" +
                                  describe(v.ring()) + "' used in '" + std::string(name_) + "'");
}

Value Semiring::zero() const {
    if (id_ == SemiringId::max_plus) return Value(id_, Value::Tag::neg_inf, Rational());
    return finite(Rational(0));
}

Value Semiring::one() const {
    if (id_ == SemiringId::max_plus) return finite(Rational(0));
    return finite(Rational(1));
}

Value Semiring::from_bool(bool b) const {
    if (id_ != SemiringId::boolean) throw DomainMismatchError("from_bool on non-boolean semiring");
    return finite(Rational(b ? 1 : 0));
}

Value Semiring::neg_infinity() const {
    if (id_ != SemiringId::max_plus) throw DomainMismatchError("-inf only exists in maxplus");
    return Value(id_, Value::Tag::neg_inf, Rational());
}

Value Semiring::pos_infinity() const {
    if (id_ != SemiringId::completed_positive) throw DomainMismatchError("inf only exists in cpos");
    return Value(id_, Value::Tag::pos_inf, Rational());
}

Value Semiring::from_rational(const Rational& q) const {
    switch (id_) {
        case SemiringId::boolean:
            if (!(q.is_zero() || q.is_one()))
                throw DomainMismatchError("boolean value must be 0 or 1, got " + q.to_string());
            break;
        case SemiringId::natural:
            if (!q.is_integer() || q.sign() < 0)
                throw DomainMismatchError("natural value must be a non-negative integer, got " + q.to_string());
            break;
        case SemiringId::integer:
            if (!q.is_integer())
                throw DomainMismatchError("integer value must be integral, got " + q.to_string());
            break;
        case SemiringId::rational:
        case SemiringId::max_plus:
            break;
        case SemiringId::completed_positive:
            if (q.sign() < 0)
                throw DomainMismatchError("cpos value must be non-negative, got " + q.to_string());
            break;
    }
    return finite(q);
}

Value Semiring::add(const Value& a, const Value& b) const {
    check(a, "add");
    check(b, "add");
    switch (id_) {
        case SemiringId::boolean: {
            // x + y - xy on {0,1}
            bool r = !a.rational().is_zero() || !b.rational().is_zero();
            return finite(Rational(r ? 1 : 0));
        }
        case SemiringId::natural:
        case SemiringId::integer:
        case SemiringId::rational:
            return finite(a.rational() + b.rational());
        case SemiringId::max_plus: {
            if (a.is_neg_inf()) return b;
            if (b.is_neg_inf()) return a;
            return finite(a.rational() >= b.rational() ? a.rational() : b.rational());
        }
        case SemiringId::completed_positive: {
            if (a.is_pos_inf() || b.is_pos_inf()) return Value(id_, Value::Tag::pos_inf, Rational());
            return finite(a.rational() + b.rational());
        }
    }
    throw Error("unreachable");
}

Value Semiring::mul(const Value& a, const Value& b) const {
    check(a, "mul");
    check(b, "mul");
    switch (id_) {
        case SemiringId::boolean: {
            bool r = !a.rational().is_zero() && !b.rational().is_zero();
            return finite(Rational(r ? 1 : 0));
        }
        case SemiringId::natural:
        case SemiringId::integer:
        case SemiringId::rational:
            return finite(a.rational() * b.rational());
        case SemiringId::max_plus: {
            if (a.is_neg_inf() || b.is_neg_inf()) return Value(id_, Value::Tag::neg_inf, Rational());
            return finite(a.rational() + b.rational());
        }
        case SemiringId::completed_positive: {
            // 0 annihilates even against infinity
            if (is_zero(a) || is_zero(b)) return zero();
            if (a.is_pos_inf() || b.is_pos_inf()) return Value(id_, Value::Tag::pos_inf, Rational());
            return finite(a.rational() * b.rational());
        }
    }
    throw Error("unreachable");
}

bool Semiring::is_starrable(const Value& a) const {
    check(a, "star");
    switch (id_) {
        case SemiringId::boolean:
            return true;
        case SemiringId::natural:
        case SemiringId::integer:
            return is_zero(a);
        case SemiringId::rational:
            return !a.rational().is_one();
        case SemiringId::max_plus:
            return !a.is_neg_inf() ? a.rational().sign() <= 0 : true;
        case SemiringId::completed_positive:
            return true;
    }
    return false;
}

Value Semiring::star(const Value& a) const {
    check(a, "star");
    switch (id_) {
        case SemiringId::boolean:
            return one(); // 0* = 1* = 1
        case SemiringId::natural:
        case SemiringId::integer:
            if (is_zero(a)) return one();
            throw NotStarrableError("star over " + std::string(name_) + " is defined only at 0, got " +
                                    to_string(a));
        case SemiringId::rational:
            if (a.rational().is_one())
                throw NotStarrableError("star(1) has no solution of y = 1 + y over rat");
            return finite(Rational(1) / (Rational(1) - a.rational()));
        case SemiringId::max_plus:
            if (a.is_neg_inf() || a.rational().sign() <= 0) return one(); // max over n*a <= 0 is 0
            throw NotStarrableError("star over maxplus needs a <= 0, got " + to_string(a));
        case SemiringId::completed_positive:
            if (a.is_pos_inf() || a.rational() >= Rational(1))
                return Value(id_, Value::Tag::pos_inf, Rational());
            return finite(Rational(1) / (Rational(1) - a.rational()));
    }
    throw Error("unreachable");
}

Value Semiring::negate(const Value& a) const {
    check(a, "negate");
    if (id_ != SemiringId::rational)
        throw DomainMismatchError("negation requires the field instance (rat)");
    return finite(-a.rational());
}

Value Semiring::parse(std::string_view text) const {
    switch (id_) {
        case SemiringId::boolean:
            if (text == "0" || text == "false") return from_bool(false);
            if (text == "1" || text == "true") return from_bool(true);
            throw ParseError("bad boolean literal '" + std::string(text) + "'");
        case SemiringId::max_plus:
            if (text == "-inf") return neg_infinity();
            return from_rational(Rational::from_string(text));
        case SemiringId::completed_positive:
            if (text == "inf") return pos_infinity();
            return from_rational(Rational::from_string(text));
        default:
            return from_rational(Rational::from_string(text));
    }
}

std::string Semiring::to_string(const Value& v) const {
    check(v, "to_string");
    if (v.is_neg_inf()) return "-inf";
    if (v.is_pos_inf()) return "inf";
    return v.rational().to_string();
}

} // namespace ratcalc
