#pragma once

#include "ratcalc/bigint.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace ratcalc {

// Exact rational number. Small values (the overwhelmingly common case)
// live in a pair of int64; anything that overflows promotes to a shared
// immutable BigInt pair. Always normalized: gcd(num, den) = 1, den > 0,
// and the big payload is present only when the value cannot be small.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit on purpose
    Rational(long long num, long long den);

    static Rational from_bigints(BigInt num, BigInt den);
    // "p" or "p/q", optional leading sign
    static Rational from_string(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws on zero divisor

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    // -1 / 0 / +1 as *this compares to o (exact order)
    int compare(const Rational& o) const;
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    // "p" when integral, else "p/q"
    std::string to_string() const;

    BigInt numerator() const;
    BigInt denominator() const;

private:
    struct BigPair {
        BigInt num;
        BigInt den; // > 0, coprime with num
    };

    long long num_;
    long long den_; // > 0 in the small path
    std::shared_ptr<const BigPair> big_;

    static Rational make_small(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    static Rational normalize_i128(__int128 num, __int128 den);
    static Rational normalize_big(BigInt num, BigInt den);
};

} // namespace ratcalc
