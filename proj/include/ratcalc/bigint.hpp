#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ratcalc {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little-endian, no trailing zero limbs). Used as the overflow escape
// hatch behind Rational; values normally live in the int64 fast path.
class BigInt {
public:
    BigInt() = default;
    explicit BigInt(long long v);

    static BigInt from_decimal(std::string_view text); // optional sign + digits
    static BigInt from_magnitude(unsigned __int128 mag, int sign);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division; remainder carries the dividend's sign.
    // Division by zero is a logic error upstream and throws.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    static BigInt gcd(const BigInt& a, const BigInt& b); // non-negative

    // -1, 0, +1 as *this compares to o.
    int compare(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }

    bool fits_int64() const;
    long long to_int64() const; // caller checks fits_int64

    std::string to_decimal() const;

    size_t bit_length() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    void trim();
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace ratcalc
