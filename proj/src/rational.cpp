#include "ratcalc/rational.hpp"

#include "ratcalc/errors.hpp"

namespace ratcalc {

namespace {

constexpr long long kSmallMax = 0x7fffffffffffffffll;

unsigned __int128 abs128(__int128 v) {
    return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational Rational::normalize_i128(__int128 num, __int128 den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (num == 0) return Rational();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    unsigned __int128 g = gcd128(abs128(num), static_cast<unsigned __int128>(den));
    unsigned __int128 n = abs128(num) / g;
    unsigned __int128 d = static_cast<unsigned __int128>(den) / g;
    if (n <= static_cast<unsigned __int128>(kSmallMax) && d <= static_cast<unsigned __int128>(kSmallMax)) {
        long long nn = static_cast<long long>(n);
        return make_small(num < 0 ? -nn : nn, static_cast<long long>(d));
    }
    Rational r;
    auto p = std::make_shared<BigPair>();
    p->num = BigInt::from_magnitude(n, num < 0 ? -1 : 1);
    p->den = BigInt::from_magnitude(d, 1);
    r.big_ = std::move(p);
    r.num_ = 0;
    r.den_ = 1;
    return r;
}

Rational Rational::normalize_big(BigInt num, BigInt den) {
    if (den.is_zero()) throw Error("rational with zero denominator");
    if (num.is_zero()) return Rational();
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = BigInt::gcd(num, den);
    num = num / g;
    den = den / g;
    if (num.fits_int64() && den.fits_int64())
        return make_small(num.to_int64(), den.to_int64());
    Rational r;
    auto p = std::make_shared<BigPair>();
    p->num = std::move(num);
    p->den = std::move(den);
    r.big_ = std::move(p);
    r.num_ = 0;
    r.den_ = 1;
    return r;
}

Rational::Rational(long long num, long long den) {
    *this = normalize_i128(num, den);
}

Rational Rational::from_bigints(BigInt num, BigInt den) {
    return normalize_big(std::move(num), std::move(den));
}

Rational Rational::from_string(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return normalize_big(BigInt::from_decimal(text), BigInt(1));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty())
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    return normalize_big(BigInt::from_decimal(num), BigInt::from_decimal(den));
}

bool Rational::is_integer() const {
    if (!big_) return den_ == 1;
    return big_->den == BigInt(1);
}

int Rational::sign() const {
    if (!big_) return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
    return big_->num.sign();
}

Rational Rational::operator-() const {
    if (!big_) return make_small(-num_, den_);
    Rational r;
    auto p = std::make_shared<BigPair>();
    p->num = -big_->num;
    p->den = big_->den;
    r.big_ = std::move(p);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    if (!big_ && !o.big_) {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return normalize_i128(n, d);
    }
    BigInt an = numerator(), ad = denominator();
    BigInt bn = o.numerator(), bd = o.denominator();
    return normalize_big(an * bd + bn * ad, ad * bd);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    if (!big_ && !o.big_) {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return normalize_i128(n, d);
    }
    return normalize_big(numerator() * o.numerator(), denominator() * o.denominator());
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    if (!big_ && !o.big_) {
        __int128 n = static_cast<__int128>(num_) * o.den_;
        __int128 d = static_cast<__int128>(den_) * o.num_;
        return normalize_i128(n, d);
    }
    return normalize_big(numerator() * o.denominator(), denominator() * o.numerator());
}

bool Rational::operator==(const Rational& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    // canonical form: a big payload never equals a small one
    if (static_cast<bool>(big_) != static_cast<bool>(o.big_)) return false;
    return big_->num == o.big_->num && big_->den == o.big_->den;
}

int Rational::compare(const Rational& o) const {
    if (!big_ && !o.big_) {
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    BigInt lhs = numerator() * o.denominator();
    BigInt rhs = o.numerator() * denominator();
    return lhs.compare(rhs);
}

std::string Rational::to_string() const {
    if (!big_) {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
    std::string s = big_->num.to_decimal();
    if (!(big_->den == BigInt(1))) s += "/" + big_->den.to_decimal();
    return s;
}

BigInt Rational::numerator() const {
    if (!big_) return BigInt(num_);
    return big_->num;
}

BigInt Rational::denominator() const {
    if (!big_) return BigInt(den_);
    return big_->den;
}

} // namespace ratcalc
