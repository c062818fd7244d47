#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

namespace linlab {

// Exact rational arithmetic on a 64-bit numerator and positive 64-bit
// denominator, always kept normalized. Intermediates run through 128 bits;
// a result that cannot be narrowed back to 64 bits throws overflow_error.
// Leaf probabilities are dyadic with tiny exponents and mixture weights are
// small fractions, so 64 bits is plenty of headroom at the scales handled
// here.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce(num, den);
    }

    // 2^exponent for |exponent| <= 62.
    static Rational pow2(int exponent) {
        if (exponent < -62 || exponent > 62)
            throw std::overflow_error("Rational::pow2: exponent out of range");
        if (exponent >= 0) return Rational(std::int64_t(1) << exponent);
        return Rational(1, std::int64_t(1) << (-exponent));
    }

    // Parses "num" or "num/den".
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }

    double to_double() const { return double(num_) / double(den_); }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;
    // Always "num/den"; the form used in files.
    std::string fraction_str() const;

    Rational operator-() const {
        Rational r;
        r.num_ = check(-static_cast<__int128>(num_));
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // a/b + c/d with g = gcd(b, d) factored out first.
        std::int64_t g = std::gcd(a.den_, b.den_);
        __int128 lhs = static_cast<__int128>(a.num_) * (b.den_ / g);
        __int128 rhs = static_cast<__int128>(b.num_) * (a.den_ / g);
        __int128 den = static_cast<__int128>(a.den_) * (b.den_ / g);
        return make(lhs + rhs, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
        std::int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
        __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
        __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
        return make(num, den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        Rational inv;
        if (b.num_ > 0) {
            inv.num_ = b.den_;
            inv.den_ = b.num_;
        } else {
            inv.num_ = check(-static_cast<__int128>(b.den_));
            inv.den_ = check(-static_cast<__int128>(b.num_));
        }
        return a * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

private:
    static std::int64_t check(__int128 v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("Rational: 64-bit overflow");
        return static_cast<std::int64_t>(v);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = check(num);
        r.den_ = den == 0 ? 1 : check(den);
        if (r.num_ == 0) r.den_ = 1;
        return r;
    }

    void reduce(std::int64_t num, std::int64_t den) {
        Rational r = make(num, den);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace linlab
