#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ecci/errors.hpp"

namespace ecci {

using int128 = __int128;

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
    return r;
}

// Narrow a 128-bit intermediate back to 64 bits, refusing to wrap.
inline long long narrow_to_i64(int128 x) {
    if (x > int128(INT64_MAX) || x < int128(INT64_MIN)) {
        throw OverflowError("value exceeds 64-bit range");
    }
    return static_cast<long long>(x);
}

// Exact rational number over 64-bit numerator/denominator.
// Always normalized: den > 0, gcd(|num|, den) = 1. Intermediates use 128 bits;
// results that cannot be reduced back into 64 bits raise OverflowError instead
// of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {} // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_int128(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                           int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_int128(int128(a.num_) * b.den_ - int128(b.num_) * a.den_,
                           int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_int128(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from_int128(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
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
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational from_int128(int128 num, int128 den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        Rational r;
        r.num_ = narrow_to_i64(num);
        r.den_ = narrow_to_i64(den);
        return r;
    }

    static int128 gcd128(int128 a, int128 b) {
        while (b != 0) { int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace ecci
