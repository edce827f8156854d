#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tww {

// Exact rational, always in lowest terms with den >= 1. Comparisons use
// 128-bit cross multiplication, never floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    Rational(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace tww
