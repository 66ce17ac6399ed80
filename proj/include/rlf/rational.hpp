#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rlf {

// Exact rational on int64. Always normalized: den > 0, gcd(|num|,den) = 1.
// Magnitudes in this library stay tiny (denominators are powers of 2 times
// small factors), but every operation checks for overflow anyway.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }

    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat: multiply overflow");
        return r;
    }
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rat: add overflow");
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: divide by zero");
        return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    Rat operator-() const { return Rat(-num, den); }

    // Representative in [0,1).
    Rat mod1() const {
        long long r = num % den;
        if (r < 0) r += den;
        return Rat(r, den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Parses "p" or "p/q".
    static Rat parse(const std::string& s);
};

inline Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rat: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
        throw std::domain_error("Rat: out of range '" + s + "'");
    }
}

} // namespace rlf
