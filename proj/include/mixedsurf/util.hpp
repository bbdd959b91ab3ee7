#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixedsurf {

// All library errors are reported through this type so callers can catch
// one thing.  Messages are short lowercase phrases.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact nonnegative rational with small components, enough for orbifold
// degrees and curve genera.  Always kept in lowest terms with den > 0.
struct rational {
    long long num = 0;
    long long den = 1;

    rational() = default;
    rational(long long n, long long d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    friend rational operator+(rational a, rational b) {
        return rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend rational operator-(rational a, rational b) {
        return rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend rational operator*(rational a, rational b) {
        return rational(a.num * b.num, a.den * b.den);
    }
    friend rational operator/(rational a, rational b) {
        if (b.num == 0) throw error("division by zero");
        return rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const rational& a, const rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const rational& a, const rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator>=(const rational& a, const rational& b) { return b <= a; }
};

inline std::string to_string(const rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// FNV-1a over a byte view; used for orbit hashing where we only need a
// well-mixed deterministic value, not cryptographic strength.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::vector<std::uint8_t>& v) {
    return fnv1a(v.data(), v.size());
}

}  // namespace mixedsurf
