#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qmb/errors.hpp"

namespace qmb {

// Reduced non-negative rational, used to label comb teeth exactly.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw ConfigError("rational with zero denominator");
        const std::uint64_t g = std::gcd(num == 0 ? den : num, den);
        num /= g == 0 ? 1 : g;
        den /= g == 0 ? 1 : g;
        if (num == 0) den = 1;
    }

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<unsigned __int128>(a.num) * b.den <
               static_cast<unsigned __int128>(b.num) * a.den;
    }
};

// Mediant of two rationals, for Stern-Brocot style enumeration of the
// rationals in [0, 1].
inline Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.num + b.num, a.den + b.den);
}

}  // namespace qmb
