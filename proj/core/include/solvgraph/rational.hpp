#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "solvgraph/fp.hpp"

namespace solvgraph {

/// Exact reduced rational on int64 with 128-bit intermediates. Theorem
/// checks compare these exactly; decimals are for display only.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t value) : num_(value), den_(1) {}
    Rational(int64_t num, int64_t den) : num_(num), den_(den) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return from128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                       static_cast<__int128>(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from128(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                       static_cast<__int128>(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("rational: division by zero");
        return from128(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// "54/65" (or "3" when integral).
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Rounded decimal rendering computed in integers, e.g. "0.830769".
    std::string decimal(unsigned digits = 6) const {
        __int128 scale = 1;
        for (unsigned i = 0; i < digits; ++i) scale *= 10;
        bool negative = num_ < 0;
        __int128 n = negative ? -static_cast<__int128>(num_) : num_;
        __int128 scaled = (n * scale * 2 + den_) / (2 * static_cast<__int128>(den_));
        __int128 whole = scaled / scale, frac = scaled % scale;
        std::string fs(digits, '0');
        for (int i = static_cast<int>(digits) - 1; i >= 0; --i) {
            fs[i] = static_cast<char>('0' + static_cast<int>(frac % 10));
            frac /= 10;
        }
        std::string out = std::to_string(static_cast<long long>(whole));
        if (digits) out += "." + fs;
        return negative ? "-" + out : out;
    }

    /// "num/den (approx 0.xxxxxx)" display form.
    std::string pretty() const { return to_string() + " (~ " + decimal() + ")"; }

private:
    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw Error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw Error("rational: overflow");
        Rational r;
        r.num_ = static_cast<int64_t>(n);
        r.den_ = static_cast<int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        Rational r = from128(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    int64_t num_;
    int64_t den_;
};

}  // namespace solvgraph
