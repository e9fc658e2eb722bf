#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "pfrob/errors.hpp"

namespace pfrob {

/// Exact rational with 64-bit parts; every operation checks for overflow.
class Rational {
  public:
    Rational(std::int64_t n = 0, std::int64_t d = 1) : n_(n), d_(d) {
        if (d_ == 0) throw Error(Errc::InvalidArgument, "zero denominator");
        normalize();
    }

    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }
    double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }
    std::string str() const { return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_); }

    friend Rational operator+(const Rational &a, const Rational &b) {
        return make(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                    static_cast<__int128>(a.d_) * b.d_);
    }
    friend Rational operator-(const Rational &a, const Rational &b) { return a + Rational(-b.n_, b.d_); }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return make(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.n_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
        return make(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
    }
    friend bool operator==(const Rational &a, const Rational &b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator<(const Rational &a, const Rational &b) {
        return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
    }
    friend bool operator>(const Rational &a, const Rational &b) { return b < a; }

  private:
    static Rational make(__int128 n, __int128 d) {
        if (d < 0) n = -n, d = -d;
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) n /= a, d /= a;
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw Error(Errc::Overflow, "rational overflow");
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    void normalize() {
        if (d_ < 0) n_ = -n_, d_ = -d_;
        const std::int64_t g = std::gcd(n_, d_);
        if (g > 1) n_ /= g, d_ /= g;
    }

    std::int64_t n_, d_;
};

} // namespace pfrob
