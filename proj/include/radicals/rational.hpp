#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace radicals {

/// Exact fraction on 64-bit integers, always in lowest terms with a
/// positive denominator. Arithmetic runs through 128-bit intermediates
/// and throws std::overflow_error if a reduced result does not fit;
/// the angle fractions handled here sit right at the 64-bit boundary
/// for periods near 62, so the check is load-bearing.
class ExactRational {
public:
    constexpr ExactRational() noexcept : num_(0), den_(1) {}
    constexpr ExactRational(std::int64_t value) noexcept : num_(value), den_(1) {}
    ExactRational(std::int64_t num, std::int64_t den) : ExactRational(reduced(num, den)) {}

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "p/q", or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const ExactRational&, const ExactRational&) = default;

    friend ExactRational operator-(const ExactRational& a) {
        return reduced(-i128(a.num_), a.den_);
    }
    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        return reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        return reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        return reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

private:
    __extension__ using i128 = __int128;

    struct Raw {
        std::int64_t num;
        std::int64_t den;
    };
    constexpr ExactRational(Raw r) noexcept : num_(r.num), den_(r.den) {}

    static i128 abs128(i128 v) noexcept { return v < 0 ? -v : v; }

    static i128 gcd128(i128 a, i128 b) noexcept {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Raw reduced(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) return {0, 1};
        const i128 g = gcd128(num, den);
        num /= g;
        den /= g;
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
        return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace radicals
