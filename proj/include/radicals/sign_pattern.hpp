#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace radicals {

/// One coefficient of a continued radical: strictly -1 or +1.
enum class Sign : std::int8_t { minus = -1, plus = +1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

constexpr Sign operator*(Sign a, Sign b) noexcept {
    return a == b ? Sign::plus : Sign::minus;
}

/// The repeating block a_0 ... a_{n-1} of a periodic continued radical.
/// The periodic extension a_{n+k} = a_k is implicit; use at_periodic().
/// Immutable after construction; length is always >= 1.
class SignPattern {
public:
    explicit SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
        if (signs_.empty()) throw std::invalid_argument("empty pattern");
    }

    std::size_t size() const noexcept { return signs_.size(); }
    Sign operator[](std::size_t i) const noexcept { return signs_[i]; }
    Sign at_periodic(std::uint64_t k) const noexcept { return signs_[k % signs_.size()]; }
    const std::vector<Sign>& signs() const noexcept { return signs_; }

    auto begin() const noexcept { return signs_.begin(); }
    auto end() const noexcept { return signs_.end(); }

    friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
    std::vector<Sign> signs_;
};

/// Parses a '+'/'-' string, character i becoming a_i.
inline SignPattern parse_pattern(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty pattern");
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '+': signs.push_back(Sign::plus); break;
        case '-': signs.push_back(Sign::minus); break;
        default:
            throw std::invalid_argument("invalid sign character at index " + std::to_string(i));
        }
    }
    return SignPattern(std::move(signs));
}

/// Inverse of parse_pattern.
inline std::string format_pattern(const SignPattern& p) {
    std::string text;
    text.reserve(p.size());
    for (Sign s : p) text.push_back(to_char(s));
    return text;
}

/// Parity P = a_0 * a_1 * ... * a_{n-1}.
inline Sign parity(const SignPattern& p) {
    Sign prod = Sign::plus;
    for (Sign s : p) prod = prod * s;
    return prod;
}

/// Running products P_m = a_0 * ... * a_m for m = 0 .. n-1.
/// The final entry equals parity(p).
inline std::vector<Sign> prefix_products(const SignPattern& p) {
    std::vector<Sign> products;
    products.reserve(p.size());
    Sign prod = Sign::plus;
    for (Sign s : p) {
        prod = prod * s;
        products.push_back(prod);
    }
    return products;
}

/// Smallest d >= 1 with d | n and a_{k+d} = a_k for 0 <= k < n-d.
inline std::size_t minimal_period(const SignPattern& p) {
    const std::size_t n = p.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t k = d; k < n && repeats; ++k) repeats = (p[k] == p[k - d]);
        if (repeats) return d;
    }
    return n;
}

constexpr std::size_t kMaxEnumerationPeriod = 30;

/// All 2^n patterns of length n in canonical order: '+' -> bit 0,
/// '-' -> bit 1, a_0 as the most significant bit, ascending.
inline std::vector<SignPattern> enumerate_patterns(std::size_t n) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    if (n > kMaxEnumerationPeriod) throw std::invalid_argument("period too large");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<SignPattern> patterns;
    patterns.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Sign> signs(n);
        for (std::size_t j = 0; j < n; ++j) {
            const bool bit = (code >> (n - 1 - j)) & 1u;
            signs[j] = bit ? Sign::minus : Sign::plus;
        }
        patterns.emplace_back(std::move(signs));
    }
    return patterns;
}

} // namespace radicals
