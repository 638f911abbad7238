#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kforce {

/// Exact rational with a positive denominator, kept in lowest terms.
class Rational {
public:
    constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den)
    {
        if (den_ == 0)
            throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        auto g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }

    constexpr std::int64_t floor() const noexcept
    {
        auto q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }

    constexpr bool is_integer() const noexcept { return den_ == 1; }

    friend constexpr bool operator==(const Rational &, const Rational &) = default;

    friend constexpr std::strong_ordering operator<=>(const Rational & a, const Rational & b) noexcept
    {
        auto lhs = static_cast<__int128>(a.num_) * b.den_;
        auto rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    /// "6" or "17/3".
    std::string to_string() const
    {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace kforce
