#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lattica {

__extension__ typedef unsigned __int128 uint128;

/// Non-negative exact rational. Supports, confidences and thresholds are
/// kept in this form so comparisons such as "support >= 3%" are exact.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "num/den" in lowest terms.
    std::string str() const;

    /// Decimal with `places` fractional digits, rounded half to even.
    std::string decimal(int places = 4) const;

    /// Parses "3/100", "0.03", "1", "1e-2". Negative values are rejected.
    static Rational parse(std::string_view text);

    /// Shortest round-trip decimal of `value`, read back exactly (0.03 -> 3/100).
    static Rational from_double(double value);

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        uint128 l = static_cast<uint128>(a.num_) * b.den_;
        uint128 r = static_cast<uint128>(b.num_) * a.den_;
        return l <=> r;
    }

    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws InputError when dividing by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace lattica
