#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dba {

/// Exact decimal USD amount stored as an integer count of 1e-13 dollar
/// units. Per-token rates quoted in USD per million tokens with up to six
/// decimal places convert to integers in this unit, so token * rate cost
/// accumulation stays exact and addition is associative.
class Usd {
public:
    constexpr Usd() = default;

    /// Parses an exact decimal string such as "12.50" or "0.014".
    /// More than 13 fractional digits is rejected.
    static Usd from_decimal(std::string_view text);

    static constexpr Usd from_raw(std::int64_t units) {
        Usd u;
        u.units_ = units;
        return u;
    }

    std::int64_t raw() const { return units_; }

    /// Canonical decimal rendering with trailing zeros trimmed: "12.5",
    /// "0.014", "0".
    std::string to_string() const;

    double approx() const { return static_cast<double>(units_) * 1e-13; }

    friend Usd operator+(Usd a, Usd b) { return from_raw(a.units_ + b.units_); }
    Usd& operator+=(Usd other) {
        units_ += other.units_;
        return *this;
    }
    friend bool operator==(Usd a, Usd b) { return a.units_ == b.units_; }
    friend auto operator<=>(Usd a, Usd b) { return a.units_ <=> b.units_; }

private:
    std::int64_t units_ = 0;
};

/// Exact nonnegative decimal scale factor with up to four fractional digits
/// (stored per ten-thousand). Used for cached-input discounts.
class DecimalFraction {
public:
    constexpr DecimalFraction() = default;

    static DecimalFraction from_decimal(std::string_view text);
    static constexpr DecimalFraction from_basis(std::int64_t per_ten_thousand) {
        DecimalFraction f;
        f.per_e4_ = per_ten_thousand;
        return f;
    }

    std::int64_t per_e4() const { return per_e4_; }
    std::string to_string() const;

    friend bool operator==(DecimalFraction a, DecimalFraction b) {
        return a.per_e4_ == b.per_e4_;
    }

private:
    std::int64_t per_e4_ = 10000;
};

} // namespace dba
