#ifndef POUI_COIN_HPP
#define POUI_COIN_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace poui {

/// Rounds to the nearest integer, ties to even.  Used everywhere real-valued
/// quantities (controller rewards, fee fractions) are converted to discrete
/// units, so payouts do not accumulate directional bias.
std::int64_t round_half_even(double x);

/// Non-negative coin quantity with 6 fractional digits, stored as an exact
/// integer count of micro-coins.  Balance arithmetic never goes through
/// floating point; conversions from reals happen only at payout boundaries.
class CoinAmount {
public:
    static constexpr std::int64_t kMicroPerCoin = 1'000'000;

    constexpr CoinAmount() = default;

    static CoinAmount from_micro(std::int64_t micro);
    static CoinAmount from_coins(std::int64_t whole_coins);
    /// Parses a decimal literal like "90.000000" or "100".  At most 6
    /// fractional digits; anything else is rejected.
    static CoinAmount parse(std::string_view text);
    /// Converts a real amount of coins, rounding half-to-even at micro
    /// resolution.  Negative inputs are rejected.
    static CoinAmount from_real(double coins);

    std::int64_t micro() const noexcept { return micro_; }
    double to_real() const noexcept { return static_cast<double>(micro_) / kMicroPerCoin; }
    bool is_zero() const noexcept { return micro_ == 0; }

    /// Renders with exactly 6 fractional digits, e.g. "10.000000".
    std::string str() const;

    CoinAmount operator+(CoinAmount other) const;
    CoinAmount operator-(CoinAmount other) const;  // throws NegativeAmount on underflow
    CoinAmount& operator+=(CoinAmount other);
    CoinAmount& operator-=(CoinAmount other);

    /// Multiplies by a non-negative real factor, rounding half-to-even.
    CoinAmount scaled(double factor) const;

    auto operator<=>(const CoinAmount&) const = default;

private:
    explicit constexpr CoinAmount(std::int64_t micro) : micro_(micro) {}
    std::int64_t micro_ = 0;
};

}  // namespace poui

#endif
