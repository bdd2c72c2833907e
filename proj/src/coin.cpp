#include "poui/coin.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "poui/errors.hpp"

namespace poui {

std::int64_t round_half_even(double x) {
    double floor_v = std::floor(x);
    double frac = x - floor_v;
    auto lo = static_cast<std::int64_t>(floor_v);
    if (frac > 0.5) return lo + 1;
    if (frac < 0.5) return lo;
    // exact tie: pick the even neighbour
    return (lo % 2 == 0) ? lo : lo + 1;
}

CoinAmount CoinAmount::from_micro(std::int64_t micro) {
    if (micro < 0)
        throw SimError(Errc::NegativeAmount, "coin amount " + std::to_string(micro) + " micro");
    return CoinAmount(micro);
}

CoinAmount CoinAmount::from_coins(std::int64_t whole_coins) {
    return from_micro(whole_coins * kMicroPerCoin);
}

CoinAmount CoinAmount::parse(std::string_view text) {
    if (text.empty()) throw SimError(Errc::ConfigError, "empty coin literal");
    std::size_t i = 0;
    std::int64_t whole = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw SimError(Errc::ConfigError, "bad coin literal '" + std::string(text) + "'");
        whole = whole * 10 + (c - '0');
        any_digit = true;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (i < text.size()) {  // consume '.'
        for (++i; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9' || frac_digits >= 6)
                throw SimError(Errc::ConfigError, "bad coin literal '" + std::string(text) + "'");
            frac = frac * 10 + (c - '0');
            ++frac_digits;
        }
        if (frac_digits == 0)
            throw SimError(Errc::ConfigError, "bad coin literal '" + std::string(text) + "'");
    }
    if (!any_digit)
        throw SimError(Errc::ConfigError, "bad coin literal '" + std::string(text) + "'");
    while (frac_digits < 6) {
        frac *= 10;
        ++frac_digits;
    }
    return from_micro(whole * kMicroPerCoin + frac);
}

CoinAmount CoinAmount::from_real(double coins) {
    if (!(coins >= 0.0))
        throw SimError(Errc::NegativeAmount, "coin amount " + std::to_string(coins));
    return from_micro(round_half_even(coins * kMicroPerCoin));
}

std::string CoinAmount::str() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%06lld",
                  static_cast<long long>(micro_ / kMicroPerCoin),
                  static_cast<long long>(micro_ % kMicroPerCoin));
    return buf;
}

CoinAmount CoinAmount::operator+(CoinAmount other) const {
    return CoinAmount(micro_ + other.micro_);
}

CoinAmount CoinAmount::operator-(CoinAmount other) const {
    if (other.micro_ > micro_)
        throw SimError(Errc::NegativeAmount,
                       str() + " - " + other.str() + " would be negative");
    return CoinAmount(micro_ - other.micro_);
}

CoinAmount& CoinAmount::operator+=(CoinAmount other) {
    micro_ += other.micro_;
    return *this;
}

CoinAmount& CoinAmount::operator-=(CoinAmount other) {
    *this = *this - other;
    return *this;
}

CoinAmount CoinAmount::scaled(double factor) const {
    if (!(factor >= 0.0))
        throw SimError(Errc::NegativeAmount, "scale factor " + std::to_string(factor));
    return from_micro(round_half_even(static_cast<double>(micro_) * factor));
}

}  // namespace poui
