#include <doctest.h>

#include <random>
#include <vector>

#include "poui/coin.hpp"
#include "poui/errors.hpp"

using poui::CoinAmount;
using poui::Errc;
using poui::SimError;

TEST_CASE("round_half_even rounds ties to the even neighbour") {
    CHECK(poui::round_half_even(2.5) == 2);
    CHECK(poui::round_half_even(3.5) == 4);
    CHECK(poui::round_half_even(-2.5) == -2);
    CHECK(poui::round_half_even(-3.5) == -4);
    CHECK(poui::round_half_even(0.5) == 0);
    CHECK(poui::round_half_even(1.5) == 2);
    CHECK(poui::round_half_even(2.4) == 2);
    CHECK(poui::round_half_even(2.6) == 3);
    CHECK(poui::round_half_even(-0.25) == 0);
    CHECK(poui::round_half_even(130.0) == 130);
}

TEST_CASE("coin parsing and formatting") {
    CHECK(CoinAmount::parse("100").micro() == 100'000'000);
    CHECK(CoinAmount::parse("0.000001").micro() == 1);
    CHECK(CoinAmount::parse("90.000000").str() == "90.000000");
    CHECK(CoinAmount::parse("1.5").micro() == 1'500'000);
    CHECK(CoinAmount::from_coins(10).str() == "10.000000");
    CHECK_THROWS_AS(CoinAmount::parse("1.0000001"), SimError);  // 7 fractional digits
    CHECK_THROWS_AS(CoinAmount::parse("-3"), SimError);
    CHECK_THROWS_AS(CoinAmount::parse("abc"), SimError);
    CHECK_THROWS_AS(CoinAmount::parse(""), SimError);
    CHECK_THROWS_AS(CoinAmount::parse("1."), SimError);
}

TEST_CASE("negative amounts are rejected") {
    CHECK_THROWS_AS(CoinAmount::from_micro(-1), SimError);
    CHECK_THROWS_AS(CoinAmount::from_real(-0.5), SimError);
    CoinAmount a = CoinAmount::from_coins(1);
    CoinAmount b = CoinAmount::from_coins(2);
    CHECK_THROWS_AS((void)(a - b), SimError);
    try {
        (void)(a - b);
    } catch (const SimError& e) {
        CHECK(e.code() == Errc::NegativeAmount);
    }
}

TEST_CASE("scaling rounds half to even at micro resolution") {
    CHECK(CoinAmount::from_micro(5).scaled(0.5).micro() == 2);   // 2.5 -> 2
    CHECK(CoinAmount::from_micro(15).scaled(0.5).micro() == 8);  // 7.5 -> 8
    CHECK(CoinAmount::from_coins(100).scaled(0.1).micro() == 10'000'000);
    CHECK(CoinAmount::from_coins(100).scaled(0.0).micro() == 0);
}

TEST_CASE("balance arithmetic is exact: zero-net sequences restore the balance") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::int64_t> amount(1, 1'000'000'000);
    for (int trial = 0; trial < 200; ++trial) {
        CoinAmount start = CoinAmount::from_micro(amount(gen));
        CoinAmount balance = start;
        std::vector<CoinAmount> credits;
        for (int i = 0; i < 50; ++i) {
            CoinAmount delta = CoinAmount::from_micro(amount(gen));
            balance += delta;
            credits.push_back(delta);
        }
        for (const CoinAmount& delta : credits) balance -= delta;
        CHECK(balance.micro() == start.micro());
    }
}
