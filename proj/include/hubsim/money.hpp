#pragma once

#include <cstdint>
#include <string>

namespace hubsim {

/// Exact SEK amount stored as integer hundredths. All arithmetic is integral;
/// the only division anywhere (the platoon share n/(n+1)) rounds half to even
/// at the hundredth so results are reproducible bit for bit.
struct Money {
    std::int64_t cents = 0;

    static Money from_cents(std::int64_t c) { return Money{c}; }

    /// Parse an amount given in SEK (e.g. 0.96 from a config file). Inputs are
    /// expected to carry at most two decimals; anything finer is rounded.
    static Money from_sek(double sek);

    Money operator+(Money o) const { return Money{cents + o.cents}; }
    Money operator-(Money o) const { return Money{cents - o.cents}; }
    Money operator-() const { return Money{-cents}; }
    Money& operator+=(Money o) { cents += o.cents; return *this; }
    Money& operator-=(Money o) { cents -= o.cents; return *this; }
    bool operator==(const Money&) const = default;
    auto operator<=>(const Money&) const = default;

    /// Per-minute rate applied over a whole number of minutes. Exact.
    Money times_minutes(std::int64_t minutes) const { return Money{cents * minutes}; }

    /// this * num / den with round-half-even at the hundredth.
    /// Requires den > 0 and num >= 0.
    Money times_ratio(std::int64_t num, std::int64_t den) const;

    /// "42.60", "-1.05", "0.00"
    std::string str() const;
};

/// (value * num) / den rounded half to even. den > 0.
std::int64_t div_round_half_even(std::int64_t num, std::int64_t den);

}  // namespace hubsim
