#include "hubsim/money.hpp"

#include <cmath>
#include <cstdlib>

namespace hubsim {

Money Money::from_sek(double sek) {
    return Money{static_cast<std::int64_t>(std::llround(sek * 100.0))};
}

std::int64_t div_round_half_even(std::int64_t num, std::int64_t den) {
    const bool negative = num < 0;
    const std::int64_t n = negative ? -num : num;
    std::int64_t q = n / den;
    const std::int64_t r = n % den;
    if (2 * r > den || (2 * r == den && (q % 2) == 1)) ++q;
    return negative ? -q : q;
}

Money Money::times_ratio(std::int64_t num, std::int64_t den) const {
    return Money{div_round_half_even(cents * num, den)};
}

std::string Money::str() const {
    const std::int64_t a = cents < 0 ? -cents : cents;
    std::string s = cents < 0 ? "-" : "";
    s += std::to_string(a / 100);
    const std::int64_t frac = a % 100;
    s += '.';
    s += static_cast<char>('0' + frac / 10);
    s += static_cast<char>('0' + frac % 10);
    return s;
}

}  // namespace hubsim
