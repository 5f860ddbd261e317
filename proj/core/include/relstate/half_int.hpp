#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace relstate {

/// Angular-momentum label stored as twice its value, so j = 3/2 is
/// HalfInt::from_twice(3) and parity constraints (j - m integral) are
/// plain integer checks.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt whole(int j) { return HalfInt{2 * j}; }
    static constexpr HalfInt half() { return HalfInt{1}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr double value() const { return twice / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return HalfInt{twice < 0 ? -twice : twice}; }

private:
    constexpr explicit HalfInt(int t) : twice(t) {}
};

/// True when (j, m) is a legal magnetic pair: j >= 0, |m| <= j, j - m integer.
constexpr bool valid_jm(HalfInt j, HalfInt m) {
    return j.twice >= 0 && m.abs().twice <= j.twice && (j.twice - m.twice) % 2 == 0;
}

inline std::string to_string(HalfInt h) {
    if (h.twice % 2 == 0) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

}  // namespace relstate
