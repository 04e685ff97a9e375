#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spincode {

/// Exact half-integer, stored as twice its value. Used for spins j,
/// magnetic numbers m, and starting spins s, which are never floats.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    /// Whole-number value; throws unless integral.
    constexpr std::int64_t to_integer() const {
        if (!is_integer())
            throw std::invalid_argument("HalfInt: not an integer: " + str());
        return twice_ / 2;
    }

    constexpr double to_double() const { return 0.5 * static_cast<double>(twice_); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
    friend constexpr HalfInt operator+(HalfInt a, std::int64_t b) { return from_twice(a.twice_ + 2 * b); }
    friend constexpr HalfInt operator-(HalfInt a, std::int64_t b) { return from_twice(a.twice_ - 2 * b); }
    friend constexpr HalfInt operator*(std::int64_t c, HalfInt a) { return from_twice(c * a.twice_); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    std::string str() const {
        if (is_integer())
            return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Parses "7", "13/2", or "6.5".
    static HalfInt parse(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("HalfInt: empty string");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            std::int64_t num = std::stoll(s.substr(0, slash));
            std::int64_t den = std::stoll(s.substr(slash + 1));
            if (den == 1)
                return HalfInt(num);
            if (den == 2)
                return from_twice(num);
            throw std::invalid_argument("HalfInt: denominator must be 1 or 2: " + s);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            std::int64_t whole = std::stoll(s.substr(0, dot));
            bool neg = s.front() == '-';
            if (frac == "0")
                return HalfInt(whole);
            if (frac == "5")
                return from_twice(2 * whole + (neg ? -1 : 1));
            throw std::invalid_argument("HalfInt: not a half-integer: " + s);
        }
        return HalfInt(std::stoll(s));
    }

  private:
    std::int64_t twice_ = 0;
};

/// Valid (j, m) pair: j >= 0, |m| <= j, j - m integral.
constexpr bool valid_jm(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && m.abs().twice() <= j.twice() && (j - m).is_integer();
}

/// Throws if (j, m) is not a valid spin/magnetic-number pair.
inline void require_jm(HalfInt j, HalfInt m) {
    if (j.twice() < 0)
        throw std::invalid_argument("negative spin j = " + j.str());
    if (!(j - m).is_integer())
        throw std::invalid_argument("j - m not integral: j = " + j.str() + ", m = " + m.str());
}

} // namespace spincode
