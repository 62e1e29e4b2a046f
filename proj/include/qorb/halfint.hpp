#pragma once

#include <cassert>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qorb {

// Exact half-integers, stored as twice the value. Depths and distances on
// the tree live here: integer for split/unramified data, strict half-integer
// for ramified data and midpoint geometry.
class HalfInt {
public:
    constexpr HalfInt() : tv_(0) {}
    static constexpr HalfInt whole(long n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(long twice_value) { return HalfInt(twice_value); }

    constexpr long twice() const { return tv_; }
    constexpr bool is_integer() const { return tv_ % 2 == 0; }

    // Value as an integer; only valid when is_integer().
    constexpr long as_integer() const {
        assert(is_integer());
        return tv_ / 2;
    }
    constexpr long floor() const { return tv_ >= 0 ? tv_ / 2 : (tv_ - 1) / 2; }
    constexpr long ceil() const { return -HalfInt(-tv_).floor(); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.tv_ + b.tv_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.tv_ - b.tv_); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.tv_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return tv_ < 0 ? HalfInt(-tv_) : *this; }

    std::string str() const {
        if (is_integer()) return std::to_string(tv_ / 2);
        return std::to_string(tv_) + "/2";
    }

    // Parses "3", "-2", "7/2", "-1/2", "3.5", ".5".
    static HalfInt parse(const std::string& s);

private:
    explicit constexpr HalfInt(long tv) : tv_(tv) {}
    long tv_;
};

inline HalfInt HalfInt::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty half-integer literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long num = std::stol(s.substr(0, slash));
        long den = std::stol(s.substr(slash + 1));
        if (den == 2) return HalfInt::halves(num);
        if (den == 1) return HalfInt::whole(num);
        throw std::invalid_argument("half-integer denominator must be 1 or 2: " + s);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        if (frac != "5" && frac != "0")
            throw std::invalid_argument("not a half-integer: " + s);
        long whole_part = (dot == 0 || (dot == 1 && (s[0] == '-' || s[0] == '+')))
                              ? 0
                              : std::stol(s.substr(0, dot));
        bool neg = s[0] == '-';
        long tv = 2 * whole_part + (frac == "5" ? (neg ? -1 : 1) : 0);
        return HalfInt::halves(tv);
    }
    return HalfInt::whole(std::stol(s));
}

}  // namespace qorb
