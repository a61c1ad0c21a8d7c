// Half-integer index arithmetic, stored exactly as twice the value.
//
// Mode indices live in ℤ + ℓ where the spin weight ℓ may itself be a
// half-integer, so indices are integers or half-odd-integers.  Storing 2r
// keeps every index an int64 and turns the compatibility condition
// r − ℓ ∈ ℤ into a parity check.

#pragma once

#include "colorvir/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace colorvir {

class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    [[nodiscard]] constexpr std::int64_t twice() const { return twice_; }
    [[nodiscard]] constexpr bool is_integer() const { return twice_ % 2 == 0; }
    [[nodiscard]] constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
    [[nodiscard]] constexpr bool is_zero() const { return twice_ == 0; }

    // Integer value; caller must ensure is_integer().
    [[nodiscard]] std::int64_t whole() const { return twice_ / 2; }

    [[nodiscard]] Rational value() const { return Rational(twice_, 2); }
    [[nodiscard]] HalfInt abs() const { return from_twice(std::abs(twice_)); }

    // r and s index the same weight family iff r − s is an integer.
    [[nodiscard]] constexpr bool same_parity(HalfInt o) const {
        return ((twice_ - o.twice_) % 2) == 0;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt h) {
        return from_twice(k * h.twice_);
    }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice_ != b.twice_; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice_ < b.twice_; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice_ <= b.twice_; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice_ > b.twice_; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice_ >= b.twice_; }

    // "2", "-1", "3/2", "-1/2"
    [[nodiscard]] std::string to_string() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    // Accepts "n" or "p/q" with q ∈ {1, 2} and p/q exactly representable.
    static std::optional<HalfInt> parse(std::string_view text) {
        const auto r = Rational::parse(text);
        if (!r) return std::nullopt;
        if (r->den() != 1 && r->den() != 2) return std::nullopt;
        return from_twice(r->den() == 1 ? 2 * r->num() : r->num());
    }

private:
    std::int64_t twice_ = 0;
};

}  // namespace colorvir
