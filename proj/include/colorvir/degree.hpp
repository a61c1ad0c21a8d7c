// ℤ₂×ℤ₂ degrees and the scalar product that drives the sign rule.
//
// The bracket between homogeneous elements of degrees a and b is a
// commutator when a·b = 0 and an anticommutator when a·b = 1; all graded
// identities in this project reduce to bookkeeping with these two bits.

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace colorvir {

struct Degree {
    std::uint8_t a1 = 0;  // each component is 0 or 1
    std::uint8_t a2 = 0;

    constexpr Degree() = default;
    constexpr Degree(unsigned x, unsigned y)
        : a1(static_cast<std::uint8_t>(x & 1u)), a2(static_cast<std::uint8_t>(y & 1u)) {}

    friend constexpr Degree operator+(Degree a, Degree b) {
        return Degree(unsigned(a.a1 ^ b.a1), unsigned(a.a2 ^ b.a2));
    }

    // a·b = a1·b1 + a2·b2 mod 2 ∈ {0, 1}
    [[nodiscard]] constexpr int dot(Degree o) const {
        return (a1 & o.a1) ^ (a2 & o.a2);
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.a1 == b.a1 && a.a2 == b.a2;
    }
    friend constexpr bool operator!=(Degree a, Degree b) { return !(a == b); }
    friend constexpr bool operator<(Degree a, Degree b) {
        return a.a1 != b.a1 ? a.a1 < b.a1 : a.a2 < b.a2;
    }

    [[nodiscard]] std::string to_string() const {
        return "(" + std::to_string(int(a1)) + "," + std::to_string(int(a2)) + ")";
    }
};

// All four sectors in a fixed enumeration order.
constexpr std::array<Degree, 4> all_degrees() {
    return {Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)};
}

}  // namespace colorvir
