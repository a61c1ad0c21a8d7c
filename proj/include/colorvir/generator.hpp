// Basis generators of the color superalgebra and its central extension.
//
// Families: L_m (Virasoro), P_r (even density module), X_u (odd density
// module), and the composites P_{rs} = {P_r,P_s} (symmetric),
// X_{uv} = [X_u,X_v] (antisymmetric), T_{ru} = {P_r,X_u}; plus the Virasoro
// charge c and the eight extension charges of the classification theorem.
//
// Composites are stored in a canonical index order (P2: r ≤ s; X2: u < v)
// with the antisymmetry sign absorbed by canonicalize(); X_{uu} is the zero
// element, not a generator.

#pragma once

#include "colorvir/degree.hpp"
#include "colorvir/halfint.hpp"
#include "colorvir/params.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace colorvir {

enum class GenKind : std::uint8_t {
    // Central symbols first so they sort ahead of mode generators.
    C,      // Virasoro central charge
    Cp,     // [L,P] extension
    Cx,     // [L,X] extension
    Ch,     // [P2,P] extension
    Ceta,   // [X2,X] extension
    CkapA,  // antisymmetric [T,P] extension
    CkapS,  // symmetric [T,P] extension
    CzetA,  // antisymmetric {T,X} extension
    CzetS,  // symmetric {T,X} extension
    L,
    P,
    X,
    P2,
    X2,
    T,
};

[[nodiscard]] constexpr bool is_central(GenKind k) { return k < GenKind::L; }

[[nodiscard]] const char* kind_name(GenKind k);

struct Generator {
    GenKind kind = GenKind::C;
    HalfInt i1;  // unused indices stay 0
    HalfInt i2;

    static Generator L(std::int64_t m) { return {GenKind::L, HalfInt(m), HalfInt(0)}; }
    static Generator P(HalfInt r) { return {GenKind::P, r, HalfInt(0)}; }
    static Generator X(HalfInt u) { return {GenKind::X, u, HalfInt(0)}; }
    static Generator P2(HalfInt r, HalfInt s) { return {GenKind::P2, r, s}; }
    static Generator X2(HalfInt u, HalfInt v) { return {GenKind::X2, u, v}; }
    static Generator T(HalfInt r, HalfInt u) { return {GenKind::T, r, u}; }
    static Generator central(GenKind k) { return {k, HalfInt(0), HalfInt(0)}; }

    friend constexpr bool operator==(const Generator& a, const Generator& b) {
        return a.kind == b.kind && a.i1 == b.i1 && a.i2 == b.i2;
    }
    friend constexpr bool operator!=(const Generator& a, const Generator& b) {
        return !(a == b);
    }
    // Total order: by kind, then indices — the global enumeration and
    // report order used everywhere determinism matters.
    friend constexpr bool operator<(const Generator& a, const Generator& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i1 != b.i1) return a.i1 < b.i1;
        return a.i2 < b.i2;
    }
    friend constexpr bool operator<=(const Generator& a, const Generator& b) {
        return !(b < a);
    }

    [[nodiscard]] std::string to_string() const;
};

// Canonical form of a generator together with the sign picked up by
// reordering indices; sign 0 means the element is identically zero (X_{uu}).
struct Canonical {
    Generator gen;
    int sign = 1;
};

[[nodiscard]] Canonical canonicalize(const Generator& g);

// ℤ₂×ℤ₂ degree of a generator.  Central degrees follow the classification
// theorem's grading table; throws ParamError if g is invalid under p.
[[nodiscard]] Degree degree_of(const Generator& g, const AlgebraParams& p);

// Degree lookup that skips validity checks (hot paths; g must be valid).
[[nodiscard]] constexpr Degree degree_unchecked(GenKind k) {
    switch (k) {
        case GenKind::L:
        case GenKind::P2:
        case GenKind::X2:
        case GenKind::C:
            return Degree(0, 0);
        case GenKind::P:
        case GenKind::Cp:
        case GenKind::Ch:
        case GenKind::CzetA:
        case GenKind::CzetS:
            return Degree(0, 1);
        case GenKind::T:
            return Degree(1, 0);
        default:  // X, Cx, Ceta, CkapA, CkapS
            return Degree(1, 1);
    }
}

// True iff g's indices have the parities required by p and, for a central
// symbol, the (l1,l2) admissibility condition of the classification holds
// (and p.extended for the non-Virasoro charges).
[[nodiscard]] bool valid_under(const Generator& g, const AlgebraParams& p);

// Central symbols available at (l1,l2): always C; the other eight iff
// extended and their delta condition is met.  Fixed enumeration order.
[[nodiscard]] std::vector<GenKind> admissible_central_kinds(const AlgebraParams& p);

// Admissibility of a single central symbol at (l1,l2), ignoring p.extended.
[[nodiscard]] bool central_admissible(GenKind k, const AlgebraParams& p);

[[nodiscard]] bool in_window(const Generator& g, const Window& w);

// All in-window generators valid under p, sorted in the global order.
// Central symbols are included (C always; the rest when p.extended).
[[nodiscard]] std::vector<Generator> window_basis(const AlgebraParams& p, const Window& w);

}  // namespace colorvir
