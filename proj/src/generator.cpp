#include "colorvir/generator.hpp"

#include <algorithm>

namespace colorvir {

const char* kind_name(GenKind k) {
    switch (k) {
        case GenKind::C: return "c";
        case GenKind::Cp: return "c_p";
        case GenKind::Cx: return "c_x";
        case GenKind::Ch: return "c_h";
        case GenKind::Ceta: return "c_eta";
        case GenKind::CkapA: return "c_kapA";
        case GenKind::CkapS: return "c_kapS";
        case GenKind::CzetA: return "c_zetA";
        case GenKind::CzetS: return "c_zetS";
        case GenKind::L: return "L";
        case GenKind::P: return "P";
        case GenKind::X: return "X";
        case GenKind::P2: return "P2";
        case GenKind::X2: return "X2";
        case GenKind::T: return "T";
    }
    return "?";
}

std::string Generator::to_string() const {
    if (is_central(kind)) return kind_name(kind);
    switch (kind) {
        case GenKind::L:
        case GenKind::P:
        case GenKind::X:
            return std::string(kind_name(kind)) + "(" + i1.to_string() + ")";
        default:
            return std::string(kind_name(kind)) + "(" + i1.to_string() + "," +
                   i2.to_string() + ")";
    }
}

Canonical canonicalize(const Generator& g) {
    switch (g.kind) {
        case GenKind::P2:
            if (g.i1 > g.i2) return {Generator::P2(g.i2, g.i1), 1};
            return {g, 1};
        case GenKind::X2:
            if (g.i1 == g.i2) return {g, 0};
            if (g.i1 > g.i2) return {Generator::X2(g.i2, g.i1), -1};
            return {g, 1};
        default:
            return {g, 1};
    }
}

bool central_admissible(GenKind k, const AlgebraParams& p) {
    const HalfInt zero(0), half = HalfInt::from_twice(1), one(1);
    switch (k) {
        case GenKind::C: return true;
        case GenKind::Cp: return p.l1 == zero || p.l1 == one;
        case GenKind::Cx: return p.l2 == zero || p.l2 == one;
        case GenKind::Ch: return p.l1 == zero;
        case GenKind::Ceta: return p.l2 == zero;
        case GenKind::CkapS:
            return (p.l1 == zero && p.l2 == zero) || (p.l1 == zero && p.l2 == one);
        case GenKind::CkapA:
            return (p.l1 == zero && p.l2 == zero) || (p.l1 == half && p.l2 == zero);
        case GenKind::CzetS:
            return (p.l1 == zero && p.l2 == zero) || (p.l1 == one && p.l2 == zero);
        case GenKind::CzetA:
            return (p.l1 == zero && p.l2 == zero) || (p.l1 == zero && p.l2 == half);
        default:
            return false;
    }
}

bool valid_under(const Generator& g, const AlgebraParams& p) {
    switch (g.kind) {
        case GenKind::L:
            return g.i1.is_integer() && g.i2.is_zero();
        case GenKind::P:
            return g.i1.same_parity(p.l1) && g.i2.is_zero();
        case GenKind::X:
            return g.i1.same_parity(p.l2) && g.i2.is_zero();
        case GenKind::P2:
            return g.i1.same_parity(p.l1) && g.i2.same_parity(p.l1) && g.i1 <= g.i2;
        case GenKind::X2:
            return g.i1.same_parity(p.l2) && g.i2.same_parity(p.l2) && g.i1 < g.i2;
        case GenKind::T:
            return g.i1.same_parity(p.l1) && g.i2.same_parity(p.l2);
        case GenKind::C:
            return g.i1.is_zero() && g.i2.is_zero();
        default:
            return g.i1.is_zero() && g.i2.is_zero() && p.extended &&
                   central_admissible(g.kind, p);
    }
}

Degree degree_of(const Generator& g, const AlgebraParams& p) {
    if (!valid_under(g, p))
        throw ParamError("generator " + g.to_string() + " invalid under " + p.to_string());
    return degree_unchecked(g.kind);
}

std::vector<GenKind> admissible_central_kinds(const AlgebraParams& p) {
    std::vector<GenKind> out{GenKind::C};
    if (!p.extended) return out;
    for (GenKind k : {GenKind::Cp, GenKind::Cx, GenKind::Ch, GenKind::Ceta,
                      GenKind::CkapA, GenKind::CkapS, GenKind::CzetA, GenKind::CzetS})
        if (central_admissible(k, p)) out.push_back(k);
    return out;
}

bool in_window(const Generator& g, const Window& w) {
    switch (g.kind) {
        case GenKind::L:
            return g.i1.abs() <= HalfInt(w.m_max);
        case GenKind::P:
            return g.i1.abs() <= w.r_max;
        case GenKind::X:
            return g.i1.abs() <= w.u_max;
        case GenKind::P2:
            return g.i1.abs() <= w.r_max && g.i2.abs() <= w.r_max;
        case GenKind::X2:
            return g.i1.abs() <= w.u_max && g.i2.abs() <= w.u_max;
        case GenKind::T:
            return g.i1.abs() <= w.r_max && g.i2.abs() <= w.u_max;
        default:
            return true;  // central symbols carry no mode index
    }
}

std::vector<Generator> window_basis(const AlgebraParams& p, const Window& w) {
    std::vector<Generator> out;
    for (GenKind k : admissible_central_kinds(p)) out.push_back(Generator::central(k));

    for (std::int64_t m = -w.m_max; m <= w.m_max; ++m) out.push_back(Generator::L(m));

    // Indices of weight l running over [-bound, bound] in integer steps.
    auto family = [](HalfInt l, HalfInt bound) {
        std::vector<HalfInt> idx;
        // Smallest index ≥ -bound with the parity of l.
        std::int64_t t = -bound.twice();
        if (((t - l.twice()) % 2) != 0) ++t;
        for (; t <= bound.twice(); t += 2) idx.push_back(HalfInt::from_twice(t));
        return idx;
    };
    const auto rs = family(p.l1, w.r_max);
    const auto us = family(p.l2, w.u_max);

    for (auto r : rs) out.push_back(Generator::P(r));
    for (auto u : us) out.push_back(Generator::X(u));
    for (auto r : rs)
        for (auto s : rs)
            if (r <= s) out.push_back(Generator::P2(r, s));
    for (auto u : us)
        for (auto v : us)
            if (u < v) out.push_back(Generator::X2(u, v));
    for (auto r : rs)
        for (auto u : us) out.push_back(Generator::T(r, u));

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace colorvir
