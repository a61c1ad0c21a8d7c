// Bracket tables: Virasoro, the underlying superalgebra, the color algebra,
// and the centrally extended tables, plus the structural properties every
// in-window pair must satisfy.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorvir/bracket.hpp"

using namespace colorvir;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

Element term(const Generator& g, Rational c) {
    return Element::term(g, GaussianRational(c));
}

const Generator C = Generator::central(GenKind::C);

}  // namespace

TEST_CASE("virasoro bracket") {
    // [L_2, L_{-2}] = 4 L_0 + (1/2) c
    CHECK(vir_bracket(2, -2) == term(Generator::L(0), 4) + term(C, Rational(1, 2)));
    // [L_m, L_m] = 0
    for (std::int64_t m = -4; m <= 4; ++m) CHECK(vir_bracket(m, m).is_zero());
    // m(m²−1) vanishes at m = 1
    CHECK(vir_bracket(1, -1) == term(Generator::L(0), 2));
    // Antisymmetry
    CHECK(vir_bracket(-3, 3) + vir_bracket(3, -3) == Element());
}

TEST_CASE("super bracket on the underlying algebra") {
    const AlgebraParams p(h(1), HalfInt(0));  // l1 = 1/2
    // [L_2, P_{-1/2}] = (2·(1/2) − (−1/2)) P_{3/2} = (3/2) P_{3/2}
    CHECK(super_bracket(Generator::L(2), Generator::P(h(-1)), p) ==
          term(Generator::P(h(3)), Rational(3, 2)));
    // {X_u, X_v} = 0 in the underlying algebra (contrast: color bracket gives X_{uv})
    CHECK(super_bracket(Generator::X(HalfInt(1)), Generator::X(HalfInt(2)), p).is_zero());
    CHECK(super_bracket(Generator::P(h(1)), Generator::P(h(-1)), p).is_zero());
    CHECK(super_bracket(Generator::P(h(1)), Generator::X(HalfInt(0)), p).is_zero());
    // Centrality
    CHECK(super_bracket(Generator::P(h(1)), C, p).is_zero());
    CHECK(super_bracket(C, C, p).is_zero());
    // [P_r, L_m] = −[L_m, P_r]
    CHECK(super_bracket(Generator::P(h(-1)), Generator::L(2), p) ==
          term(Generator::P(h(3)), Rational(-3, 2)));
    // Composites live in the color algebra only.
    CHECK_THROWS_AS(super_bracket(Generator::T(h(1), HalfInt(0)), Generator::L(0), p),
                    DomainError);
}

TEST_CASE("color bracket structural lines") {
    const AlgebraParams p(HalfInt(1), HalfInt(1));
    // {P_r, P_s} = P_{rs}
    CHECK(color_bracket(Generator::P(HalfInt(2)), Generator::P(HalfInt(-1)), p) ==
          term(Generator::P2(HalfInt(-1), HalfInt(2)), 1));
    // Diagonal anticommutator is legal: {P_r, P_r} = P_{rr}
    CHECK(color_bracket(Generator::P(HalfInt(1)), Generator::P(HalfInt(1)), p) ==
          term(Generator::P2(HalfInt(1), HalfInt(1)), 1));
    // [X_u, X_v] = X_{uv}; diagonal collapses to zero
    CHECK(color_bracket(Generator::X(HalfInt(2)), Generator::X(HalfInt(1)), p) ==
          term(Generator::X2(HalfInt(1), HalfInt(2)), -1));
    CHECK(color_bracket(Generator::X(HalfInt(1)), Generator::X(HalfInt(1)), p).is_zero());
    // {P_r, X_u} = T_{ru}
    CHECK(color_bracket(Generator::P(HalfInt(0)), Generator::X(HalfInt(3)), p) ==
          term(Generator::T(HalfInt(0), HalfInt(3)), 1));
    // [L_1, T_{01}] at l1 = l2 = 1: (1·1−0) T_{11} + (1·1−1) T_{02} = T_{11}
    CHECK(color_bracket(Generator::L(1), Generator::T(HalfInt(0), HalfInt(1)), p) ==
          term(Generator::T(HalfInt(1), HalfInt(1)), 1));
    // [L_m, P_{rs}] both index shifts
    CHECK(color_bracket(Generator::L(2), Generator::P2(HalfInt(0), HalfInt(1)), p) ==
          term(Generator::P2(HalfInt(1), HalfInt(2)), 2) +
              term(Generator::P2(HalfInt(0), HalfInt(3)), 1));
}

TEST_CASE("color bracket at l1 = 0 merges shifted composites at m = 0") {
    const AlgebraParams p(HalfInt(0), HalfInt(0));
    // [L_0, P_{rs}] = −(r+s) P_{rs}
    CHECK(color_bracket(Generator::L(0), Generator::P2(HalfInt(1), HalfInt(2)), p) ==
          term(Generator::P2(HalfInt(1), HalfInt(2)), -3));
}

TEST_CASE("category I pairs vanish identically") {
    const AlgebraParams ext(HalfInt(0), HalfInt(0), true);
    const Generator p2 = Generator::P2(HalfInt(1), HalfInt(2));
    const Generator x2 = Generator::X2(HalfInt(0), HalfInt(1));
    const Generator t = Generator::T(HalfInt(-3), HalfInt(0));
    const Generator t2 = Generator::T(HalfInt(3), HalfInt(0));
    CHECK(color_bracket(p2, p2, ext).is_zero());
    CHECK(color_bracket(x2, x2, ext).is_zero());
    CHECK(color_bracket(p2, x2, ext).is_zero());
    CHECK(color_bracket(p2, t, ext).is_zero());
    CHECK(color_bracket(x2, t, ext).is_zero());
    CHECK(color_bracket(t, t2, ext).is_zero());  // {T,T} = 0 even at index sum 0
}

TEST_CASE("extended bracket central terms") {
    const AlgebraParams p00(HalfInt(0), HalfInt(0), true);
    // [L_3, P_{-3}] at l1 = 0: (0−(−3)) P_0 + p(3) = 3 P_0 + 9 c_p
    CHECK(color_bracket(Generator::L(3), Generator::P(HalfInt(-3)), p00) ==
          term(Generator::P(HalfInt(0)), 3) + term(Generator::central(GenKind::Cp), 9));
    // x(m) = m² c_x at l2 = 0
    CHECK(color_bracket(Generator::L(2), Generator::X(HalfInt(-2)), p00) ==
          term(Generator::X(HalfInt(0)), 2) + term(Generator::central(GenKind::Cx), 4));
    // h is supported on index sum zero only
    CHECK(color_bracket(Generator::P2(HalfInt(1), HalfInt(2)), Generator::P(HalfInt(-3)),
                        p00) == term(Generator::central(GenKind::Ch), 3));
    CHECK(color_bracket(Generator::P2(HalfInt(1), HalfInt(2)), Generator::P(HalfInt(0)),
                        p00)
              .is_zero());
    // η(u,v) = (u−v) c_η
    CHECK(color_bracket(Generator::X2(HalfInt(-2), HalfInt(1)), Generator::X(HalfInt(1)),
                        p00) == term(Generator::central(GenKind::Ceta), -3));
    // κ(r,s) at (0,0): (r+s)c_κS + (r−s)c_κA on [T_{ru}, P_s], δ_{r+u+s,0}
    CHECK(color_bracket(Generator::T(HalfInt(2), HalfInt(-3)), Generator::P(HalfInt(1)),
                        p00) ==
          term(Generator::central(GenKind::CkapS), 3) +
              term(Generator::central(GenKind::CkapA), 1));
    // ζ(u,v) at (0,0): {T_{ru}, X_v}, arguments are T's second index and X's index
    CHECK(color_bracket(Generator::T(HalfInt(2), HalfInt(-3)), Generator::X(HalfInt(1)),
                        p00) ==
          term(Generator::central(GenKind::CzetS), -2) +
              term(Generator::central(GenKind::CzetA), -4));
    // Delta support: {X_u, T_{rv}} with r+u+v ≠ 0 is zero
    CHECK(color_bracket(Generator::X(HalfInt(1)), Generator::T(HalfInt(2), HalfInt(-3)),
                        p00)
              .is_zero() == false);  // sum 0: nonzero by ζ
    CHECK(color_bracket(Generator::X(HalfInt(2)), Generator::T(HalfInt(2), HalfInt(-3)),
                        p00)
              .is_zero());  // sum 1: delta kills it

    // l1 = 1: p(m) = m³ c_p
    const AlgebraParams p10(HalfInt(1), HalfInt(0), true);
    CHECK(color_bracket(Generator::L(2), Generator::P(HalfInt(-2)), p10) ==
          term(Generator::P(HalfInt(0)), 4) + term(Generator::central(GenKind::Cp), 8));

    // l1 = 1/2, l2 = 0: κ(r,s) = (r²−s²) c_κA
    const AlgebraParams ph0(h(1), HalfInt(0), true);
    CHECK(color_bracket(Generator::T(h(3), HalfInt(-2)), Generator::P(h(1)), ph0) ==
          term(Generator::central(GenKind::CkapA), 2));
}

TEST_CASE("rho: corrected vs theorem-verbatim") {
    // Corrected: ρ(r,s) = −2(r+s) c_κS at (0,0)
    const AlgebraParams corr(HalfInt(0), HalfInt(0), true, RhoMode::corrected);
    CHECK(color_bracket(Generator::P2(HalfInt(-1), HalfInt(2)), Generator::X(HalfInt(-1)),
                        corr) == term(Generator::central(GenKind::CkapS), -2));
    // Published form: ρ(r,s) = −2(r−s) c_κA, evaluated at stored order r ≤ s
    const AlgebraParams verb(HalfInt(0), HalfInt(0), true, RhoMode::theorem_verbatim);
    CHECK(color_bracket(Generator::P2(HalfInt(-1), HalfInt(2)), Generator::X(HalfInt(-1)),
                        verb) == term(Generator::central(GenKind::CkapA), 6));
    // q(u,v) = −2(u−v) c_ζA at (0,0) — same in both modes; q(−2,1) = +6 c_ζA
    for (auto mode : {RhoMode::corrected, RhoMode::theorem_verbatim}) {
        const AlgebraParams p(HalfInt(0), HalfInt(0), true, mode);
        CHECK(color_bracket(Generator::X2(HalfInt(-2), HalfInt(1)), Generator::P(HalfInt(1)),
                            p) == term(Generator::central(GenKind::CzetA), 6));
    }
    // Corrected ρ at (0,1): −2rs c_κS
    const AlgebraParams p01(HalfInt(0), HalfInt(1), true);
    CHECK(color_bracket(Generator::P2(HalfInt(-1), HalfInt(2)), Generator::X(HalfInt(-1)),
                        p01) == term(Generator::central(GenKind::CkapS), 4));
}

TEST_CASE("bilinear extension") {
    const AlgebraParams p(HalfInt(1), HalfInt(0));
    // (L_1 + L_2) against P_0 at l1 = 1: P_1 + 2 P_2
    Element A = Element::unit(Generator::L(1)) + Element::unit(Generator::L(2));
    CHECK(bracket_elements(A, Element::unit(Generator::P(HalfInt(0))), p) ==
          term(Generator::P(HalfInt(1)), 1) + term(Generator::P(HalfInt(2)), 2));
    CHECK(bracket_elements(A, Element(), p).is_zero());
    CHECK(bracket_elements(Element::unit(C), A, p).is_zero());
    // Scalar bilinearity with complex coefficients
    const GaussianRational i = GaussianRational::i();
    CHECK(bracket_elements(i * Element::unit(Generator::L(1)),
                           Element::unit(Generator::P(HalfInt(0))), p) ==
          i * Element::unit(Generator::P(HalfInt(1))));
}

// Structural properties over a whole window basis.
static void check_pair_properties(const AlgebraParams& p, const Window& w) {
    const auto basis = window_basis(p, w);
    for (const auto& a : basis) {
        const Degree da = degree_of(a, p);
        for (const auto& b : basis) {
            const Degree db = degree_of(b, p);
            const Element ab = color_bracket(a, b, p);
            const Element ba = color_bracket(b, a, p);

            // Graded antisymmetry: ⟦a,b⟧ + (−1)^{a·b} ⟦b,a⟧ = 0
            const GaussianRational sign(da.dot(db) == 0 ? 1 : -1);
            CHECK((ab + sign * ba).is_zero());

            for (const auto& [g, c] : ab.terms()) {
                // Degree additivity
                CHECK(degree_of(g, p) == da + db);
                if (!is_central(g.kind)) {
                    // Index additivity for mode generators
                    CHECK((g.i1 + g.i2) == (a.i1 + a.i2 + b.i1 + b.i2));
                } else if (g.kind != GenKind::C) {
                    // Central terms only at total index zero, and only
                    // admissible symbols ever appear.
                    CHECK((a.i1 + a.i2 + b.i1 + b.i2).is_zero());
                    CHECK(central_admissible(g.kind, p));
                }
            }
        }
    }
}

TEST_CASE("pair properties across parameter grid") {
    for (std::int64_t t1 : {0, 1, 2}) {
        for (std::int64_t t2 : {0, 1, 2}) {
            for (bool ext : {false, true}) {
                for (auto mode : {RhoMode::corrected, RhoMode::theorem_verbatim}) {
                    check_pair_properties(AlgebraParams(h(t1), h(t2), ext, mode),
                                          Window::cube(2));
                }
            }
        }
    }
}

TEST_CASE("restriction to the underlying algebra") {
    // On pairs where both algebras use the same bracket type — (L,·) and
    // (C,·) pairs — the color bracket at extended=false must agree with the
    // underlying superalgebra bracket.  (Anticommutator pairs differ by
    // construction: {P,P} is P_{rs} in the color algebra, 0 underneath.)
    for (std::int64_t t1 : {0, 1, 2}) {
        for (std::int64_t t2 : {0, 2}) {
            const AlgebraParams p(h(t1), h(t2));
            const auto basis = window_basis(p, Window::cube(2));
            for (const auto& a : basis) {
                if (a.kind != GenKind::L && a.kind != GenKind::C) continue;
                for (const auto& b : basis) {
                    if (b.kind == GenKind::P2 || b.kind == GenKind::X2 ||
                        b.kind == GenKind::T)
                        continue;
                    CHECK(color_bracket(a, b, p) == super_bracket(a, b, p));
                    CHECK(color_bracket(b, a, p) == super_bracket(b, a, p));
                }
            }
        }
    }
}
