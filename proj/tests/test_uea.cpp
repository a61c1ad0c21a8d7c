// Enveloping-algebra rewriting and the quadratic realization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "colorvir/uea.hpp"

#include <random>
#include <vector>

using namespace colorvir;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

AlgebraParams make_params(std::int64_t l1_twice, std::int64_t l2_twice) {
    return AlgebraParams(h(l1_twice), h(l2_twice));
}

Word word(std::vector<Generator> f, GaussianRational c = GaussianRational(1)) {
    return Word{std::move(f), c};
}

NormalForm nf(std::vector<std::pair<WordFactors, GaussianRational>> terms) {
    NormalForm out;
    for (auto& [w, c] : terms) out.add(w, c);
    return out;
}

}  // namespace

TEST_CASE("normal order: Virasoro swaps") {
    const auto p = make_params(0, 0);
    // L(1)·L(−1) → L(−1)·L(1) + 2·L(0); central coefficient (m³−m)/12 = 0.
    CHECK(normal_order(word({Generator::L(1), Generator::L(-1)}), p) ==
          nf({{{Generator::L(-1), Generator::L(1)}, GaussianRational(1)},
              {{Generator::L(0)}, GaussianRational(2)}}));
    // At m = 2 the central term survives: (8−2)/12 = 1/2.
    CHECK(normal_order(word({Generator::L(2), Generator::L(-2)}), p) ==
          nf({{{Generator::L(-2), Generator::L(2)}, GaussianRational(1)},
              {{Generator::L(0)}, GaussianRational(4)},
              {{Generator::central(GenKind::C)}, GaussianRational(Rational(1, 2))}}));
    // Already ordered: unchanged.
    CHECK(normal_order(word({Generator::L(-1), Generator::L(1)}), p) ==
          nf({{{Generator::L(-1), Generator::L(1)}, GaussianRational(1)}}));
}

TEST_CASE("normal order: module corrections and annihilation") {
    const auto p = make_params(0, 0);
    // P(1)·L(0) = L(0)·P(1) − (0·l1 − 1)·P(1) = L(0)·P(1) + P(1) at l1 = 0.
    CHECK(normal_order(word({Generator::P(HalfInt(1)), Generator::L(0)}), p) ==
          nf({{{Generator::L(0), Generator::P(HalfInt(1))}, GaussianRational(1)},
              {{Generator::P(HalfInt(1))}, GaussianRational(1)}}));
    // X(u)·X(u) = 0.
    CHECK(normal_order(word({Generator::X(HalfInt(3)), Generator::X(HalfInt(3))}), p)
              .is_zero());
    // X factors anticommute; P factors and P–X pairs commute freely.
    CHECK(normal_order(word({Generator::X(HalfInt(2)), Generator::X(HalfInt(1))}), p) ==
          nf({{{Generator::X(HalfInt(1)), Generator::X(HalfInt(2))},
               GaussianRational(-1)}}));
    CHECK(normal_order(word({Generator::P(HalfInt(2)), Generator::P(HalfInt(1))}), p) ==
          nf({{{Generator::P(HalfInt(1)), Generator::P(HalfInt(2))}, GaussianRational(1)}}));
    CHECK(normal_order(word({Generator::X(HalfInt(0)), Generator::P(HalfInt(5))}), p) ==
          nf({{{Generator::P(HalfInt(5)), Generator::X(HalfInt(0))}, GaussianRational(1)}}));
    // C commutes through everything and sorts to the front.
    CHECK(normal_order(word({Generator::L(1), Generator::central(GenKind::C)}), p) ==
          nf({{{Generator::central(GenKind::C), Generator::L(1)}, GaussianRational(1)}}));
    // Composite generators are not word factors.
    CHECK_THROWS_AS(
        (void)normal_order(word({Generator::P2(HalfInt(0), HalfInt(0))}), p),
        DomainError);
}

TEST_CASE("normal order: half-integer weight correction") {
    // [L_m, P_r] = (m·l1 − r) P_{m+r} at l1 = 1/2: P(−1/2)·L(2) picks up
    // −(2·(1/2) − (−1/2)) = −3/2 on P(3/2).
    const auto p = make_params(1, 0);
    CHECK(normal_order(word({Generator::P(h(-1)), Generator::L(2)}), p) ==
          nf({{{Generator::L(2), Generator::P(h(-1))}, GaussianRational(1)},
              {{Generator::P(h(3))}, GaussianRational(Rational(-3, 2))}}));
}

TEST_CASE("realize: quadratic composites") {
    CHECK(realize(Generator::P2(HalfInt(0), HalfInt(0))) ==
          nf({{{Generator::P(HalfInt(0)), Generator::P(HalfInt(0))}, GaussianRational(2)}}));
    CHECK(realize(Generator::X2(HalfInt(1), HalfInt(2))) ==
          nf({{{Generator::X(HalfInt(1)), Generator::X(HalfInt(2))}, GaussianRational(2)}}));
    // Canonicalization folds into the coefficient: X_{21} = −X_{12}, X_{uu} = 0.
    CHECK(realize(Generator::X2(HalfInt(2), HalfInt(1))) ==
          nf({{{Generator::X(HalfInt(1)), Generator::X(HalfInt(2))}, GaussianRational(-2)}}));
    CHECK(realize(Generator::X2(HalfInt(4), HalfInt(4))).is_zero());
    CHECK(realize(Generator::T(h(-1), HalfInt(3))) ==
          nf({{{Generator::P(h(-1)), Generator::X(HalfInt(3))}, GaussianRational(2)}}));
    CHECK(realize(Generator::central(GenKind::C)) ==
          nf({{{Generator::central(GenKind::C)}, GaussianRational(1)}}));
    CHECK_THROWS_AS((void)realize(Generator::central(GenKind::Cp)), DomainError);
    CHECK_THROWS_AS((void)realize(Generator::central(GenKind::CkapA)), DomainError);
}

TEST_CASE("graded commutator of realizations: fixtures") {
    const auto p = make_params(0, 0);
    // {X_u, T_{rv}} = 2 P_r (X_u X_v + X_v X_u) = 0.
    CHECK(color_bracket_uea(Generator::X(HalfInt(1)), Generator::T(HalfInt(0), HalfInt(2)),
                            p)
              .is_zero());
    CHECK(color_bracket_uea(Generator::X(HalfInt(1)), Generator::T(HalfInt(0), HalfInt(1)),
                            p)
              .is_zero());
    // {P_r, X_u} = 2 P_r X_u = realize(T_{ru}).
    CHECK(color_bracket_uea(Generator::P(HalfInt(2)), Generator::X(HalfInt(-1)), p) ==
          realize(Generator::T(HalfInt(2), HalfInt(-1))));
    // [L_m, L_{−m}] reproduces the Virasoro line including the C word.
    CHECK(color_bracket_uea(Generator::L(2), Generator::L(-2), p) ==
          nf({{{Generator::L(0)}, GaussianRational(4)},
              {{Generator::central(GenKind::C)}, GaussianRational(Rational(1, 2))}}));

    // [L_m, P_{rs}] at l1 = 1: (m−r)·realize(P2(m+r,s)) + (m−s)·realize(P2(r,m+s)).
    const auto p1 = make_params(2, 0);
    NormalForm expect = realize(Generator::P2(HalfInt(1), HalfInt(2)));
    expect += GaussianRational(-1) * realize(Generator::P2(HalfInt(0), HalfInt(3)));
    CHECK(color_bracket_uea(Generator::L(1), Generator::P2(HalfInt(0), HalfInt(2)), p1) ==
          expect);
}

TEST_CASE("confluence: leftmost and rightmost rewriting agree") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<int> kind_pick(0, 3);
    std::uniform_int_distribution<std::int64_t> idx_pick(-3, 3);
    std::uniform_int_distribution<std::size_t> len_pick(0, 5);

    const std::vector<AlgebraParams> grid{make_params(0, 0), make_params(1, 0),
                                          make_params(0, 1), make_params(2, 2),
                                          make_params(3, 1)};
    for (int trial = 0; trial < 400; ++trial) {
        const AlgebraParams& p = grid[static_cast<std::size_t>(trial) % grid.size()];
        Word w;
        const std::size_t len = len_pick(rng);
        for (std::size_t i = 0; i < len; ++i) {
            switch (kind_pick(rng)) {
                case 0: w.factors.push_back(Generator::central(GenKind::C)); break;
                case 1: w.factors.push_back(Generator::L(idx_pick(rng))); break;
                case 2:
                    w.factors.push_back(Generator::P(p.l1 + HalfInt(idx_pick(rng))));
                    break;
                default:
                    w.factors.push_back(Generator::X(p.l2 + HalfInt(idx_pick(rng))));
                    break;
            }
        }
        const NormalForm left = normal_order(w, p, SwapStrategy::leftmost);
        const NormalForm right = normal_order(w, p, SwapStrategy::rightmost);
        if (left != right) {
            INFO("word trial " << trial);
            REQUIRE(left == right);
        }
    }
    CHECK(true);
}

TEST_CASE("rewriting preserves the four-degree and the X parity") {
    std::mt19937 rng(911u);
    std::uniform_int_distribution<int> kind_pick(0, 3);
    std::uniform_int_distribution<std::int64_t> idx_pick(-2, 2);
    std::uniform_int_distribution<std::size_t> len_pick(1, 5);
    const auto p = make_params(0, 0);

    const auto word_stats = [](const WordFactors& f) {
        std::size_t pc = 0, xc = 0;
        Degree d{0, 0};
        for (const auto& g : f) {
            d = d + degree_unchecked(g.kind);
            pc += g.kind == GenKind::P;
            xc += g.kind == GenKind::X;
        }
        return std::tuple<Degree, std::size_t, std::size_t>(d, pc, xc);
    };

    int checked_terms = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Word w;
        const std::size_t len = len_pick(rng);
        for (std::size_t i = 0; i < len; ++i) {
            switch (kind_pick(rng)) {
                case 0: w.factors.push_back(Generator::central(GenKind::C)); break;
                case 1: w.factors.push_back(Generator::L(idx_pick(rng))); break;
                case 2: w.factors.push_back(Generator::P(HalfInt(idx_pick(rng)))); break;
                default: w.factors.push_back(Generator::X(HalfInt(idx_pick(rng)))); break;
            }
        }
        const auto [d0, p0, x0] = word_stats(w.factors);
        const NormalForm form = normal_order(w, p);
        for (const auto& [f, c] : form.terms()) {
            const auto [d, pc, xc] = word_stats(f);
            CHECK(d == d0);
            CHECK(pc == p0);           // no rewrite touches the P count
            CHECK(xc % 2 == x0 % 2);   // X pairs may annihilate
            CHECK(xc <= x0);
            ++checked_terms;
        }
    }
    CHECK(checked_terms > 300);
}

TEST_CASE("verify_realization: windows and grids") {
    // Virasoro-only window.
    CHECK(verify_realization(make_params(0, 0), Window{2, h(-2), h(-2)}).ok());

    // The two spotlighted weight points at window 4.
    const auto r1 = verify_realization(make_params(1, 0), Window::cube(4));
    CHECK(r1.ok());
    CHECK(r1.pairs_checked > 0);
    CHECK(verify_realization(make_params(0, 0), Window::cube(4)).ok());

    // Whole test grid at window 2.
    for (std::int64_t l1 = 0; l1 <= 3; ++l1)
        for (std::int64_t l2 = 0; l2 <= 3; ++l2) {
            INFO("l1_twice=" << l1 << " l2_twice=" << l2);
            CHECK(verify_realization(make_params(l1, l2), Window::cube(2)).ok());
        }

    // The extension is not realized.
    AlgebraParams ext = make_params(0, 0);
    ext.extended = true;
    CHECK_THROWS_AS((void)verify_realization(ext, Window::cube(2)), ParamError);
}
