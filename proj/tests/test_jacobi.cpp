// Graded Jacobi identity: exact residuals and exhaustive window sweeps.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "colorvir/jacobi.hpp"

#include <map>
#include <string>
#include <vector>

using namespace colorvir;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

AlgebraParams make_params(std::int64_t l1_twice, std::int64_t l2_twice, bool extended,
                          RhoMode rho = RhoMode::corrected) {
    AlgebraParams p(h(l1_twice), h(l2_twice));
    p.extended = extended;
    p.rho = rho;
    return p;
}

// Multiset of generator-kind names of a failing triple, e.g. "L,P2,X".
std::string failure_shape(const TripleFailure& f) {
    std::vector<std::string> ks{kind_name(f.a.kind), kind_name(f.b.kind),
                                kind_name(f.c.kind)};
    std::sort(ks.begin(), ks.end());
    return ks[0] + "," + ks[1] + "," + ks[2];
}

std::uint64_t multiset_triples(std::uint64_t n) { return n * (n + 1) * (n + 2) / 6; }

}  // namespace

TEST_CASE("jacobi residual: Virasoro triples vanish") {
    const auto p = make_params(0, 0, false);
    CHECK(jacobi_residual(Generator::L(1), Generator::L(2), Generator::L(-3), p).is_zero());
    CHECK(jacobi_residual(Generator::L(2), Generator::L(-2), Generator::L(0), p).is_zero());
    CHECK(jacobi_residual(Generator::L(5), Generator::L(5), Generator::L(5), p).is_zero());
    CHECK(jacobi_residual(Generator::L(3), Generator::L(-1), Generator::L(-1), p).is_zero());
}

TEST_CASE("jacobi residual: (P,P,X) closes with the corrected rho") {
    const auto p = make_params(0, 0, true);
    for (std::int64_t r = -3; r <= 3; ++r)
        for (std::int64_t s = -3; s <= 3; ++s)
            for (std::int64_t u = -3; u <= 3; ++u) {
                INFO("r=" << r << " s=" << s << " u=" << u);
                CHECK(jacobi_residual(Generator::P(HalfInt(r)), Generator::P(HalfInt(s)),
                                      Generator::X(HalfInt(u)), p)
                          .is_zero());
                // The mirror shape (X,X,P) exercises q = −2ζ_A the same way.
                CHECK(jacobi_residual(Generator::X(HalfInt(r)), Generator::X(HalfInt(s)),
                                      Generator::P(HalfInt(u)), p)
                          .is_zero());
            }
}

TEST_CASE("jacobi residual: (P,P,X) breaks under the verbatim rho") {
    const auto pv = make_params(0, 0, true, RhoMode::theorem_verbatim);
    const Element r = jacobi_residual(Generator::P(HalfInt(1)), Generator::P(HalfInt(-1)),
                                      Generator::X(HalfInt(0)), pv);
    Element expect;
    expect.add_term(Generator::central(GenKind::CkapA), GaussianRational(4));
    CHECK(r == expect);

    // The residual is a pure central obstruction: reordering the triple can
    // only flip its overall sign.
    const Element r2 = jacobi_residual(Generator::X(HalfInt(0)), Generator::P(HalfInt(1)),
                                       Generator::P(HalfInt(-1)), pv);
    CHECK(!r2.is_zero());
    CHECK((r2 == expect || r2 == GaussianRational(-1) * Element(expect)));

    // Off the delta support the residual still vanishes.
    CHECK(jacobi_residual(Generator::P(HalfInt(1)), Generator::P(HalfInt(1)),
                          Generator::X(HalfInt(0)), pv)
              .is_zero());
}

TEST_CASE("jacobi residual: (L,P2,X) also breaks under the verbatim rho") {
    // Canonicalizing P_{m+r,s} back to ascending order flips the sign of the
    // antisymmetric verbatim formula, so the Virasoro action on P2 is
    // inconsistent with it — this shape fails too.
    const auto pv = make_params(0, 0, true, RhoMode::theorem_verbatim);
    const Element r = jacobi_residual(Generator::L(3), Generator::P2(HalfInt(-1), HalfInt(0)),
                                      Generator::X(HalfInt(-2)), pv);
    Element expect;
    expect.add_term(Generator::central(GenKind::CkapA), GaussianRational(-8));
    CHECK(r == expect);

    const auto pc = make_params(0, 0, true);
    CHECK(jacobi_residual(Generator::L(3), Generator::P2(HalfInt(-1), HalfInt(0)),
                          Generator::X(HalfInt(-2)), pc)
              .is_zero());
}

TEST_CASE("jacobi residual: invalid generators are rejected") {
    const auto p = make_params(0, 0, true);
    CHECK_THROWS_AS((void)jacobi_residual(Generator::P(h(1)), Generator::P(HalfInt(1)),
                                          Generator::X(HalfInt(0)), p),
                    ParamError);
    const auto plain = make_params(0, 0, false);
    CHECK_THROWS_AS((void)jacobi_residual(Generator::central(GenKind::Ch),
                                          Generator::P(HalfInt(1)), Generator::X(HalfInt(0)),
                                          plain),
                    ParamError);
}

TEST_CASE("jacobi residual: exact for every window-2 triple, escaped or not") {
    // The bracket never truncates, so residuals vanish even for triples the
    // window sweep would skip; central-containing triples vanish trivially.
    const auto p = make_params(0, 0, true);
    const auto basis = window_basis(p, Window::cube(2));
    const std::size_t n = basis.size();
    std::uint64_t central_triples = 0, nonzero = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                const Element r = jacobi_residual(basis[i], basis[j], basis[k], p);
                if (!r.is_zero() && nonzero++ == 0)
                    first_bad = basis[i].to_string() + " " + basis[j].to_string() + " " +
                                basis[k].to_string() + " -> " + r.to_string();
                if (is_central(basis[i].kind) || is_central(basis[j].kind) ||
                    is_central(basis[k].kind))
                    ++central_triples;
            }
    CHECK_MESSAGE(nonzero == 0, first_bad);
    CHECK(central_triples > 0);
}

TEST_CASE("verify_window: plain and corrected-extended grids are clean") {
    for (std::int64_t l1 = 0; l1 <= 3; ++l1)
        for (std::int64_t l2 = 0; l2 <= 3; ++l2) {
            INFO("l1_twice=" << l1 << " l2_twice=" << l2);
            const auto plain = verify_window(make_params(l1, l2, false), Window::cube(2));
            CHECK(plain.ok());
            CHECK(plain.triples_checked > 0);
            const auto ext = verify_window(make_params(l1, l2, true), Window::cube(2));
            CHECK(ext.ok());
            const std::uint64_t total =
                multiset_triples(window_basis(make_params(l1, l2, true), Window::cube(2)).size());
            CHECK(ext.triples_checked + ext.escaped == total);
            CHECK(ext.escaped > 0);
        }
}

TEST_CASE("verify_window: Virasoro-only window is trivially clean") {
    const auto p = make_params(0, 0, false);
    const Window w{1, h(-2), h(-2)};  // no P/X indices at all
    const auto rep = verify_window(p, w);
    CHECK(rep.ok());
    CHECK(rep.escaped == 0);
    // Basis is {c, L(-1), L(0), L(1)}: every bracket stays inside.
    CHECK(rep.triples_checked == multiset_triples(4));
}

TEST_CASE("verify_window: verbatim rho failure census at window 3") {
    // Shape counts confirmed by an independent expansion before freezing.
    struct Expect {
        std::int64_t l1_twice, l2_twice;
        std::uint64_t failures;
        std::map<std::string, int> shapes;
    };
    const std::vector<Expect> table{
        {0, 0, 37, {{"L,P2,X", 18}, {"P,P,X", 19}}},
        {1, 0, 24, {{"L,P2,X", 14}, {"P,P,X", 10}}},
        {0, 1, 0, {}},
        {0, 2, 13, {{"P,P,X", 13}}},
        {2, 0, 0, {}},
        {2, 2, 0, {}},
        {1, 1, 0, {}},
    };
    for (const auto& e : table) {
        INFO("l1_twice=" << e.l1_twice << " l2_twice=" << e.l2_twice);
        const auto p = make_params(e.l1_twice, e.l2_twice, true, RhoMode::theorem_verbatim);
        const auto rep = verify_window(p, Window::cube(3));
        CHECK(rep.failures.size() == e.failures);
        std::map<std::string, int> shapes;
        for (const auto& f : rep.failures) {
            shapes[failure_shape(f)]++;
            // Obstructions are purely central.
            for (const auto& [g, c] : f.residual.terms()) CHECK(is_central(g.kind));
        }
        CHECK(shapes == e.shapes);
    }
}

TEST_CASE("verify_window: reports are identical across worker counts") {
    const auto pv = make_params(0, 0, true, RhoMode::theorem_verbatim);
    const auto r1 = verify_window(pv, Window::cube(3), 1);
    const auto r2 = verify_window(pv, Window::cube(3), 2);
    const auto r3 = verify_window(pv, Window::cube(3), 3);
    for (const auto* other : {&r2, &r3}) {
        CHECK(r1.triples_checked == other->triples_checked);
        CHECK(r1.escaped == other->escaped);
        REQUIRE(r1.failures.size() == other->failures.size());
        for (std::size_t i = 0; i < r1.failures.size(); ++i) {
            CHECK(r1.failures[i].a == other->failures[i].a);
            CHECK(r1.failures[i].b == other->failures[i].b);
            CHECK(r1.failures[i].c == other->failures[i].c);
            CHECK(r1.failures[i].residual == other->failures[i].residual);
        }
    }
}

TEST_CASE("verify_window: half-integer weights at window 5/2") {
    // Half-odd spins shift the P/X index lattices; sweeps must stay clean.
    for (const auto& [l1, l2] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {1, 1}, {1, 2}, {3, 0}, {0, 3}}) {
        INFO("l1_twice=" << l1 << " l2_twice=" << l2);
        const Window w{2, h(5), h(5)};
        CHECK(verify_window(make_params(l1, l2, false), w).ok());
        CHECK(verify_window(make_params(l1, l2, true), w).ok());
    }
}
