#include "colorvir/involution.hpp"

#include <random>
#include <set>
#include <utility>

namespace colorvir {

namespace {

// (−1)^e for an exponent assembled from mode indices and (l1,l2).  Every
// admissible combination sums to an integer; a non-integer exponent means
// the generator/parameter pairing was invalid, so refuse loudly instead of
// picking a branch cut.
int sign_pow(const HalfInt& e) {
    if (!e.is_integer())
        throw ParamError("involution sign (-1)^e needs an integer exponent, got e = " +
                         e.to_string());
    return (e.whole() % 2 == 0) ? 1 : -1;
}

bool superadjoint_domain(const AlgebraParams& p) {
    return p.l1.is_half_odd() && HalfInt(0) < p.l1 && p.l2.is_integer() && !(p.l2 < HalfInt(0));
}

int adjoint_sign(const Generator& g, const AlgebraParams& p) {
    const bool origin = p.l1.is_zero() && p.l2.is_zero();
    switch (g.kind) {
        case GenKind::L:
        case GenKind::P:
        case GenKind::X:
        case GenKind::P2:
        case GenKind::T:
            return 1;
        case GenKind::X2:
            return -1;
        case GenKind::C:
        case GenKind::Ch:
            return 1;
        case GenKind::Ceta:
            return -1;
        case GenKind::Cp:
            return p.l1.is_zero() ? -1 : 1;  // admissible only at l1 = 0, 1
        case GenKind::Cx:
            return p.l2.is_zero() ? -1 : 1;  // admissible only at l2 = 0, 1
        case GenKind::CkapA:                 // admissible at (0,0) and (1/2,0)
        case GenKind::CkapS:                 // admissible at (0,0) and (0,1)
            return origin ? 1 : -1;
        case GenKind::CzetA:                 // admissible at (0,0) and (0,1/2)
        case GenKind::CzetS:                 // admissible at (0,0) and (1,0)
            return origin ? -1 : 1;
    }
    throw ParamError("adjoint image of unknown generator kind");
}

int superadjoint_sign(const Generator& g, const AlgebraParams& p) {
    switch (g.kind) {
        case GenKind::L:
            return sign_pow(g.i1);
        case GenKind::P:
            return sign_pow(p.l1 + g.i1);
        case GenKind::X:
            return sign_pow(g.i1);
        case GenKind::P2:
            return sign_pow(g.i1 + g.i2);
        case GenKind::X2:
            return -sign_pow(g.i1 + g.i2);
        case GenKind::T:
            return -sign_pow(p.l1 + g.i1 + g.i2);
        case GenKind::C:
            return 1;
        case GenKind::Ceta:  // admissible only at l2 = 0
        case GenKind::CkapA: // admissible only at (1/2, 0)
            return -1;
        case GenKind::Cx:
            return p.l2.is_zero() ? -1 : 1;
        default:
            // Cp, Ch, CkapS, CzetA, CzetS are never admissible when l1 is
            // half-odd; valid_under() rejects them before we get here.
            throw ParamError("superadjoint image undefined for central symbol " +
                             g.to_string());
    }
}

}  // namespace

std::string to_string(InvolutionKind k) {
    return k == InvolutionKind::adjoint ? "adjoint" : "superadjoint";
}

Element apply(InvolutionKind kind, const Element& A, const AlgebraParams& p) {
    if (kind == InvolutionKind::superadjoint && !superadjoint_domain(p))
        throw DomainError("superadjoint is defined only for l1 in N+1/2 and l2 in N; got (" +
                          p.l1.to_string() + ", " + p.l2.to_string() + ")");
    Element out;
    for (const auto& [g, c] : A.terms()) {
        if (!valid_under(g, p))
            throw ParamError("generator " + g.to_string() + " does not exist at (l1, l2) = (" +
                             p.l1.to_string() + ", " + p.l2.to_string() + ")");
        const int s =
            kind == InvolutionKind::adjoint ? adjoint_sign(g, p) : superadjoint_sign(g, p);
        Generator img = g;  // centrals carry zero indices, so negation is a no-op
        img.i1 = -g.i1;
        img.i2 = -g.i2;
        const GaussianRational cc = c.conj();
        // add_term re-canonicalizes the image (an X2 index flip contributes
        // its own sign) and merges collisions.
        out.add_term(img, s < 0 ? -cc : cc);
    }
    return out;
}

InvolutionReport verify_involution(InvolutionKind kind, const AlgebraParams& p, const Window& w,
                                   std::uint64_t seed) {
    InvolutionReport rep;
    rep.kind = kind;
    rep.params = p;
    rep.window = w;

    const std::vector<Generator> basis = window_basis(p, w);

    constexpr std::size_t kMaxFailures = 12;
    auto note = [&rep](std::string msg) {
        if (rep.failures.size() < kMaxFailures) rep.failures.push_back(std::move(msg));
    };

    // Precompute unit images once; every check below reuses them.
    std::vector<Element> image(basis.size());
    std::vector<Degree> deg(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        image[i] = apply(kind, Element::unit(basis[i]), p);
        deg[i] = degree_of(basis[i], p);
    }

    // (i) degree preservation and (iv) involutivity, generator by generator.
    bool deg_ok = true;
    bool invol_ok = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto& [h, c] : image[i].terms()) {
            (void)c;
            if (degree_of(h, p) != deg[i]) {
                deg_ok = false;
                note("degree: image of " + basis[i].to_string() + " contains " + h.to_string());
            }
        }
        Element sq = apply(kind, image[i], p);
        Element expect = Element::unit(basis[i]);
        if (kind == InvolutionKind::superadjoint && deg[i].dot(deg[i]) != 0)
            expect *= GaussianRational(-1);
        if (!(sq == expect)) {
            invol_ok = false;
            note("involutivity: square on " + basis[i].to_string() + " gives " + sq.to_string());
        }
        ++rep.generators_checked;
    }

    // (ii) antilinearity on seeded random Gaussian-rational combinations.
    bool anti_ok = true;
    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> num(-9, 9);
        std::uniform_int_distribution<std::int64_t> den(1, 4);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        auto scalar = [&rng, &num, &den] {
            return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        };
        constexpr std::size_t kSamples = 64;
        for (std::size_t s = 0; s < kSamples; ++s) {
            const std::size_t i = pick(rng);
            const std::size_t j = pick(rng);
            const GaussianRational a = scalar();
            const GaussianRational b = scalar();
            Element combo = Element::term(basis[i], a);
            combo += Element::term(basis[j], b);
            const Element lhs = apply(kind, combo, p);
            Element rhs = image[i];
            rhs *= a.conj();
            Element rhs2 = image[j];
            rhs2 *= b.conj();
            rhs += rhs2;
            ++rep.samples_checked;
            if (!(lhs == rhs)) {
                anti_ok = false;
                note("antilinearity: failed on " + basis[i].to_string() + ", " +
                     basis[j].to_string());
            }
        }
    }

    // (iii) bracket compatibility on every ordered in-window pair.  The map
    // itself is window-independent, so brackets that escape the window are
    // still checked exactly — nothing is skipped.
    bool br_ok = true;
    std::set<GenKind> seen;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Element br = color_bracket(basis[i], basis[j], p);
            for (const auto& [h, c] : br.terms()) {
                (void)c;
                if (is_central(h.kind)) seen.insert(h.kind);
            }
            const Element lhs = apply(kind, br, p);
            Element rhs = bracket_elements(image[j], image[i], p);
            if (kind == InvolutionKind::superadjoint && deg[i].dot(deg[j]) != 0)
                rhs *= GaussianRational(-1);
            ++rep.pairs_checked;
            if (!(lhs == rhs)) {
                br_ok = false;
                note("bracket: (" + basis[i].to_string() + ", " + basis[j].to_string() + ")");
            }
        }
    }
    rep.centrals_seen.assign(seen.begin(), seen.end());

    rep.degree_preserved = deg_ok;
    rep.antilinear = anti_ok;
    rep.bracket_compatible = br_ok;
    rep.involutive = invol_ok;
    return rep;
}

}  // namespace colorvir
