#include "colorvir/bracket.hpp"

namespace colorvir {

namespace {

struct ElementSink {
    Element* e;
    void push(const Generator& g, const GaussianRational& c) { e->add_term(g, c); }
};

void check_valid(const Generator& g, const AlgebraParams& p) {
    if (!valid_under(g, p))
        throw ParamError("generator " + g.to_string() + " invalid under " + p.to_string());
}

}  // namespace

Element vir_bracket(std::int64_t m, std::int64_t n) {
    Element e;
    if (m != n) e.add_term(Generator::L(m + n), GaussianRational(m - n));
    if (m + n == 0)
        e.add_term(Generator::central(GenKind::C),
                   GaussianRational(Rational(m * (m * m - 1), 12)));
    return e;
}

Element super_bracket(const Generator& a, const Generator& b, const AlgebraParams& p) {
    switch (a.kind) {
        case GenKind::L:
        case GenKind::P:
        case GenKind::X:
        case GenKind::C:
            break;
        default:
            throw DomainError("super bracket is defined on {L, P, X, c} only, got " +
                              a.to_string());
    }
    switch (b.kind) {
        case GenKind::L:
        case GenKind::P:
        case GenKind::X:
        case GenKind::C:
            break;
        default:
            throw DomainError("super bracket is defined on {L, P, X, c} only, got " +
                              b.to_string());
    }
    check_valid(a, p);
    check_valid(b, p);

    Element e;
    if (a.kind == GenKind::C || b.kind == GenKind::C) return e;
    if (a.kind == GenKind::L && b.kind == GenKind::L)
        return vir_bracket(a.i1.whole(), b.i1.whole());
    // [L_m, P_r] = (m l1 − r) P_{m+r};  [L_m, X_u] = (m l2 − u) X_{m+u};
    // the module parts commute/anticommute to zero among themselves.
    auto action = [&](const Generator& l, const Generator& mod, bool flip) {
        const HalfInt weight = mod.kind == GenKind::P ? p.l1 : p.l2;
        const std::int64_t m = l.i1.whole();
        const Rational cf = (m * weight - mod.i1).value();
        Element r;
        if (!cf.is_zero())
            r.add_term(Generator{mod.kind, l.i1 + mod.i1, HalfInt(0)},
                       flip ? GaussianRational(-cf) : GaussianRational(cf));
        return r;
    };
    if (a.kind == GenKind::L) return action(a, b, false);
    if (b.kind == GenKind::L) return action(b, a, true);  // [mod, L] = −[L, mod]
    return e;                                             // [P,P] = [P,X] = {X,X} = 0
}

Element color_bracket(const Generator& a, const Generator& b, const AlgebraParams& p) {
    check_valid(a, p);
    check_valid(b, p);
    Element e;
    ElementSink sink{&e};
    const CocycleTables tables(p);
    bracket_core(a, b, p, tables, GaussianRational(1), /*strip_center=*/false, sink);
    return e;
}

Element bracket_elements(const Element& A, const Element& B, const AlgebraParams& p) {
    Element e;
    ElementSink sink{&e};
    const CocycleTables tables(p);
    for (const auto& [ga, ca] : A.terms())
        for (const auto& [gb, cb] : B.terms())
            bracket_core(ga, gb, p, tables, ca * cb, /*strip_center=*/false, sink);
    return e;
}

}  // namespace colorvir
