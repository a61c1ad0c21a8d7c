#include "colorvir/uea.hpp"

#include <optional>
#include <utility>

namespace colorvir {

std::string NormalForm::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")";
        for (const auto& g : w) out += "*" + g.to_string();
    }
    return out;
}

namespace {

// Family rank C < L < P < X; word factors admit nothing else.
int family_rank(GenKind k) {
    switch (k) {
        case GenKind::C: return 0;
        case GenKind::L: return 1;
        case GenKind::P: return 2;
        case GenKind::X: return 3;
        default:
            throw DomainError(std::string("word factor must be C, L, P or X, got ") +
                              kind_name(k));
    }
}

// True if adjacent factors (a, b) violate normal order and must be
// rewritten (includes the annihilating X_u X_u case).
bool out_of_order(const Generator& a, const Generator& b) {
    const int ra = family_rank(a.kind), rb = family_rank(b.kind);
    if (ra != rb) return ra > rb;
    if (a.i1 != b.i1) return a.i1 > b.i1;
    return a.kind == GenKind::X;  // equal X factors annihilate
}

}  // namespace

NormalForm normal_order(const Word& w, const AlgebraParams& p, SwapStrategy strategy) {
    for (const auto& g : w.factors) (void)family_rank(g.kind);  // validate

    NormalForm out;
    std::vector<Word> work;
    work.push_back(w);
    while (!work.empty()) {
        Word cur = std::move(work.back());
        work.pop_back();
        if (cur.coeff.is_zero()) continue;

        // Locate the swap position dictated by the strategy.
        std::optional<std::size_t> pos;
        const std::size_t len = cur.factors.size();
        if (strategy == SwapStrategy::leftmost) {
            for (std::size_t i = 0; i + 1 < len; ++i)
                if (out_of_order(cur.factors[i], cur.factors[i + 1])) {
                    pos = i;
                    break;
                }
        } else {
            for (std::size_t i = len; i >= 2; --i)
                if (out_of_order(cur.factors[i - 2], cur.factors[i - 1])) {
                    pos = i - 2;
                    break;
                }
        }
        if (!pos) {
            out.add(cur.factors, cur.coeff);
            continue;
        }

        const std::size_t i = *pos;
        const Generator a = cur.factors[i];
        const Generator b = cur.factors[i + 1];

        if (a.kind == GenKind::X && b.kind == GenKind::X && a.i1 == b.i1)
            continue;  // X_u X_u = 0: the whole word dies

        // Transposed word: ab → ±ba.
        {
            Word t = cur;
            std::swap(t.factors[i], t.factors[i + 1]);
            if (a.kind == GenKind::X && b.kind == GenKind::X) t.coeff = -t.coeff;
            work.push_back(std::move(t));
        }

        // Bracket corrections replace the pair by a single factor.
        const auto push_correction = [&](const Generator& g, const Rational& cf) {
            if (cf.is_zero()) return;
            Word t;
            t.factors.reserve(len - 1);
            t.factors.assign(cur.factors.begin(),
                             cur.factors.begin() + static_cast<std::ptrdiff_t>(i));
            t.factors.push_back(g);
            t.factors.insert(t.factors.end(),
                             cur.factors.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                             cur.factors.end());
            t.coeff = cur.coeff * GaussianRational(cf);
            work.push_back(std::move(t));
        };

        if (a.kind == GenKind::L && b.kind == GenKind::L) {
            // L_m L_n = L_n L_m + (m−n) L_{m+n} + δ (m³−m)/12 C
            const std::int64_t m = a.i1.whole(), n = b.i1.whole();
            push_correction(Generator::L(m + n), Rational(m - n));
            if (m + n == 0)
                push_correction(Generator::central(GenKind::C), Rational(m * (m * m - 1), 12));
        } else if (a.kind == GenKind::P && b.kind == GenKind::L) {
            // P_r L_m = L_m P_r − (m·l1 − r) P_{m+r}
            const std::int64_t m = b.i1.whole();
            push_correction(Generator::P(b.i1 + a.i1), -(m * p.l1 - a.i1).value());
        } else if (a.kind == GenKind::X && b.kind == GenKind::L) {
            // X_u L_m = L_m X_u − (m·l2 − u) X_{m+u}
            const std::int64_t m = b.i1.whole();
            push_correction(Generator::X(b.i1 + a.i1), -(m * p.l2 - a.i1).value());
        }
        // All remaining out-of-order pairs (PP, XP, *C) transpose freely.
    }
    return out;
}

NormalForm product(const NormalForm& a, const NormalForm& b, const AlgebraParams& p,
                   SwapStrategy strategy) {
    NormalForm out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w;
            w.factors.reserve(wa.size() + wb.size());
            w.factors = wa;
            w.factors.insert(w.factors.end(), wb.begin(), wb.end());
            w.coeff = ca * cb;
            out += normal_order(w, p, strategy);
        }
    return out;
}

NormalForm realize(const Generator& g_in) {
    const Canonical cn = canonicalize(g_in);
    NormalForm out;
    if (cn.sign == 0) return out;
    const Generator& g = cn.gen;
    const GaussianRational sgn(cn.sign);

    switch (g.kind) {
        case GenKind::C:
        case GenKind::L:
        case GenKind::P:
        case GenKind::X:
            out.add({g}, sgn);
            return out;
        case GenKind::P2:
            out.add({Generator::P(g.i1), Generator::P(g.i2)}, GaussianRational(2) * sgn);
            return out;
        case GenKind::X2:
            out.add({Generator::X(g.i1), Generator::X(g.i2)}, GaussianRational(2) * sgn);
            return out;
        case GenKind::T:
            out.add({Generator::P(g.i1), Generator::X(g.i2)}, GaussianRational(2) * sgn);
            return out;
        default:
            throw DomainError(std::string("central symbol ") + kind_name(g.kind) +
                              " has no enveloping-algebra realization");
    }
}

NormalForm color_bracket_uea(const Generator& a, const Generator& b,
                             const AlgebraParams& p) {
    const NormalForm ra = realize(a), rb = realize(b);
    const int dot = degree_unchecked(a.kind).dot(degree_unchecked(b.kind));
    NormalForm out = product(ra, rb, p);
    NormalForm ba = product(rb, ra, p);
    out -= (dot ? GaussianRational(-1) : GaussianRational(1)) * std::move(ba);
    return out;
}

RealizationReport verify_realization(const AlgebraParams& p, const Window& w) {
    if (p.extended)
        throw ParamError("realization verification runs on the non-extended algebra");

    RealizationReport rep;
    rep.params = p;
    rep.window = w;

    const std::vector<Generator> basis = window_basis(p, w);
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Generator& a = basis[i];
            const Generator& b = basis[j];
            ++rep.pairs_checked;

            const NormalForm got = color_bracket_uea(a, b, p);
            const Element abstract =
                bracket_elements(Element::unit(a), Element::unit(b), p);
            NormalForm expected;
            for (const auto& [g, c] : abstract.terms()) expected += c * realize(g);

            if (got != expected)
                rep.mismatches.push_back(RealizationMismatch{a, b, got, expected});
        }
    return rep;
}

}  // namespace colorvir
