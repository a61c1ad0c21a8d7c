// Finite linear combinations of generators with Gaussian-rational
// coefficients.  Terms are kept sorted by the global generator order with
// composite indices canonicalized and zero coefficients dropped, so equality
// is plain term-by-term comparison.

#pragma once

#include "colorvir/generator.hpp"
#include "colorvir/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace colorvir {

class Element {
public:
    using Term = std::pair<Generator, GaussianRational>;

    Element() = default;

    static Element unit(const Generator& g) { return term(g, GaussianRational(1)); }

    static Element term(const Generator& g, const GaussianRational& c) {
        Element e;
        e.add_term(g, c);
        return e;
    }

    // Adds c·g, canonicalizing g (index reordering may flip the sign or
    // annihilate the term) and merging with an existing term.
    void add_term(const Generator& g, const GaussianRational& c) {
        if (c.is_zero()) return;
        const Canonical cn = canonicalize(g);
        if (cn.sign == 0) return;
        const GaussianRational coeff = cn.sign < 0 ? -c : c;
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), cn.gen,
            [](const Term& t, const Generator& key) { return t.first < key; });
        if (it != terms_.end() && it->first == cn.gen) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, Term{cn.gen, coeff});
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }

    Element& operator-=(const Element& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_) c *= s;
        return *this;
    }
    friend Element operator*(const GaussianRational& s, Element e) { return e *= s; }

    // Conjugates every coefficient (generators untouched) — the scalar half
    // of an antilinear map.
    [[nodiscard]] Element conjugate_scalars() const {
        Element e;
        e.terms_.reserve(terms_.size());
        for (const auto& [g, c] : terms_) e.terms_.emplace_back(g, c.conj());
        return e;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

    [[nodiscard]] GaussianRational coeff(const Generator& g) const {
        const Canonical cn = canonicalize(g);
        if (cn.sign == 0) return {};
        for (const auto& [h, c] : terms_)
            if (h == cn.gen) return cn.sign < 0 ? -c : c;
        return {};
    }

    // The common degree of all terms, or nullopt for 0 or mixed elements.
    [[nodiscard]] std::optional<Degree> homogeneous_degree(const AlgebraParams& p) const {
        if (terms_.empty()) return std::nullopt;
        const Degree d = degree_of(terms_.front().first, p);
        for (const auto& [g, c] : terms_)
            if (degree_of(g, p) != d) return std::nullopt;
        return d;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            if (c == GaussianRational(1))
                out += g.to_string();
            else
                out += "(" + c.to_string() + ")*" + g.to_string();
        }
        return out;
    }

private:
    std::vector<Term> terms_;
};

}  // namespace colorvir
