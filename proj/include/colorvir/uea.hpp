// Normal-ordered computation in the enveloping algebra of the underlying
// algebra on {C, L, P, X}, and the realization of the composite generators
// as quadratic elements:
//
//   P_{rs} → 2 P_r P_s,   X_{uv} → 2 X_u X_v,   T_{ru} → 2 P_r X_u.
//
// Relations used as rewrite rules (normal order C < L < P < X, indices
// ascending, X strictly):
//   L_m L_n  = L_n L_m + (m−n) L_{m+n} + δ_{m+n,0} (m³−m)/12 · C   (m > n)
//   P_r L_m  = L_m P_r − (m·l1 − r) P_{m+r}
//   X_u L_m  = L_m X_u − (m·l2 − u) X_{m+u}
//   P_r P_s  = P_s P_r,   X_u P_r = P_r X_u        (free transpositions)
//   X_u X_v  = −X_v X_u,  X_u X_u = 0
//   C commutes with everything.
//
// The graded commutator of two realizations, with the sign taken from the
// four-degree dot product, reproduces the whole abstract bracket table —
// verify_realization checks that equality pair by pair over a window.

#pragma once

#include "colorvir/bracket.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace colorvir {

// A product of single-index generators (kinds C, L, P, X only).
using WordFactors = std::vector<Generator>;

struct Word {
    WordFactors factors;
    GaussianRational coeff{1};
};

// Which admissible adjacent swap to rewrite first.  Any choice yields the
// same normal form; exposing both extremes makes confluence testable.
enum class SwapStrategy { leftmost, rightmost };

// A linear combination of normal-ordered words, zero coefficients dropped.
class NormalForm {
public:
    NormalForm() = default;

    void add(const WordFactors& w, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NormalForm& operator+=(const NormalForm& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }

    NormalForm& operator-=(const NormalForm& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }

    NormalForm& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend NormalForm operator*(const GaussianRational& s, NormalForm f) { return f *= s; }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<WordFactors, GaussianRational>& terms() const {
        return terms_;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const;

private:
    std::map<WordFactors, GaussianRational> terms_;
};

// Rewrites w into its unique normal form.  Throws DomainError if a factor
// is not a single-index generator.
[[nodiscard]] NormalForm normal_order(const Word& w, const AlgebraParams& p,
                                      SwapStrategy strategy = SwapStrategy::leftmost);

// Product of two normal forms (concatenate word-by-word, then reorder).
[[nodiscard]] NormalForm product(const NormalForm& a, const NormalForm& b,
                                 const AlgebraParams& p,
                                 SwapStrategy strategy = SwapStrategy::leftmost);

// The quadratic realization of a generator.  C maps to the single-factor C
// word; the other central symbols have no realization (DomainError).
[[nodiscard]] NormalForm realize(const Generator& g);

// realize(a)·realize(b) − (−1)^{deg a · deg b} realize(b)·realize(a).
[[nodiscard]] NormalForm color_bracket_uea(const Generator& a, const Generator& b,
                                           const AlgebraParams& p);

struct RealizationMismatch {
    Generator a, b;
    NormalForm got;       // graded commutator of the realizations
    NormalForm expected;  // realization of the abstract bracket
};

struct RealizationReport {
    AlgebraParams params;
    Window window;
    std::uint64_t pairs_checked = 0;
    std::vector<RealizationMismatch> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

// Checks the realization against the abstract table for every unordered
// in-window pair.  Requires extended = false (the central extension is not
// realized).
[[nodiscard]] RealizationReport verify_realization(const AlgebraParams& p, const Window& w);

}  // namespace colorvir
