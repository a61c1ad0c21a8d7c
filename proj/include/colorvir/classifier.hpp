// Exact classification of the degree-homogeneous central extensions of the
// windowed algebra, sector by sector.
//
// For a fixed sector d ∈ (ℤ₂)² a 2-cochain assigns a scalar ω(a,b) to every
// pair of basis generators with deg(a)+deg(b) = d, subject to the graded
// antisymmetry ω(b,a) = −(−1)^{deg(a)·deg(b)} ω(a,b).  We therefore store one
// unknown per *canonical* pair (a ≤ b in generator order; the self-pair (a,a)
// only when deg(a)·deg(a) is odd, otherwise antisymmetry forces ω(a,a) = 0).
// Since the bracket preserves the total mode index and every admissible
// central function is supported on index sum zero, the unknowns are further
// restricted to pairs with total index 0 — cochain components away from that
// support decouple from every constraint and carry no cohomology.
//
// The 2-cocycle condition comes from the graded Jacobi identity of the
// centrally extended bracket ⟦a,b⟧ + ω(a,b)·z with z central of degree d:
//
//   (−1)^{deg(a)·deg(c)} ω(a,⟦b,c⟧) + (−1)^{deg(b)·deg(a)} ω(b,⟦c,a⟧)
//                                   + (−1)^{deg(c)·deg(b)} ω(c,⟦a,b⟧) = 0.
//
// One linear constraint row is assembled per in-window triple (a,b,c) of
// total degree d and total index 0 whose inner brackets stay inside the
// window; a triple whose inner bracket escapes the window would reference
// unknowns outside the stored space, so that row is dropped.  The baseline
// bracket is the *non-extended* table with the Virasoro charge stripped.
//
// Coboundaries: redefining g ↦ g + f(g)·z shifts ω by δf(a,b) = f(⟦a,b⟧).
// One coboundary vector is produced per in-window index-0 generator g of
// degree d, with entries (δf_g)(a,b) = coefficient of g in ⟦a,b⟧.
//
// Everything is solved exactly over ℚ (GMP rationals) by a sparse
// fraction-free reduced row echelon form.  Both the constraint rows and the
// unknowns split into independent blocks by their (P-family, X-family)
// content, since the bracket preserves the content bi-grading; the solver
// works block by block, which keeps the elimination small, and the assembled
// rows and resulting ranks are identical to the unblocked system.
//
// Quotient representatives are chosen inside the cocycle kernel orthogonal
// (standard rational dot) to the coboundary span: because coboundary vectors
// are themselves cocycles and the form is positive definite over ℚ, the
// orthogonal complement maps isomorphically onto the quotient.  Each
// representative is normalized to a primitive integer vector whose first
// nonzero entry (in unknown order) is positive.
//
// verify_theorem_basis checks the closed-form extension table against the
// computed spaces: for every sector the vectors obtained by reading one
// central symbol's coefficient off the extended bracket (corrected ρ) must
// (a) satisfy every constraint row, (b) be linearly independent modulo the
// coboundary span, and (c) together with the coboundaries span the whole
// cocycle kernel.

#pragma once

#include "colorvir/bracket.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace colorvir {

// One canonical unknown: an unordered pair of structural generators, stored
// with a ≤ b in generator order.
struct CochainPair {
    Generator a, b;

    friend bool operator==(const CochainPair& x, const CochainPair& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const CochainPair& x, const CochainPair& y) {
        return x.a == y.a ? x.b < y.b : x.a < y.a;
    }
    [[nodiscard]] std::string to_string() const;
};

// Sparse vector/row over unknown indices, sorted by index, exact entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

// The assembled linear system for one sector.
struct CocycleSystem {
    AlgebraParams params;  // as given; the baseline bracket ignores `extended`
    Window window;
    Degree sector;
    std::vector<CochainPair> unknowns;   // sorted by pair order
    std::vector<SparseRow> constraints;  // deduplicated, normalized, sorted
    std::vector<SparseRow> coboundaries; // one per in-window index-0 generator
                                         // of degree = sector (zero rows kept)
};

struct SolveResult {
    std::int64_t cocycle_dim = 0;     // dim ker(constraints)
    std::int64_t coboundary_rank = 0; // rank of the coboundary span
    std::int64_t quotient_dim = 0;    // cocycle_dim − coboundary_rank
    // Basis of the quotient inside the cocycle kernel, orthogonal to all
    // coboundaries; primitive integer entries, first nonzero positive.
    std::vector<SparseRow> representatives;
};

struct SectorSolution {
    Degree sector;
    std::int64_t cocycle_dim = 0;
    std::int64_t coboundary_rank = 0;
    std::int64_t quotient_dim = 0;
    std::vector<CochainPair> unknowns;
    std::vector<SparseRow> representatives;
    bool theorem_match = false;
};

struct ExtensionReport {
    AlgebraParams params;
    Window window;
    std::array<SectorSolution, 4> sectors;  // in all_degrees() order

    [[nodiscard]] std::int64_t total_quotient_dim() const {
        std::int64_t t = 0;
        for (const auto& s : sectors) t += s.quotient_dim;
        return t;
    }
    [[nodiscard]] bool theorem_match() const {
        for (const auto& s : sectors)
            if (!s.theorem_match) return false;
        return true;
    }
};

// Assembles unknowns, constraint rows and coboundary vectors for one sector.
[[nodiscard]] CocycleSystem build_system(const AlgebraParams& p, const Window& w, Degree sector);

// Exact elimination.  quotient_dim = cocycle_dim − coboundary_rank holds by
// construction (both ranks are computed inside the same windowed space).
[[nodiscard]] SolveResult solve(const CocycleSystem& sys);

// Full run over all four sectors, including the closed-form comparison.
[[nodiscard]] ExtensionReport classify(const AlgebraParams& p, const Window& w);

// True iff the closed-form central table passes checks (a), (b), (c) above
// in every sector at this window.
[[nodiscard]] bool verify_theorem_basis(const AlgebraParams& p, const Window& w);

// Quotient dimensions per sector across a strictly growing list of windows.
struct StabilizationRow {
    Window window;
    std::array<std::int64_t, 4> dims{};  // per sector, all_degrees() order
    std::int64_t total = 0;
};
struct StabilizationTable {
    std::vector<StabilizationRow> rows;
    // Index into rows of the smallest window from which every sector
    // dimension stays constant through the last window; -1 if the dimensions
    // are still moving at the end of the scan.
    int stable_from = -1;
};
[[nodiscard]] StabilizationTable stabilization_scan(const AlgebraParams& p,
                                                    const std::vector<Window>& windows);

}  // namespace colorvir
