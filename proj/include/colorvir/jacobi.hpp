// Exhaustive in-window verification of the graded Jacobi identity
//
//   (−1)^{a·c} ⟦a,⟦b,c⟧⟧ + (−1)^{b·a} ⟦b,⟦c,a⟧⟧ + (−1)^{c·b} ⟦c,⟦a,b⟧⟧ = 0.
//
// jacobi_residual computes the left-hand side exactly for one triple.
// verify_window sweeps every unordered in-window triple (repeated entries
// allowed) but asserts a triple only when all three inner brackets stay
// inside the window — escaping triples are counted and skipped, so the
// finite window can never fabricate a failure.

#pragma once

#include "colorvir/bracket.hpp"

#include <cstdint>
#include <vector>

namespace colorvir {

struct TripleFailure {
    Generator a, b, c;  // in basis enumeration order
    Element residual;   // nonzero by construction
};

struct JacobiReport {
    AlgebraParams params;
    Window window;
    std::uint64_t triples_checked = 0;  // residual computed and compared to 0
    std::uint64_t escaped = 0;          // skipped: an inner bracket left the window
    std::vector<TripleFailure> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

// Exact residual of the graded Jacobi identity for one homogeneous triple.
// Throws ParamError if a generator is invalid under p.
[[nodiscard]] Element jacobi_residual(const Generator& a, const Generator& b,
                                      const Generator& c, const AlgebraParams& p);

// Checks every unordered triple over window_basis(p, w).  The report is
// identical for every worker count: work is partitioned by the first basis
// index and results are merged back in index order.
[[nodiscard]] JacobiReport verify_window(const AlgebraParams& p, const Window& w,
                                         int workers = 1);

}  // namespace colorvir
