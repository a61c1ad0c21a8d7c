// Algebra parameters (the two spin weights), extension switches, and the
// finite mode window used to truncate the infinite basis for exhaustive
// verification.

#pragma once

#include "colorvir/halfint.hpp"

#include <stdexcept>
#include <string>

namespace colorvir {

// Invalid parameters / invalid generator-parameter combinations.  The CLI
// maps this to its usage-error exit code.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requests outside an operation's mathematical domain (e.g. a UEA
// realization of a central charge, or a superadjoint at weights where none
// exists).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation mode for the ρ central function on the (P_{rs}, X_u) pair.
// `corrected` is the self-consistent table (ρ = −2·κ_S); `theorem_verbatim`
// evaluates the inconsistent published variant (∝ c_{κA}, antisymmetric in
// r,s) at the canonical stored index order, so the Jacobi verifier can
// exhibit exactly where it breaks.
enum class RhoMode { corrected, theorem_verbatim };

struct AlgebraParams {
    HalfInt l1;                          // weight of the even P family
    HalfInt l2;                          // weight of the odd X family
    bool extended = false;               // central extension switched on
    RhoMode rho = RhoMode::corrected;

    AlgebraParams() = default;
    AlgebraParams(HalfInt l1_, HalfInt l2_, bool ext = false,
                  RhoMode mode = RhoMode::corrected)
        : l1(l1_), l2(l2_), extended(ext), rho(mode) {
        if (l1.twice() < 0 || l2.twice() < 0)
            throw ParamError("spin weights must be non-negative");
    }

    [[nodiscard]] std::string to_string() const {
        return "(l1=" + l1.to_string() + ", l2=" + l2.to_string() +
               (extended ? ", extended" : "") + ")";
    }
};

// Truncation box: L modes bounded by m_max, P-type indices by r_max, X-type
// indices by u_max.  Composite generators are in-window iff both their
// indices are within bounds; central symbols are always in-window.
struct Window {
    std::int64_t m_max = 1;
    HalfInt r_max;
    HalfInt u_max;

    static Window cube(std::int64_t n) {
        Window w;
        w.m_max = n;
        w.r_max = HalfInt(n);
        w.u_max = HalfInt(n);
        return w;
    }

    [[nodiscard]] std::string to_string() const {
        return "[m<=" + std::to_string(m_max) + ", r<=" + r_max.to_string() +
               ", u<=" + u_max.to_string() + "]";
    }
};

}  // namespace colorvir
