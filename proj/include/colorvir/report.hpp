// Deterministic JSON and plain-text rendering of the engine reports.
//
// JSON documents carry a top-level "schemaVersion": 1, sort their keys, and
// echo the configuration that produced them (weights, window, mode flags,
// seed) — so a report is a reusable test fixture: identical configuration
// yields byte-identical bytes.  Worker counts are deliberately not echoed;
// results may never depend on them.

#pragma once

#include "colorvir/classifier.hpp"
#include "colorvir/involution.hpp"
#include "colorvir/jacobi.hpp"
#include "colorvir/uea.hpp"

#include <cstdint>
#include <string>

namespace colorvir {

enum class ReportFormat : std::uint8_t { json, table };

// Everything the classify command computes in one pass: the solution at the
// largest requested window, the closed-form basis check there, and the
// dimension trace across all requested windows.
struct ClassifyBundle {
    ExtensionReport report;
    bool basis_verified = false;
    StabilizationTable stabilization;
};

// Each renderer returns a complete document including the trailing newline.
[[nodiscard]] std::string render_report(const JacobiReport& r, ReportFormat f,
                                        std::uint64_t seed);
[[nodiscard]] std::string render_report(const ClassifyBundle& r, ReportFormat f,
                                        std::uint64_t seed);
[[nodiscard]] std::string render_report(const RealizationReport& r, ReportFormat f,
                                        std::uint64_t seed);
[[nodiscard]] std::string render_report(const InvolutionReport& r, ReportFormat f,
                                        std::uint64_t seed);

}  // namespace colorvir
