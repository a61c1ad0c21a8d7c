#include "colorvir/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>

namespace colorvir {

namespace {

using nlohmann::json;  // std::map-backed objects: keys always emitted sorted

// Long failure lists are capped in reports; the *Total fields keep the true
// counts so nothing is hidden.
constexpr std::size_t kMaxListed = 50;

const char* rho_name(RhoMode m) {
    return m == RhoMode::corrected ? "corrected" : "theorem-verbatim";
}

json window_json(const Window& w) {
    return json{{"mMax", w.m_max}, {"rMax", w.r_max.to_string()}, {"uMax", w.u_max.to_string()}};
}

json config_json(const AlgebraParams& p, std::uint64_t seed) {
    return json{{"l1", p.l1.to_string()},
                {"l2", p.l2.to_string()},
                {"extended", p.extended},
                {"rhoMode", rho_name(p.rho)},
                {"seed", seed}};
}

std::string envelope(const char* command, json config, bool ok, json result) {
    const json doc{{"schemaVersion", 1},
                   {"command", command},
                   {"config", std::move(config)},
                   {"ok", ok},
                   {"result", std::move(result)}};
    return doc.dump(2) + "\n";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string header(const char* command, const AlgebraParams& p, const Window& w) {
    return std::string(command) + "  " + p.to_string() + "  window " + w.to_string() + "\n";
}

}  // namespace

std::string render_report(const JacobiReport& r, ReportFormat f, std::uint64_t seed) {
    if (f == ReportFormat::json) {
        json fails = json::array();
        for (std::size_t i = 0; i < r.failures.size() && i < kMaxListed; ++i) {
            const TripleFailure& t = r.failures[i];
            fails.push_back(json{{"a", t.a.to_string()},
                                 {"b", t.b.to_string()},
                                 {"c", t.c.to_string()},
                                 {"residual", t.residual.to_string()}});
        }
        json config = config_json(r.params, seed);
        config["window"] = window_json(r.window);
        return envelope("jacobi", std::move(config), r.ok(),
                        json{{"triplesChecked", r.triples_checked},
                             {"escaped", r.escaped},
                             {"failures", std::move(fails)},
                             {"failuresTotal", r.failures.size()}});
    }
    std::string out = header("jacobi", r.params, r.window);
    out += "  triples checked : " + std::to_string(r.triples_checked) + "\n";
    out += "  escaped window  : " + std::to_string(r.escaped) + "\n";
    out += "  failures        : " + std::to_string(r.failures.size()) + "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < kMaxListed; ++i) {
        const TripleFailure& t = r.failures[i];
        out += "    (" + t.a.to_string() + ", " + t.b.to_string() + ", " + t.c.to_string() +
               ")  residual " + t.residual.to_string() + "\n";
    }
    if (r.failures.size() > kMaxListed)
        out += "    ... " + std::to_string(r.failures.size() - kMaxListed) + " more\n";
    out += r.ok() ? "  identity holds on every checked triple\n" : "  IDENTITY VIOLATED\n";
    return out;
}

std::string render_report(const ClassifyBundle& r, ReportFormat f, std::uint64_t seed) {
    const ExtensionReport& rep = r.report;
    const bool ok = rep.theorem_match() && r.basis_verified;
    if (f == ReportFormat::json) {
        json sectors = json::array();
        for (const SectorSolution& s : rep.sectors) {
            sectors.push_back(json{{"sector", s.sector.to_string()},
                                   {"cocycleDim", s.cocycle_dim},
                                   {"coboundaryRank", s.coboundary_rank},
                                   {"quotientDim", s.quotient_dim},
                                   {"unknowns", s.unknowns.size()},
                                   {"theoremMatch", s.theorem_match}});
        }
        json rows = json::array();
        for (const StabilizationRow& row : r.stabilization.rows) {
            rows.push_back(json{{"window", window_json(row.window)},
                                {"dims", row.dims},
                                {"total", row.total}});
        }
        json config = config_json(rep.params, seed);
        json windows = json::array();
        for (const StabilizationRow& row : r.stabilization.rows)
            windows.push_back(window_json(row.window));
        config["windows"] = std::move(windows);
        return envelope("classify", std::move(config), ok,
                        json{{"window", window_json(rep.window)},
                             {"sectors", std::move(sectors)},
                             {"totalQuotientDim", rep.total_quotient_dim()},
                             {"theoremMatch", rep.theorem_match()},
                             {"basisVerified", r.basis_verified},
                             {"stabilization",
                              json{{"rows", std::move(rows)},
                                   {"stableFrom", r.stabilization.stable_from}}}});
    }
    std::string out = header("classify", rep.params, rep.window);
    for (const SectorSolution& s : rep.sectors) {
        out += "  sector " + s.sector.to_string() + ": cocycle " +
               std::to_string(s.cocycle_dim) + "  coboundary " +
               std::to_string(s.coboundary_rank) + "  quotient " +
               std::to_string(s.quotient_dim) + "  closed form: " + yesno(s.theorem_match) +
               "\n";
    }
    out += "  total quotient dimension : " + std::to_string(rep.total_quotient_dim()) + "\n";
    out += "  closed-form basis spans  : " + yesno(r.basis_verified) + "\n";
    out += "  stabilization:";
    for (const StabilizationRow& row : r.stabilization.rows)
        out += "  m<=" + std::to_string(row.window.m_max) + " -> " + std::to_string(row.total);
    out += "  (stable from row " + std::to_string(r.stabilization.stable_from) + ")\n";
    out += ok ? "  dimensions and basis agree with the closed-form table\n"
              : "  MISMATCH against the closed-form table\n";
    return out;
}

std::string render_report(const RealizationReport& r, ReportFormat f, std::uint64_t seed) {
    if (f == ReportFormat::json) {
        json mism = json::array();
        for (std::size_t i = 0; i < r.mismatches.size() && i < kMaxListed; ++i) {
            const RealizationMismatch& m = r.mismatches[i];
            mism.push_back(json{{"a", m.a.to_string()},
                                {"b", m.b.to_string()},
                                {"got", m.got.to_string()},
                                {"expected", m.expected.to_string()}});
        }
        json config = config_json(r.params, seed);
        config["window"] = window_json(r.window);
        return envelope("realize", std::move(config), r.ok(),
                        json{{"pairsChecked", r.pairs_checked},
                             {"mismatches", std::move(mism)},
                             {"mismatchesTotal", r.mismatches.size()}});
    }
    std::string out = header("realize", r.params, r.window);
    out += "  pairs checked : " + std::to_string(r.pairs_checked) + "\n";
    out += "  mismatches    : " + std::to_string(r.mismatches.size()) + "\n";
    for (std::size_t i = 0; i < r.mismatches.size() && i < kMaxListed; ++i) {
        const RealizationMismatch& m = r.mismatches[i];
        out += "    (" + m.a.to_string() + ", " + m.b.to_string() + ")\n";
        out += "      got      " + m.got.to_string() + "\n";
        out += "      expected " + m.expected.to_string() + "\n";
    }
    out += r.ok() ? "  quadratic realization reproduces the bracket table\n"
                  : "  REALIZATION DISAGREES\n";
    return out;
}

std::string render_report(const InvolutionReport& r, ReportFormat f, std::uint64_t seed) {
    if (f == ReportFormat::json) {
        json centrals = json::array();
        for (GenKind k : r.centrals_seen) centrals.push_back(kind_name(k));
        json fails = json::array();
        for (std::size_t i = 0; i < r.failures.size() && i < kMaxListed; ++i)
            fails.push_back(r.failures[i]);
        json config = config_json(r.params, seed);
        config["window"] = window_json(r.window);
        config["kind"] = to_string(r.kind);
        return envelope("involutions", std::move(config), r.ok(),
                        json{{"kind", to_string(r.kind)},
                             {"degreePreserved", r.degree_preserved},
                             {"antilinear", r.antilinear},
                             {"bracketCompatible", r.bracket_compatible},
                             {"involutive", r.involutive},
                             {"generatorsChecked", r.generators_checked},
                             {"pairsChecked", r.pairs_checked},
                             {"samplesChecked", r.samples_checked},
                             {"centralsSeen", std::move(centrals)},
                             {"failures", std::move(fails)}});
    }
    std::string out = header(("involutions (" + to_string(r.kind) + ")").c_str(), r.params,
                             r.window);
    out += "  degree preserved    : " + yesno(r.degree_preserved) + "\n";
    out += "  antilinear          : " + yesno(r.antilinear) + "\n";
    out += "  bracket compatible  : " + yesno(r.bracket_compatible) + "\n";
    out += "  involutive          : " + yesno(r.involutive) + "\n";
    out += "  generators / pairs / samples : " + std::to_string(r.generators_checked) + " / " +
           std::to_string(r.pairs_checked) + " / " + std::to_string(r.samples_checked) + "\n";
    out += "  central symbols seen:";
    for (GenKind k : r.centrals_seen) out += std::string(" ") + kind_name(k);
    out += "\n";
    for (const std::string& s : r.failures) out += "    " + s + "\n";
    out += r.ok() ? "  all four conditions hold\n" : "  CONDITION VIOLATED\n";
    return out;
}

}  // namespace colorvir
