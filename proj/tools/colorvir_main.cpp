// Command-line front end: jacobi / classify / realize / involutions.
//
// Exit codes: 0 = the checked property holds, 1 = a mathematical failure
// was detected and reported, 2 = unusable parameters or flags.

#include "CLI11.hpp"

#include "colorvir/report.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace colorvir;

namespace {

struct Options {
    std::string l1 = "0";
    std::string l2 = "0";
    bool extended = false;
    std::string rho = "corrected";
    std::string format = "table";
    std::string output;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = one per available core
    std::int64_t window = 4;
    std::vector<std::int64_t> windows;
    std::string kind = "adjoint";
};

HalfInt parse_weight(const std::string& text, const char* flag) {
    const auto h = HalfInt::parse(text);
    if (!h)
        throw ParamError(std::string(flag) + ": '" + text +
                         "' is not a half-integer spin value");
    if (h->twice() < 0) throw ParamError(std::string(flag) + ": spin must be non-negative");
    return *h;
}

AlgebraParams params_of(const Options& o) {
    const RhoMode mode =
        o.rho == "theorem-verbatim" ? RhoMode::theorem_verbatim : RhoMode::corrected;
    return AlgebraParams(parse_weight(o.l1, "--l1"), parse_weight(o.l2, "--l2"), o.extended,
                         mode);
}

Window window_of(std::int64_t n) {
    if (n < 1) throw ParamError("--window: must be at least 1");
    return Window::cube(n);
}

int worker_count(const Options& o) {
    if (o.workers > 0) return o.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ReportFormat format_of(const Options& o) {
    return o.format == "json" ? ReportFormat::json : ReportFormat::table;
}

void emit(const std::string& doc, const Options& o) {
    if (o.output.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw ParamError("--output: cannot open '" + o.output + "' for writing");
    out << doc;
}

int cmd_jacobi(const Options& o) {
    const JacobiReport r = verify_window(params_of(o), window_of(o.window), worker_count(o));
    emit(render_report(r, format_of(o), o.seed), o);
    return r.ok() ? 0 : 1;
}

int cmd_classify(const Options& o) {
    const AlgebraParams p = params_of(o);
    std::vector<std::int64_t> sizes = o.windows;
    if (sizes.empty()) sizes.push_back(o.window);
    std::vector<Window> ws;
    ws.reserve(sizes.size());
    for (std::int64_t n : sizes) ws.push_back(window_of(n));

    ClassifyBundle bundle;
    bundle.stabilization = stabilization_scan(p, ws);  // validates the window list
    bundle.report = classify(p, ws.back());
    bundle.basis_verified = verify_theorem_basis(p, ws.back());
    emit(render_report(bundle, format_of(o), o.seed), o);
    return bundle.report.theorem_match() && bundle.basis_verified ? 0 : 1;
}

int cmd_realize(const Options& o) {
    AlgebraParams p = params_of(o);
    p.extended = false;  // the quadratic realization covers the unextended table
    const RealizationReport r = verify_realization(p, window_of(o.window));
    emit(render_report(r, format_of(o), o.seed), o);
    return r.ok() ? 0 : 1;
}

int cmd_involutions(const Options& o) {
    const InvolutionKind kind = o.kind == "superadjoint" ? InvolutionKind::superadjoint
                                                         : InvolutionKind::adjoint;
    const InvolutionReport r =
        verify_involution(kind, params_of(o), window_of(o.window), o.seed);
    emit(render_report(r, format_of(o), o.seed), o);
    return r.ok() ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o, bool with_windows_list, bool with_kind) {
    cmd->add_option("--l1", o.l1, "Weight of the even density family (fraction, e.g. 1/2)");
    cmd->add_option("--l2", o.l2, "Weight of the odd density family (fraction, e.g. 3/2)");
    cmd->add_flag("--extended", o.extended, "Include the central extension charges");
    cmd->add_option("--rho-mode", o.rho, "Table variant for the (P2,X) central component")
        ->check(CLI::IsMember({"corrected", "theorem-verbatim"}));
    cmd->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--output", o.output, "Write the report to a file instead of stdout");
    cmd->add_option("--seed", o.seed, "Seed for randomized property samples");
    cmd->add_option("--workers", o.workers, "Parallel workers (0 = one per core)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--window", o.window, "Mode-index cutoff |m|,|r|,|u| <= N")
        ->check(CLI::PositiveNumber);
    if (with_windows_list)
        cmd->add_option("--windows", o.windows,
                        "Comma-separated growing cutoff list, e.g. 4,5,6")
            ->delimiter(',');
    if (with_kind)
        cmd->add_option("--kind", o.kind, "Which involution to verify")
            ->check(CLI::IsMember({"adjoint", "superadjoint"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tools for the color superalgebra engine"};
    app.require_subcommand(1);

    Options o;
    CLI::App* jac = app.add_subcommand("jacobi", "Verify the graded Jacobi identity");
    CLI::App* cls = app.add_subcommand("classify", "Classify central extensions");
    CLI::App* rea = app.add_subcommand("realize", "Check the quadratic realization");
    CLI::App* inv = app.add_subcommand("involutions", "Verify an involution");
    add_common(jac, o, false, false);
    add_common(cls, o, true, false);
    add_common(rea, o, false, false);
    add_common(inv, o, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (jac->parsed()) return cmd_jacobi(o);
        if (cls->parsed()) return cmd_classify(o);
        if (rea->parsed()) return cmd_realize(o);
        return cmd_involutions(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
