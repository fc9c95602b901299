#pragma once

// Command-line front end.  run() is the whole program (testable in-process);
// tools/oloa_main.cpp only forwards argv.  Text output carries no timing so
// repeated runs are byte-identical; elapsed_ms appears in JSON only.
//
// Exit codes: 0 success (and all verifications passed), 1 at least one
// verification failed, 2 usage or evaluation error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oloa/format.hpp"
#include "oloa/gmo.hpp"
#include "oloa/registry.hpp"

namespace oloa::cli {

namespace detail {

inline std::string short_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline std::string sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Default tolerances, with the OLOA_ABS_TOL override applied when the
// variable holds a positive number (anything else is ignored).
inline double env_abs_tol(double fallback) {
    const char* raw = std::getenv("OLOA_ABS_TOL");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(v) || v <= 0.0)
        return fallback;
    return v;
}

inline QuadConfig base_quad() {
    QuadConfig q;
    q.abs_tol = env_abs_tol(q.abs_tol);
    return q;
}

inline void print_m(std::ostream& out, double a, const MResult& r,
                    const char* tag) {
    out << "m(" << short_num(a) << ")" << tag << " = "
        << format_significant(r.value) << " [" << branch_name(r.branch) << "]\n";
}

inline int run_eval(std::ostream& out, const std::string& what, double a,
                    const std::string& method) {
    QuadConfig quad = base_quad();
    if (what == "m") {
        if (method == "direct" || method == "both")
            print_m(out, a, m_direct(a, quad), method == "both" ? " direct" : "");
        if (method == "closed" || method == "both")
            print_m(out, a, m_closed(a, quad), method == "both" ? " closed" : "");
        if (method == "both") {
            double d = std::fabs(m_direct(a, quad).value - m_closed(a, quad).value);
            out << "abs_diff = " << sci(d) << "\n";
        }
        return 0;
    }
    double direct = 0.0, closed = 0.0;
    if (method == "direct" || method == "both")
        direct = l_direct(a, quad).value;
    if (method == "closed" || method == "both")
        closed = m_closed(a, quad).value - constant(Constant::Gamma) / a;
    if (method != "closed")
        out << "l(" << short_num(a) << ")"
            << (method == "both" ? " direct" : "") << " = "
            << format_significant(direct) << "\n";
    if (method != "direct")
        out << "l(" << short_num(a) << ")"
            << (method == "both" ? " closed" : "") << " = "
            << format_significant(closed) << "\n";
    if (method == "both")
        out << "abs_diff = " << sci(std::fabs(direct - closed)) << "\n";
    return 0;
}

inline void print_verdict_text(std::ostream& out, const Verdict& v) {
    char head[64];
    std::snprintf(head, sizeof head, "%s %-14s", v.pass ? "PASS" : "FAIL",
                  v.id.c_str());
    out << head << " discrepancy=" << sci(v.discrepancy) << " tol=";
    char tol[32];
    std::snprintf(tol, sizeof tol, "%g", v.tol);
    out << tol;
    if (!v.note.empty()) out << " (" << v.note << ")";
    out << "\n";
}

inline int run_verify(std::ostream& out, const std::string& id, bool json,
                      const VerifyConfig& cfg) {
    if (!id.empty()) {
        Verdict v = verify(id, cfg);
        if (json) {
            out << to_json(v).dump(2) << "\n";
        } else {
            print_verdict_text(out, v);
            out << "passed " << (v.pass ? 1 : 0) << "/1\n";
        }
        return v.pass ? 0 : 1;
    }
    Report r = verify_all(cfg);
    if (json) {
        out << to_json(r).dump(2) << "\n";
    } else {
        for (const Verdict& v : r.results) print_verdict_text(out, v);
        out << "passed " << r.passed << "/" << r.total << "\n";
    }
    return r.failed == 0 ? 0 : 1;
}

inline int run_table(std::ostream& out, std::ostream& err, double from,
                     double to, double step, bool include_cusp,
                     const std::string& out_path) {
    if (!(from > 0.0) || !(to >= from)) {
        err << "error: table requires 0 < from <= to\n";
        return 2;
    }
    std::vector<double> grid;
    long n = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) grid.push_back(from + static_cast<double>(i) * step);
    if (include_cusp && from < kLnTwo && kLnTwo < to) {
        bool present = std::any_of(grid.begin(), grid.end(), [](double a) {
            return std::fabs(a - kLnTwo) <= 1e-12;
        });
        if (!present) {
            grid.push_back(kLnTwo);
            std::sort(grid.begin(), grid.end());
        }
    }
    QuadConfig quad = base_quad();
    std::string body = "a,m_direct,m_closed,branch,abs_diff\n";
    for (double a : grid) {
        MResult d = m_direct(a, quad);
        MResult c = m_closed(a, quad);
        body += short_num(a);
        body += ",";
        body += format_significant(d.value);
        body += ",";
        body += format_significant(c.value);
        body += ",";
        body += branch_name(branch_of(a));
        body += ",";
        body += sci(std::fabs(d.value - c.value));
        body += "\n";
    }
    if (out_path.empty()) {
        out << body;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    f << body;
    return 0;
}

inline int run_jump(std::ostream& out) {
    QuadConfig quad = base_quad();
    CuspSlopes s = mprime_slopes(quad);
    out << "left = " << format_significant(s.left.value) << "\n";
    out << "right = " << format_significant(s.right.value) << "\n";
    out << "jump = " << format_significant(s.left.value - s.right.value) << "\n";
    return 0;
}

inline int run_catalog(std::ostream& out) {
    for (const Identity& ident : list_identities()) {
        char head[40];
        std::snprintf(head, sizeof head, "%-14s tol=%-6g ", ident.id.c_str(),
                      ident.tol);
        out << head << ident.reference << "\n";
    }
    return 0;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Glasser-Manna-Oloa integral toolkit"};
    app.name("oloa");
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate m(a) or l(a)");
    std::string what, method = "direct";
    double a = 0.0;
    eval->add_option("what", what, "quantity: m or l")
        ->required()
        ->check(CLI::IsMember({"m", "l"}));
    eval->add_option("a", a, "argument a")->required();
    eval->add_option("--method", method, "direct, closed or both")
        ->check(CLI::IsMember({"direct", "closed", "both"}));

    auto* verify_cmd = app.add_subcommand("verify", "check catalog identities");
    bool all = false;
    std::string id, format = "text";
    double rel_tol = QuadConfig{}.rel_tol;
    double abs_tol = detail::env_abs_tol(QuadConfig{}.abs_tol);
    verify_cmd->add_flag("--all", all, "verify the whole catalog (default)");
    auto* id_opt = verify_cmd->add_option("--id", id, "verify a single identity");
    verify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);
    id_opt->excludes("--all");

    auto* table = app.add_subcommand("table", "CSV table of m(a) on a grid");
    double from = 0.0, to = 0.0, step = 0.0;
    bool include_cusp = false;
    std::string out_path;
    table->add_option("--from", from, "first grid point")->required();
    table->add_option("--to", to, "last grid point")->required();
    table->add_option("--step", step, "grid spacing")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_flag("--include-cusp", include_cusp,
                    "insert a = ln 2 when inside the range");
    table->add_option("--out", out_path, "write CSV to a file instead of stdout");

    auto* jump = app.add_subcommand("jump", "one-sided slopes of m at ln 2");
    auto* catalog = app.add_subcommand("catalog", "list the identity catalog");
    (void)jump;
    (void)catalog;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return detail::run_eval(out, what, a, method);
        if (verify_cmd->parsed()) {
            VerifyConfig cfg;
            cfg.quad.rel_tol = rel_tol;
            cfg.quad.abs_tol = abs_tol;
            cfg.series.target_abs_err = std::max(abs_tol, 1e-14);
            return detail::run_verify(out, id, format == "json", cfg);
        }
        if (table->parsed())
            return detail::run_table(out, err, from, to, step, include_cusp, out_path);
        if (jump->parsed()) return detail::run_jump(out);
        return detail::run_catalog(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace oloa::cli
