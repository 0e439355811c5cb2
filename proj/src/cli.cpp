#include "tn3/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tn3/docio.hpp"
#include "tn3/geodesic.hpp"
#include "tn3/shape.hpp"
#include "tn3/tables.hpp"

namespace tn3 {

namespace {

constexpr int kExitParse = 64;
constexpr int kExitPrecondition = 65;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError(path, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

TransnormalDescriptor load(const std::string& path) {
    return parse_descriptor(read_file(path));
}

int check_valid(const TransnormalDescriptor& d, std::ostream& out) {
    auto violations = validate_descriptor(d);
    if (violations.empty()) return 0;
    for (const auto& v : violations) out << "violation: " << v << "\n";
    return kExitPrecondition;
}

struct MetricArgs {
    std::string family;
    double lambda = 0.0;
    long long trace = 0;
    double c = 0.0;
    double tol = 1e-6;
};

bool check_pair(std::ostream& out, const std::string& what,
                const CpcVerification& v, double k1, double k2, double tol) {
    bool ok = v.constant && std::fabs(v.worst.kappa1 - k1) <= tol &&
              std::fabs(v.worst.kappa2 - k2) <= tol;
    out << what << ": principal curvatures (" << v.worst.kappa1 << ", "
        << v.worst.kappa2 << "), max in-foil deviation " << v.worst.max_deviation
        << (ok ? " [ok]" : " [FAIL]") << "\n";
    return ok;
}

bool check_isometry(std::ostream& out, const std::string& what,
                    const MetricChart& chart, const ChartMap& map, double tol) {
    IsometryCheck r = verify_isometry(chart, map, tol);
    out << what << ": pullback error " << r.max_error
        << (r.isometric ? " [ok]" : " [FAIL]") << "\n";
    return r.isometric;
}

int run_verify_metric(const MetricArgs& args, std::ostream& out, std::ostream& err) {
    const std::vector<double> ts{0.0, 0.25, 0.37, 0.75, 1.0};
    bool ok = true;
    if (args.family == "nil") {
        NilChart chart;
        ok &= check_pair(out, "nil curvature", verify_cpc(chart, ts, args.tol), 0.5,
                         -0.5, args.tol);
        ok &= check_isometry(out, "nil deck translation (t,x,y)->(t+1,x,x+y)", chart,
                             ChartMap::translation(1.0, {1, 0, 1, 1}), 1e-9);
        FirstReturn fr = geodesic_first_return(chart, 0.25, 0.5);
        bool same = std::fabs(fr.x - 0.25) < 1e-6 && std::fabs(fr.y - 0.5) < 1e-6;
        out << "nil first return: (" << fr.x << ", " << fr.y << ") at time "
            << fr.return_time << (same ? " [ok]" : " [FAIL]") << "\n";
        ok &= same;
    } else if (args.family == "sol") {
        double lambda = args.lambda;
        if (args.trace != 0) {
            double t = static_cast<double>(args.trace);
            lambda = (std::fabs(t) + std::sqrt(t * t - 4.0)) / 2.0;
        }
        if (!(lambda > 1.0)) {
            err << "sol requires --lambda > 1 or --trace with |trace| > 2\n";
            return kExitPrecondition;
        }
        SolChart chart(lambda);
        ok &= check_pair(out, "sol curvature", verify_cpc(chart, ts, args.tol), 1.0,
                         -1.0, args.tol);
        ok &= check_isometry(out, "sol deck translation (eigen-frame)", chart,
                             ChartMap::translation(1.0, {lambda, 0, 0, 1.0 / lambda}),
                             1e-9);
    } else if (args.family == "flat") {
        FlatLatticeChart chart(args.c);
        ok &= check_pair(out, "flat curvature", verify_cpc(chart, ts, args.tol), 0.0,
                         0.0, args.tol);
        ok &= check_isometry(out, "flat deck translation (t,x,y)->(t+1,x,y+c)", chart,
                             ChartMap::translation(1.0, {1, 0, 0, 1}, 0.0, args.c),
                             1e-9);
        FirstReturn fr = geodesic_first_return(chart, 0.0, 0.0);
        double want = args.c - std::floor(args.c);
        bool offset_ok = std::fabs(fr.x) < 1e-6 &&
                         std::fabs(fr.y - want) < 1e-6 &&
                         std::fabs(fr.return_time - 1.0) < 1e-6;
        out << "flat first return: offset (" << fr.x << ", " << fr.y << ") at time "
            << fr.return_time << (offset_ok ? " [ok]" : " [FAIL]") << "\n";
        ok &= offset_ok;
    } else if (args.family == "product") {
        ProductChart chart(round_sphere_fiber());
        ok &= check_pair(out, "product curvature (totally geodesic slices)",
                         verify_cpc(chart, ts, args.tol), 0.0, 0.0, args.tol);
    } else if (args.family == "warped") {
        auto f = [](double t) { return 1.0 + 0.3 * std::sin(2 * M_PI * t); };
        auto fp = [](double t) { return 0.3 * 2 * M_PI * std::cos(2 * M_PI * t); };
        WarpedChart chart(f, fp, hyperbolic_fiber(), "1+0.3 sin(2 pi t)");
        CpcVerification v = verify_cpc(chart, ts, args.tol);
        bool umbilic = std::fabs(v.worst.kappa1 - v.worst.kappa2) <= args.tol;
        out << "warped curvature: constant per foil "
            << (v.constant ? "yes" : "NO") << ", umbilic "
            << (umbilic ? "yes" : "NO") << "\n";
        ok &= v.constant && umbilic;
    } else {
        err << "unknown family '" << args.family << "'\n";
        return kExitParse;
    }
    out << (ok ? "all checks passed" : "checks FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification and numerical verification of embedded "
                 "codimension-one transnormal systems on compact 3-manifolds"};
    app.require_subcommand(1);

    std::string file1, file2, format = "md";
    MetricArgs margs;

    auto* classify_cmd = app.add_subcommand("classify", "full classification report");
    classify_cmd->add_option("file", file1)->required();
    auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two descriptors");
    equiv_cmd->add_option("file1", file1)->required();
    equiv_cmd->add_option("file2", file2)->required();
    auto* ambient_cmd = app.add_subcommand("ambient", "ambient manifold");
    ambient_cmd->add_option("file", file1)->required();
    auto* cpc_cmd = app.add_subcommand("cpc", "CPC admissibility and geometry");
    cpc_cmd->add_option("file", file1)->required();
    auto* cover_cmd = app.add_subcommand("cover", "essential cover");
    cover_cmd->add_option("file", file1)->required();
    auto* validate_cmd = app.add_subcommand("validate", "descriptor validation");
    validate_cmd->add_option("file", file1)->required();
    auto* tables_cmd = app.add_subcommand("tables", "classification tables");
    tables_cmd->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));
    auto* metric_cmd = app.add_subcommand("verify-metric", "numerical metric checks");
    metric_cmd->add_option("--family", margs.family)
        ->required()
        ->check(CLI::IsMember({"nil", "sol", "flat", "product", "warped"}));
    metric_cmd->add_option("--lambda", margs.lambda);
    metric_cmd->add_option("--trace", margs.trace);
    metric_cmd->add_option("--c", margs.c);
    metric_cmd->add_option("--tol", margs.tol);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (tables_cmd->parsed()) {
            auto tables = emit_tables();
            out << (format == "md" ? render_tables_markdown(tables)
                                   : render_tables_csv(tables));
            return 0;
        }
        if (metric_cmd->parsed()) return run_verify_metric(margs, out, err);

        if (validate_cmd->parsed()) {
            TransnormalDescriptor d = load(file1);
            int rc = check_valid(d, out);
            if (rc == 0) out << "valid\n";
            return rc;
        }
        if (classify_cmd->parsed()) {
            TransnormalDescriptor d = load(file1);
            if (int rc = check_valid(d, err)) return rc;
            out << report_document(d, classify(d)) << "\n";
            return 0;
        }
        if (ambient_cmd->parsed()) {
            TransnormalDescriptor d = load(file1);
            if (int rc = check_valid(d, err)) return rc;
            out << ambient_manifold(d).label() << "\n";
            return 0;
        }
        if (cpc_cmd->parsed()) {
            TransnormalDescriptor d = load(file1);
            if (int rc = check_valid(d, err)) return rc;
            CpcStatus s = cpc_status(d);
            out << "admissible: " << (s.admissible ? "true" : "false")
                << ", geometry: " << to_string(s.geometry) << "\n";
            return 0;
        }
        if (cover_cmd->parsed()) {
            TransnormalDescriptor d = load(file1);
            if (int rc = check_valid(d, err)) return rc;
            EssentialCover c = essential_cover(d);
            if (const auto* id = std::get_if<ManifoldId>(&c.cover))
                out << "cover: " << id->label() << "\n";
            else
                out << "cover: " << std::get<SymbolicCover>(c.cover).describe() << "\n";
            out << "cover_type: " << to_string(c.cover_type) << "\n";
            for (const auto& g : c.deck_generators)
                out << "deck: " << g.describe() << "\n";
            return 0;
        }
        if (equiv_cmd->parsed()) {
            TransnormalDescriptor a = load(file1);
            TransnormalDescriptor b = load(file2);
            if (int rc = check_valid(a, err)) return rc;
            if (int rc = check_valid(b, err)) return rc;
            EquivResult r = equivalent(a, b);
            if (r.is_true()) { out << "equivalent\n"; return 0; }
            if (r.is_false()) { out << "inequivalent\n"; return 1; }
            out << "undecided: " << r.reason << "\n";
            return 2;
        }
    } catch (const DocumentError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    err << "no subcommand\n";
    return kExitParse;
}

} // namespace tn3
