// Command-line front end: construct, verify, bound, and render designs.
// Exit codes: 0 pass, 1 verification failure, 2 usage/IO error, 3 internal
// inconsistency (the two verifiers disagree).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdesign/construct.hpp"
#include "tdesign/design.hpp"
#include "tdesign/harmonic.hpp"
#include "tdesign/io.hpp"
#include "tdesign/render.hpp"

using nlohmann::json;
using namespace tdesign;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

double default_tolerance() {
    if (const char* env = std::getenv("TDESIGN_TOL")) {
        try {
            const double tol = std::stod(env);
            if (tol > 0.0) return tol;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid TDESIGN_TOL\n";
    }
    return 1e-9;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << j.dump(2) << "\n";
}

std::vector<double> parse_radii(const std::string& arg) {
    std::vector<double> radii;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        radii.push_back(std::stod(item));
    }
    if (radii.empty()) throw CLI::ValidationError("--radii", "no radii given");
    return radii;
}

int self_verify_and_write(const DesignFile& file, const std::string& out_path, double tol) {
    DesignReport report;
    if (file.kind == "euclidean") {
        report = verify_euclidean_design(to_point_set(file), file.claimed_strength.value_or(0), tol);
    } else {
        const IntervalDesign d = to_interval_design(file);
        const IntervalReport ir = verify_interval_design(d, d.t, tol);
        report.method = "interval-moments";
        report.requested_strength = d.t;
        report.pass = ir.pass;
        report.max_residual = ir.max_residual;
        for (std::size_t k = 0; k < ir.residuals.size(); ++k)
            report.residuals.push_back({static_cast<int>(k), ir.residuals[k], "x^k"});
    }
    if (!report.pass) {
        std::cerr << "self-verification failed:\n" << report_to_json(report).dump(2) << "\n";
        return kExitVerifyFail;
    }
    emit(to_json(file), out_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euclidean/interval t-design construction and verification"};
    app.require_subcommand(1);
    double tol = default_tolerance();

    // ---- bound ----
    int b_n = 0, b_p = 0, b_t = 0;
    CLI::App* bound = app.add_subcommand("bound", "Fisher-type lower bound N(n,p,t)");
    bound->add_option("-n,--dim", b_n, "dimension")->required();
    bound->add_option("-p,--layers", b_p, "number of concentric spheres")->required();
    bound->add_option("-t,--strength", b_t, "design strength")->required();

    // ---- construct ----
    CLI::App* construct = app.add_subcommand("construct", "Build a design and write it as JSON");
    std::string out_path;

    CLI::App* polygon = construct->add_subcommand("polygon", "tight planar polygon design");
    int poly_t = 0;
    std::string poly_radii;
    polygon->add_option("-t,--strength", poly_t)->required();
    polygon->add_option("-r,--radii", poly_radii, "comma-separated distinct radii")->required();
    polygon->add_option("-o,--out", out_path, "output path (default stdout)");

    CLI::App* interval = construct->add_subcommand("interval", "Gauss-Jacobi interval design");
    int int_n = 0, int_t = 0;
    interval->add_option("-n,--dim", int_n)->required();
    interval->add_option("-t,--strength", int_t)->required();
    interval->add_option("-o,--out", out_path);

    CLI::App* fg = construct->add_subcommand("fg", "tight lattice-shell design");
    std::string fg_case;
    double fg_lambda = 0.0;
    fg->add_option("--case", fg_case, "one of d3t5, d3t7, d4t7")->required();
    fg->add_option("--lambda", fg_lambda, "shape parameter (> 0, != 1)")->required();
    fg->add_option("-o,--out", out_path);

    CLI::App* lift = construct->add_subcommand("lift", "star-lift a design to higher dimension");
    std::string lift_in;
    int lift_t = 0, lift_dim = 0;
    lift->add_option("--in", lift_in, "source design file")->required();
    lift->add_option("-t,--strength", lift_t)->required();
    lift->add_option("--dim", lift_dim, "target dimension")->required();
    lift->add_option("-o,--out", out_path);

    // ---- verify ----
    CLI::App* verify = app.add_subcommand("verify", "Verify a design file");
    std::string verify_path, method = "moments";
    std::optional<int> verify_t;
    verify->add_option("file", verify_path, "design file")->required();
    verify->add_option("-t,--strength", verify_t, "strength (default: claimed_strength)");
    verify->add_option("--tol", tol, "relative tolerance");
    verify->add_option("--method", method, "moments | harmonic | both")
        ->check(CLI::IsMember({"moments", "harmonic", "both"}));

    // ---- render ----
    CLI::App* render = app.add_subcommand("render", "Render a planar design as SVG");
    std::string render_path, render_out;
    render->add_option("file", render_path, "design file")->required();
    render->add_option("-o,--out", render_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitPass : kExitUsage;
    }

    try {
        if (bound->parsed()) {
            emit(fisher_bound_to_json(fisher_bound(b_n, b_p, b_t)), "");
            return kExitPass;
        }

        if (construct->parsed()) {
            if (polygon->parsed()) {
                const std::vector<double> radii = parse_radii(poly_radii);
                const WeightedPointSet x = tight_polygon_design(poly_t, radii);
                return self_verify_and_write(
                    make_design_file(x, "polygon", json{{"t", poly_t}, {"radii", radii}}, poly_t),
                    out_path, tol);
            }
            if (interval->parsed()) {
                const IntervalDesign d = build_interval_design(int_n, int_t);
                return self_verify_and_write(make_design_file(d, "interval"), out_path, tol);
            }
            if (fg->parsed()) {
                FGCaseTag tag;
                if (fg_case == "d3t5")
                    tag = FGCaseTag::d3t5;
                else if (fg_case == "d3t7")
                    tag = FGCaseTag::d3t7;
                else if (fg_case == "d4t7")
                    tag = FGCaseTag::d4t7;
                else
                    throw std::invalid_argument("unknown fg case: " + fg_case);
                const FGCase fgc = make_fg_case(tag, fg_lambda);
                const WeightedPointSet x = fg_design(fgc);
                return self_verify_and_write(
                    make_design_file(x, "fg", json{{"case", fg_case}, {"lambda", fg_lambda}},
                                     fgc.t),
                    out_path, tol);
            }
            if (lift->parsed()) {
                const DesignFile src = read_design_file(lift_in);
                const WeightedPointSet lifted =
                    lift_to_dimension(to_point_set(src), lift_dim, lift_t);
                return self_verify_and_write(
                    make_design_file(lifted, "lift",
                                     json{{"t", lift_t}, {"dim", lift_dim}, {"source", lift_in}},
                                     lift_t),
                    out_path, tol);
            }
            std::cerr << "construct: missing subcommand\n";
            return kExitUsage;
        }

        if (verify->parsed()) {
            const DesignFile file = read_design_file(verify_path);
            const int t = verify_t ? *verify_t : file.claimed_strength.value_or(-1);
            if (t < 0) throw std::invalid_argument("no strength given and none claimed in file");

            if (file.kind == "interval") {
                const IntervalDesign d = to_interval_design(file);
                const IntervalReport ir = verify_interval_design(d, t, tol);
                json j = {{"method", "interval-moments"}, {"requested_strength", t},
                          {"pass", ir.pass},             {"max_residual", ir.max_residual},
                          {"residuals", ir.residuals},   {"tolerance", tol}};
                emit(j, "");
                return ir.pass ? kExitPass : kExitVerifyFail;
            }

            const WeightedPointSet x = to_point_set(file);
            const LayeredDesign ld = layer_decompose(x);
            auto finish = [&](DesignReport report) {
                if (report.pass) report.tight = is_tight(ld, t, report);
                emit(report_to_json(report), "");
                return report.pass ? kExitPass : kExitVerifyFail;
            };
            if (method == "moments") return finish(verify_euclidean_design(x, t, tol));
            if (method == "harmonic") return finish(verify_design_harmonic(x, t, tol));

            DesignReport moments = verify_euclidean_design(x, t, tol);
            DesignReport harmonic = verify_design_harmonic(x, t, tol);
            if (moments.pass != harmonic.pass) {
                std::cerr << "internal error: verifiers disagree\n"
                          << json{{"moments", report_to_json(moments)},
                                  {"harmonic", report_to_json(harmonic)}}
                                 .dump(2)
                          << "\n";
                return kExitInternal;
            }
            if (moments.pass) {
                moments.tight = is_tight(ld, t, moments);
                harmonic.tight = moments.tight;
            }
            emit(json{{"agree", true},
                      {"moments", report_to_json(moments)},
                      {"harmonic", report_to_json(harmonic)}},
                 "");
            return moments.pass ? kExitPass : kExitVerifyFail;
        }

        if (render->parsed()) {
            const DesignFile file = read_design_file(render_path);
            const std::string svg = render_svg(file);
            if (render_out.empty() || render_out == "-") {
                std::cout << svg;
            } else {
                std::ofstream out(render_out);
                if (!out) throw std::runtime_error("cannot open for writing: " + render_out);
                out << svg;
            }
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
