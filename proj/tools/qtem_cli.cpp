#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtem/qtem.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kQuadTol = 1e-12;

std::array<qtem::Point2, 3> parse_corners(const std::string& text) {
    std::array<qtem::Point2, 3> corners{};
    std::istringstream ss(text);
    std::string tok;
    int n = 0;
    while (ss >> tok) {
        if (n >= 3)
            throw CLI::ValidationError("--corners", "expected three x,y pairs");
        const auto comma = tok.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--corners", "expected x,y pair: " + tok);
        try {
            std::size_t used = 0;
            const std::string xs = tok.substr(0, comma);
            const std::string ys = tok.substr(comma + 1);
            corners[n].x = std::stod(xs, &used);
            if (used != xs.size()) throw std::invalid_argument(xs);
            corners[n].y = std::stod(ys, &used);
            if (used != ys.size()) throw std::invalid_argument(ys);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--corners", "bad coordinate in: " + tok);
        }
        ++n;
    }
    if (n != 3)
        throw CLI::ValidationError("--corners", "expected three x,y pairs");
    return corners;
}

std::array<int, 3> parse_signs(const std::string& text) {
    if (text.size() != 3)
        throw CLI::ValidationError("--signs", "expected three characters of + or -");
    std::array<int, 3> signs{};
    for (int k = 0; k < 3; ++k) {
        if (text[k] == '+') signs[k] = 1;
        else if (text[k] == '-') signs[k] = -1;
        else
            throw CLI::ValidationError("--signs", "expected + or - characters");
    }
    return signs;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_verify(std::size_t triangles, std::uint64_t seed,
               const std::string& format) {
    const qtem::VerifyReport rep = qtem::run_verify(triangles, seed);
    const bool ok = rep.all_ok(kQuadTol);
    if (format == "json") {
        ordered_json j;
        j["triangles"] = rep.n_triangles;
        j["seed"] = rep.seed;
        j["quadrature_tolerance"] = kQuadTol;
        j["kinds"] = ordered_json::array();
        for (const auto& kc : rep.kinds) {
            ordered_json k;
            k["kind"] = qtem::kind_name(kc.kind);
            k["exact_match"] = kc.exact_match_all;
            k["max_rel_quad_err"] = kc.max_rel_quad_err;
            k["ok"] = kc.exact_match_all && kc.max_rel_quad_err <= kQuadTol;
            j["kinds"].push_back(k);
        }
        j["dVx_dVx_entry33"] = {
            {"candidate_l3sq_c1sq_b3sq_matches", rep.entry33_impl_matches},
            {"candidate_l3sq_b1sq_c3sq_matches", rep.entry33_variant_matches},
            {"samples", rep.n_triangles},
        };
        j["pass"] = ok;
        std::fputs(j.dump(2).c_str(), stdout);
        std::fputc('\n', stdout);
    } else {
        std::fputs(qtem::render_report(rep, kQuadTol).c_str(), stdout);
    }
    return ok ? 0 : 1;
}

int cmd_dump_matrix(const std::string& kind_text, const std::string& corners_text,
                    const std::string& signs_text, const std::string& format) {
    const auto kind = qtem::parse_kind(kind_text);
    if (!kind)
        throw CLI::ValidationError("--kind", "unknown matrix kind: " + kind_text);
    const auto corners = parse_corners(corners_text);
    const auto signs = parse_signs(signs_text);
    qtem::TriangleGeometry g = qtem::compute_geometry(corners);
    g = qtem::with_edge_signs(g, signs);
    const qtem::Mat6d m = qtem::element_matrix(*kind, g).entries;
    if (format == "json") {
        ordered_json j;
        j["kind"] = qtem::kind_name(*kind);
        j["corners"] = ordered_json::array();
        for (const auto& p : g.corners) j["corners"].push_back({p.x, p.y});
        j["signs"] = {g.edge_sign[0], g.edge_sign[1], g.edge_sign[2]};
        j["area"] = g.area;
        j["entries"] = ordered_json::array();
        for (int i = 0; i < 6; ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < 6; ++jj) row.push_back(m(i, jj));
            j["entries"].push_back(row);
        }
        std::fputs(j.dump(2).c_str(), stdout);
        std::fputc('\n', stdout);
    } else {
        for (int i = 0; i < 6; ++i) {
            std::string line;
            for (int jj = 0; jj < 6; ++jj) {
                if (jj) line += ",";
                line += fmt17(m(i, jj));
            }
            line += "\n";
            std::fputs(line.c_str(), stdout);
        }
    }
    return 0;
}

int cmd_waveguide(double width, double height, int nx, int ny,
                  const std::string& mode_text, std::size_t n_modes) {
    const qtem::ModeType mode =
        mode_text == "te" ? qtem::ModeType::te : qtem::ModeType::tm;
    const qtem::Mesh mesh = qtem::gen_rect_mesh(width, height, nx, ny);
    const qtem::CutoffResult res = qtem::waveguide_cutoffs(mesh, mode, n_modes);
    const std::vector<double> ana =
        qtem::analytic_cutoffs(width, height, mode, n_modes);
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "waveguide: %g x %g, mesh %dx%d, mode %s, %zu dofs\n", width,
                  height, nx, ny, mode_text.c_str(), res.n_dofs);
    std::fputs(buf, stdout);
    std::fputs("mode  computed_kc         analytic_kc         rel_err\n",
               stdout);
    for (std::size_t i = 0; i < res.kc.size(); ++i) {
        const double a = i < ana.size() ? ana[i] : 0.0;
        const double rel = a > 0.0 ? std::abs(res.kc[i] - a) / a : 0.0;
        std::snprintf(buf, sizeof(buf), "%-5zu %.12e  %.12e  %.3e\n", i + 1,
                      res.kc[i], a, rel);
        std::fputs(buf, stdout);
    }
    return 0;
}

int cmd_convergence(const std::string& mode_text, int levels) {
    const qtem::ModeType mode =
        mode_text == "te" ? qtem::ModeType::te : qtem::ModeType::tm;
    const qtem::ConvergenceStudy st = qtem::convergence_study(mode, levels);
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "convergence: unit square, mode %s, %d levels, analytic "
                  "lambda %.12e\n",
                  mode_text.c_str(), levels, st.exact_lambda);
    std::fputs(buf, stdout);
    std::fputs("level cells  h              dofs    lambda              "
               "rel_err     order\n",
               stdout);
    for (std::size_t k = 0; k < st.levels.size(); ++k) {
        const auto& lv = st.levels[k];
        std::string order = "-";
        if (k > 0) {
            std::snprintf(buf, sizeof(buf), "%.3f", st.orders[k - 1]);
            order = buf;
        }
        std::snprintf(buf, sizeof(buf),
                      "%-5zu %-6d %.6e   %-7zu %.12e  %.3e   %s\n", k + 1,
                      lv.cells, lv.h, lv.n_dofs, lv.lambda1, lv.rel_err,
                      order.c_str());
        std::fputs(buf, stdout);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic triangle elements for 2-D electromagnetic analysis"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify", "Check all closed-form matrices against both integration oracles");
    std::size_t triangles = 1000;
    std::uint64_t seed = 42;
    std::string report_format = "text";
    verify->add_option("--triangles", triangles, "Number of random triangles")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--report", report_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* dump = app.add_subcommand("dump-matrix",
                                    "Print one element matrix for one triangle");
    std::string kind_text, corners_text, signs_text = "+++";
    std::string dump_format = "csv";
    dump->add_option("--kind", kind_text, "Matrix kind, e.g. mass_NN")
        ->required();
    dump->add_option("--corners", corners_text, "Corners as \"x1,y1 x2,y2 x3,y3\"")
        ->required();
    dump->add_option("--signs", signs_text, "Edge orientation signs, e.g. +-+");
    dump->add_option("--format", dump_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* wg = app.add_subcommand("waveguide",
                                  "Cutoff wavenumbers of a rectangular waveguide");
    double width = 2.0, height = 1.0;
    int nx = 16, ny = 8;
    std::string mode_text = "tm";
    std::size_t n_modes = 5;
    wg->add_option("--width", width, "Cross-section width")
        ->check(CLI::PositiveNumber);
    wg->add_option("--height", height, "Cross-section height")
        ->check(CLI::PositiveNumber);
    wg->add_option("--nx", nx, "Cells along the width")->check(CLI::PositiveNumber);
    wg->add_option("--ny", ny, "Cells along the height")->check(CLI::PositiveNumber);
    wg->add_option("--mode-type", mode_text, "Mode family")
        ->check(CLI::IsMember({"tm", "te"}));
    wg->add_option("--n-modes", n_modes, "Number of modes")
        ->check(CLI::PositiveNumber);

    auto* conv = app.add_subcommand("convergence",
                                    "Eigenvalue refinement study on the unit square");
    std::string conv_mode = "tm";
    int levels = 3;
    conv->add_option("--mode-type", conv_mode, "Mode family")
        ->check(CLI::IsMember({"tm", "te"}));
    conv->add_option("--levels", levels, "Number of refinement levels")
        ->check(CLI::Range(3, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify))
            return cmd_verify(triangles, seed, report_format);
        if (app.got_subcommand(dump))
            return cmd_dump_matrix(kind_text, corners_text, signs_text,
                                   dump_format);
        if (app.got_subcommand(wg))
            return cmd_waveguide(width, height, nx, ny, mode_text, n_modes);
        if (app.got_subcommand(conv)) return cmd_convergence(conv_mode, levels);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const qtem::DegenerateTriangle& e) {
        std::fprintf(stderr, "error: DegenerateTriangle: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
