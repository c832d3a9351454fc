#include "ertbp/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ertbp/serialization.hpp"
#include "ertbp/validation.hpp"

namespace ertbp {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct SystemSpec {
    double mu = 0.0;
    double e = 0.0;
};

// Sun-Earth values from the standard presets; others via explicit --mu/--e.
const SystemSpec kSunEarth{3.040423398444176e-6, 0.01671022};
const SystemSpec kEarthMoon{0.0121505856, 0.0549};

struct CommonOpts {
    std::string system;
    double mu = -1.0;
    double e = -1.0;
    std::string point = "L1";

    double resolved_mu() const {
        if (!system.empty()) {
            if (system == "sun-earth") return kSunEarth.mu;
            if (system == "earth-moon") return kEarthMoon.mu;
            throw DomainError("unknown system preset: " + system);
        }
        if (mu < 0.0) throw DomainError("either --system or --mu is required");
        return mu;
    }
    double resolved_e() const {
        if (e >= 0.0) return e;
        if (system == "sun-earth") return kSunEarth.e;
        if (system == "earth-moon") return kEarthMoon.e;
        return 0.0;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--system", o.system, "system preset: sun-earth or earth-moon");
    cmd->add_option("--mu", o.mu, "mass ratio in (0, 0.5)");
    cmd->add_option("--e", o.e, "orbital eccentricity in [0, 1); overrides the preset");
    cmd->add_option("--point", o.point, "collinear point: L1, L2 or L3")
        ->default_str("L1");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(out_path, text);
    }
}

void validate_run_ranges(double mu, double e, int order) {
    if (!(mu > 0.0 && mu < 0.5)) throw DomainError("mass ratio must lie in (0, 0.5)");
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("eccentricity must lie in [0, 1)");
    if (order < 1) throw DomainError("order must be >= 1");
}

BifurcationForm third_order_form(const CommonOpts& sys, CouplingCase kase, int n_poly) {
    LibrationContext ctx = make_context(sys.resolved_mu(), point_from_string(sys.point), n_poly);
    BuildOptions opt;
    opt.order = 3;
    opt.mode = EtaMode::Symbolic;
    opt.n_poly_max = n_poly;
    return extract_bifurcation_coeffs(build_solution(ctx, kase, opt));
}

struct EtaChoice {
    std::string branch = "none";  // none | small | large
    std::string sign = "pos";     // pos | neg
    double explicit_eta = std::numeric_limits<double>::quiet_NaN();
};

double sol_delta_real(const SolutionSet& s, const EvalParams& p) {
    return s.delta.eval(p).real();
}

// Resolves eta and builds the numeric-mode solution it belongs to. For
// branch-selected eta the order-3 root is refined against the full-order
// Delta by secant iteration, one numeric build per iterate.
SolutionSet build_orbit_solution(const CommonOpts& sys, CouplingCase kase, int order,
                                 int n_poly, const OrbitParams& op0, const EtaChoice& choice,
                                 OrbitParams& op_out) {
    LibrationContext ctx = make_context(sys.resolved_mu(), point_from_string(sys.point), n_poly);
    op_out = op0;

    BuildOptions opt;
    opt.order = order;
    opt.mode = EtaMode::Numeric;
    opt.n_poly_max = n_poly;

    double eta = 0.0;
    if (!std::isnan(choice.explicit_eta)) {
        eta = choice.explicit_eta;
    } else if (choice.branch != "none") {
        BifurcationForm form = third_order_form(sys, kase, n_poly);
        EvalPoint pt{op0.alpha1, op0.alpha2, op0.alpha3_sq, op0.e};
        std::vector<EtaRoot> roots = solve_eta(form, pt);
        EtaBranch want = (choice.branch == "small") ? EtaBranch::Small : EtaBranch::Large;
        std::optional<double> found;
        for (const EtaRoot& r : roots)
            if (r.branch == want && r.eta > 0.0) found = r.eta;
        if (!found)
            throw DomainError("no " + choice.branch +
                              "-branch root of the bifurcation equation at these amplitudes");
        eta = (choice.sign == "neg") ? -*found : *found;

        if (order > 3) {
            // refine against the full-order Delta so the eta*Delta = 0
            // constraint holds at the evaluation order
            auto delta_of = [&](double et) {
                opt.eta_value = et;
                SolutionSet s = build_solution(ctx, kase, opt);
                EvalParams p;
                p.alpha1 = Complex(op0.alpha1);
                p.alpha2 = Complex(op0.alpha2);
                p.alpha3 = (op0.alpha3_sq >= 0.0)
                               ? Complex(std::sqrt(op0.alpha3_sq))
                               : Complex(0.0, std::sqrt(-op0.alpha3_sq));
                p.e = op0.e;
                p.eta = et;
                return sol_delta_real(s, p);
            };
            double e0 = eta, e1 = eta * (1.0 + 1e-3) + ((eta == 0.0) ? 1e-3 : 0.0);
            double g0 = delta_of(e0), g1 = delta_of(e1);
            for (int it = 0; it < 25 && std::abs(g1) > 1e-13; ++it) {
                if (g1 == g0) break;
                double e2 = e1 - g1 * (e1 - e0) / (g1 - g0);
                e0 = e1;
                g0 = g1;
                e1 = e2;
                g1 = delta_of(e1);
            }
            if (std::abs(g1) > 1e-8)
                throw ConstraintError("eta refinement failed to meet |Delta| <= 1e-8");
            eta = e1;
        }
    }
    op_out.eta = eta;
    opt.eta_value = eta;
    return build_solution(ctx, kase, opt);
}

Json roots_json(const std::vector<EtaRoot>& roots) {
    Json arr = Json::array();
    for (const EtaRoot& r : roots) {
        Json jr;
        jr["eta"] = r.eta;
        jr["branch"] = (r.branch == EtaBranch::Small) ? "small" : "large";
        arr.push_back(jr);
    }
    return arr;
}

// Applies a flat JSON config as defaults: tokens are injected right after the
// subcommand names so explicit flags win under the take-last policy.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string cfg_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) cfg_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) cfg_path = args[i].substr(9);
    }
    if (cfg_path.empty()) return args;

    std::ifstream f(cfg_path);
    if (!f) throw DomainError("cannot open config file: " + cfg_path);
    Json cfg = Json::parse(f);
    if (!cfg.is_object()) throw DomainError("config file must hold a JSON object");

    std::size_t insert_at = 1;
    if (args.size() > 1) {
        insert_at = 2;
        if (args.size() > 2 && args[1] == "bifurcate") insert_at = 3;
    }
    std::vector<std::string> tokens;
    for (const auto& [key, value] : cfg.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) tokens.push_back("--" + key);
        } else if (value.is_string()) {
            tokens.push_back("--" + key + "=" + value.get<std::string>());
        } else {
            tokens.push_back("--" + key + "=" + value.dump());
        }
    }
    args.insert(args.begin() + std::min(insert_at, args.size()), tokens.begin(), tokens.end());
    return args;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"High-order trigonometric series solutions and pitchfork-bifurcation "
                 "analysis near the collinear libration points of the elliptic restricted "
                 "three-body problem"};
    app.option_defaults()->take_last();
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file mirroring flags")
        ->expected(1);

    const int n_poly = 20;

    // --- params ---
    CLI::App* cmd_params = app.add_subcommand("params", "print the libration-point context");
    CommonOpts p_sys;
    std::string p_out;
    int p_nmax = 20;
    add_common(cmd_params, p_sys);
    cmd_params->add_option("-o,--out", p_out, "output path (default stdout)");
    cmd_params->add_option("--n-max", p_nmax, "depth of the c_n table");

    // --- build ---
    CLI::App* cmd_build = app.add_subcommand("build", "build and serialize a series solution");
    CommonOpts b_sys;
    std::string b_out, b_case = "x2z";
    int b_order = 3, b_npoly = 20, b_deg = -1;
    double b_eta = std::numeric_limits<double>::quiet_NaN();
    add_common(cmd_build, b_sys);
    cmd_build->add_option("--case", b_case, "coupling case: x2z, y2z or z2y");
    cmd_build->add_option("--order", b_order, "truncation order N")->default_str("3");
    cmd_build->add_option("--eta-degree", b_deg, "symbolic eta-polynomial degree");
    cmd_build->add_option("--eta", b_eta, "numeric-mode coupling coefficient");
    cmd_build->add_option("--n-poly", b_npoly, "recurrent-expansion depth");
    cmd_build->add_option("-o,--out", b_out, "output path (default stdout)");

    // --- bifurcate ---
    CLI::App* cmd_bif = app.add_subcommand("bifurcate", "bifurcation-equation analysis");
    cmd_bif->require_subcommand(1);
    CommonOpts f_sys;
    std::string f_out, f_case = "x2z";
    double f_a1 = 0.0, f_a2 = 0.0, f_a3sq = 0.0;
    CLI::App* cmd_solve = cmd_bif->add_subcommand("solve", "roots of Delta = 0");
    CLI::App* cmd_region = cmd_bif->add_subcommand("region", "solution-count classification");
    CLI::App* cmd_thresh = cmd_bif->add_subcommand("threshold", "critical amplitudes");
    for (CLI::App* c : {cmd_solve, cmd_region, cmd_thresh}) {
        add_common(c, f_sys);
        c->add_option("--case", f_case, "coupling case: x2z, y2z or z2y");
        c->add_option("-o,--out", f_out, "output path (default stdout)");
    }
    for (CLI::App* c : {cmd_solve, cmd_region}) {
        c->add_option("--a1", f_a1, "alpha1 amplitude");
        c->add_option("--a2", f_a2, "alpha2 amplitude");
        c->add_option("--a3sq", f_a3sq, "signed alpha3^2 (negative = transit)");
    }

    // --- surface ---
    CLI::App* cmd_surface = app.add_subcommand("surface", "critical-surface mesh CSV");
    CommonOpts s_sys;
    std::string s_out, s_case = "x2z", s_which = "c", s_branch = "transit";
    SurfaceMeshSpec s_spec;
    add_common(cmd_surface, s_sys);
    cmd_surface->add_option("--case", s_case, "coupling case");
    cmd_surface->add_option("--which", s_which, "surface: c, a or disc");
    cmd_surface->add_option("--branch", s_branch, "transit or non-transit");
    cmd_surface->add_option("--a1-max", s_spec.alpha1_max, "alpha1 half-range");
    cmd_surface->add_option("--a2-max", s_spec.alpha2_max, "alpha2 half-range");
    cmd_surface->add_option("--a3-max", s_spec.alpha3_max, "alpha3 range");
    cmd_surface->add_option("--n", s_spec.n, "samples per axis");
    cmd_surface->add_option("-o,--out", s_out, "output CSV path")->required();

    // --- orbit ---
    CLI::App* cmd_orbit = app.add_subcommand("orbit", "trajectory CSV from the series");
    CommonOpts o_sys;
    std::string o_out, o_case = "x2z", o_frame = "local";
    int o_order = 7, o_samples = 1000;
    OrbitParams o_params;
    EtaChoice o_eta;
    double o_f0 = 0.0, o_f1 = 2.0 * kPi, o_phi3 = std::numeric_limits<double>::quiet_NaN();
    add_common(cmd_orbit, o_sys);
    cmd_orbit->add_option("--case", o_case, "coupling case");
    cmd_orbit->add_option("--order", o_order, "truncation order N")->default_str("7");
    cmd_orbit->add_option("--a1", o_params.alpha1, "alpha1 amplitude");
    cmd_orbit->add_option("--a2", o_params.alpha2, "alpha2 amplitude");
    cmd_orbit->add_option("--a3sq", o_params.alpha3_sq, "signed alpha3^2");
    cmd_orbit->add_option("--eta", o_eta.explicit_eta, "explicit coupling coefficient");
    cmd_orbit->add_option("--eta-branch", o_eta.branch, "none, small or large");
    cmd_orbit->add_option("--eta-sign", o_eta.sign, "pos or neg");
    cmd_orbit->add_option("--phi1", o_params.phi1, "theta1 initial phase");
    cmd_orbit->add_option("--phi2", o_params.phi2, "theta2 initial phase");
    cmd_orbit->add_option("--phi3", o_phi3, "theta3 initial phase (default canonical)");
    cmd_orbit->add_option("--f0", o_f0, "start true anomaly");
    cmd_orbit->add_option("--f1", o_f1, "end true anomaly");
    cmd_orbit->add_option("--samples", o_samples, "number of samples");
    cmd_orbit->add_option("--frame", o_frame, "local or primary (pulsating frame)");
    cmd_orbit->add_option("-o,--out", o_out, "output CSV path (default stdout)");

    // --- validate ---
    CLI::App* cmd_val = app.add_subcommand("validate", "residual/integration report JSON");
    CommonOpts v_sys;
    std::string v_out, v_case = "x2z";
    int v_order = 7, v_nodes = 129, v_grid = 241;
    OrbitParams v_params;
    EtaChoice v_eta;
    double v_f0 = 0.0, v_f1 = 2.0 * kPi;
    add_common(cmd_val, v_sys);
    cmd_val->add_option("--case", v_case, "coupling case");
    cmd_val->add_option("--order", v_order, "truncation order N")->default_str("7");
    cmd_val->add_option("--a1", v_params.alpha1, "alpha1 amplitude");
    cmd_val->add_option("--a2", v_params.alpha2, "alpha2 amplitude");
    cmd_val->add_option("--a3sq", v_params.alpha3_sq, "signed alpha3^2");
    cmd_val->add_option("--eta", v_eta.explicit_eta, "explicit coupling coefficient");
    cmd_val->add_option("--eta-branch", v_eta.branch, "none, small or large");
    cmd_val->add_option("--eta-sign", v_eta.sign, "pos or neg");
    cmd_val->add_option("--f0", v_f0, "start true anomaly");
    cmd_val->add_option("--f1", v_f1, "end true anomaly");
    cmd_val->add_option("--nodes", v_nodes, "integration comparison nodes");
    cmd_val->add_option("--grid", v_grid, "residual grid size");
    cmd_val->add_option("-o,--out", v_out, "output path (default stdout)");

    app.require_subcommand(1);

    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        args = apply_config(args);
        // CLI11 wants the reversed tail without the program name
        std::vector<std::string> rev(args.rbegin(), args.rend());
        rev.pop_back();
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }

    try {
        if (cmd_params->parsed()) {
            double mu = p_sys.resolved_mu();
            double e = p_sys.resolved_e();
            validate_run_ranges(mu, e, 1);
            LibrationContext ctx = make_context(mu, point_from_string(p_sys.point), p_nmax);
            Json j = context_json(ctx);
            j["e"] = e;
            emit(j.dump(2), p_out);
        } else if (cmd_build->parsed()) {
            double mu = b_sys.resolved_mu();
            double e = b_sys.resolved_e();
            validate_run_ranges(mu, e, b_order);
            LibrationContext ctx = make_context(mu, point_from_string(b_sys.point), b_npoly);
            BuildOptions opt;
            opt.order = b_order;
            opt.n_poly_max = b_npoly;
            if (!std::isnan(b_eta)) {
                opt.mode = EtaMode::Numeric;
                opt.eta_value = b_eta;
            } else {
                opt.mode = EtaMode::Symbolic;
                opt.eta_degree = b_deg;
            }
            SolutionSet sol = build_solution(ctx, case_from_string(b_case), opt);
            Json j = solution_json(sol);
            j["header"]["e_preset"] = e;
            emit(j.dump(), b_out);
        } else if (cmd_bif->parsed()) {
            double mu = f_sys.resolved_mu();
            double e = f_sys.resolved_e();
            validate_run_ranges(mu, e, 3);
            CouplingCase kase = case_from_string(f_case);
            if (cmd_thresh->parsed()) {
                Json j;
                j["e"] = e;
                if (kase == CouplingCase::XtoZ) {
                    BifurcationForm form = third_order_form(f_sys, kase, n_poly);
                    auto th = halo_threshold(form, e);
                    j["case"] = "x2z";
                    if (th) j["alpha1_crit"] = *th;
                    else j["alpha1_crit"] = nullptr;
                } else {
                    BifurcationForm fz = third_order_form(f_sys, CouplingCase::ZtoY, n_poly);
                    BifurcationForm fy = third_order_form(f_sys, CouplingCase::YtoZ, n_poly);
                    AxialThresholds th = axial_thresholds(fz, fy, e);
                    j["case"] = "axial";
                    if (th.alpha2_max) j["alpha2_max"] = *th.alpha2_max;
                    else j["alpha2_max"] = nullptr;
                    if (th.alpha1_cri) j["alpha1_cri"] = *th.alpha1_cri;
                    else j["alpha1_cri"] = nullptr;
                }
                emit(j.dump(2), f_out);
            } else {
                BifurcationForm form = third_order_form(f_sys, kase, n_poly);
                EvalPoint pt{f_a1, f_a2, f_a3sq, e};
                Json j;
                j["point"] = {{"alpha1", pt.alpha1},
                              {"alpha2", pt.alpha2},
                              {"alpha3_sq", pt.alpha3_sq},
                              {"e", pt.e}};
                j["form"] = bifurcation_form_json(form);
                QuarticCoeffs q = quartic_at(form, pt);
                j["a"] = q.a;
                j["b"] = q.b;
                j["c"] = q.c;
                j["disc"] = q.disc();
                std::vector<EtaRoot> roots = solve_eta(form, pt);
                j["roots"] = roots_json(roots);
                j["count"] = roots.size();
                if (cmd_region->parsed()) {
                    RegionClass rc = classify_region(form, pt);
                    j["class"] = rc.label;
                    j["degenerate"] = rc.degenerate;
                }
                emit(j.dump(2), f_out);
            }
        } else if (cmd_surface->parsed()) {
            double mu = s_sys.resolved_mu();
            double e = s_sys.resolved_e();
            validate_run_ranges(mu, e, 3);
            BifurcationForm form = third_order_form(s_sys, case_from_string(s_case), n_poly);
            SurfaceKind kind = (s_which == "c")   ? SurfaceKind::CZero
                               : (s_which == "a") ? SurfaceKind::AZero
                               : (s_which == "disc")
                                   ? SurfaceKind::DiscZero
                                   : throw DomainError("unknown surface: " + s_which);
            Alpha3Branch branch = (s_branch == "transit") ? Alpha3Branch::Transit
                                  : (s_branch == "non-transit")
                                      ? Alpha3Branch::NonTransit
                                      : throw DomainError("unknown branch: " + s_branch);
            SurfaceMesh mesh = critical_surface_mesh(form, kind, branch, e, s_spec);
            if (!mesh.diagnostic.empty()) std::cerr << "note: " << mesh.diagnostic << "\n";
            write_text_file(s_out, mesh_csv(mesh));
        } else if (cmd_orbit->parsed()) {
            double mu = o_sys.resolved_mu();
            double e = o_sys.resolved_e();
            validate_run_ranges(mu, e, o_order);
            o_params.e = e;
            if (!std::isnan(o_phi3)) o_params.phi3 = o_phi3;
            OrbitParams op;
            SolutionSet sol = build_orbit_solution(o_sys, case_from_string(o_case), o_order,
                                                   n_poly, o_params, o_eta, op);
            std::vector<StateVector> traj = sample_trajectory(sol, op, o_f0, o_f1, o_samples);
            if (o_frame == "primary") {
                for (StateVector& s : traj) {
                    State6 g = local_to_global(to_state6(s), sol.ctx);
                    s.x = g[0]; s.y = g[1]; s.z = g[2];
                    s.xp = g[3]; s.yp = g[4]; s.zp = g[5];
                }
            } else if (o_frame != "local") {
                throw DomainError("unknown frame: " + o_frame);
            }
            emit(trajectory_csv(traj), o_out);
        } else if (cmd_val->parsed()) {
            double mu = v_sys.resolved_mu();
            double e = v_sys.resolved_e();
            validate_run_ranges(mu, e, v_order);
            v_params.e = e;
            OrbitParams op;
            SolutionSet sol = build_orbit_solution(v_sys, case_from_string(v_case), v_order,
                                                   n_poly, v_params, v_eta, op);
            std::vector<double> grid(v_grid);
            for (int i = 0; i < v_grid; ++i)
                grid[i] = v_f0 + (v_f1 - v_f0) * double(i) / double(v_grid - 1);
            double resid = residual_check(sol, op, grid);
            IntegratorConfig cfg;
            double dev = series_vs_integration(sol, op, v_f0, v_f1, v_nodes, cfg);
            EvalParams p = make_eval_params(sol, op);
            State6 start = local_to_global(to_state6(evaluate_state_at(sol, p, v_f0)), sol.ctx);
            Json defects;
            defects["s1"] = symmetry_check(start, v_f0, v_f1, 33, mu, e, SymmetryType::S1, cfg);
            defects["s2"] = symmetry_check(start, v_f0, v_f1, 33, mu, e, SymmetryType::S2, cfg);
            defects["s3"] = symmetry_check(start, v_f0, v_f1, 33, mu, e, SymmetryType::S3, cfg);
            Json j;
            j["params"] = {{"mu", mu},       {"point", v_sys.point},
                           {"case", v_case}, {"alpha1", op.alpha1},
                           {"alpha2", op.alpha2}, {"alpha3_sq", op.alpha3_sq},
                           {"e", op.e},      {"eta", op.eta}};
            j["order"] = v_order;
            j["residual_max"] = resid;
            j["deviation_max"] = dev;
            j["symmetry_defects"] = defects;
            emit(j.dump(2), v_out);
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ertbp
