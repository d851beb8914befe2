#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "donoghue/herglotz.hpp"
#include "donoghue/json_io.hpp"
#include "donoghue/measure.hpp"
#include "donoghue/model.hpp"
#include "donoghue/moebius.hpp"
#include "donoghue/realize.hpp"
#include "donoghue/starext.hpp"
#include "donoghue/sweep.hpp"
#include "donoghue/verify.hpp"

namespace {

using donoghue::Complex;
using Json = donoghue::Json;

const char* family_name(donoghue::Family f) {
    switch (f) {
    case donoghue::Family::M:
        return "M";
    case donoghue::Family::M_kappa:
        return "M_kappa";
    default:
        return "M_kappa_inv";
    }
}

const char* hypothesis_name(donoghue::Hypothesis h) {
    switch (h) {
    case donoghue::Hypothesis::Hyp1:
        return "Hyp1";
    case donoghue::Hypothesis::Hyp2:
        return "Hyp2";
    default:
        return "Mixed";
    }
}

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

void emit(const Json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        std::cout << key << ": ";
        if (value.is_array() && value.size() == 2 && value[0].is_number() &&
            value[1].is_number())
            std::cout << fmt_complex(donoghue::complex_from_json(value));
        else
            std::cout << value.dump();
        std::cout << "\n";
    }
}

Json realization_to_json(const donoghue::RealizationParams& p) {
    return {{"kappa", donoghue::complex_to_json(p.kappa)},
            {"U", donoghue::complex_to_json(p.U)},
            {"basis_phase", donoghue::complex_to_json(p.basis_phase)},
            {"hypothesis", hypothesis_name(p.hypothesis)}};
}

Complex parse_complex_arg(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("complex arguments use the form re,im");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("DONOGHUE_LAB_SEED"))
        return std::stoull(env);
    return flag_seed;
}

donoghue::PerturbedHerglotz load_function(const std::string& path) {
    return donoghue::function_from_json(donoghue::load_json_file(path));
}

void write_curve_csv(std::ostream& out, const std::vector<donoghue::CurvePoint>& pts,
                     double a) {
    out.precision(15);
    out << "# kappa(Q) curve, a = " << a << "\n";
    out << "# even symmetry: kappa(-Q) = kappa(Q); vertex kappa(0) = "
        << std::abs(1.0 - a) / (1.0 + a) << "\n";
    out << "Q,kappa,Re U,Im U\n";
    for (const auto& p : pts)
        out << p.Q << "," << p.kappa << "," << p.U.real() << "," << p.U.imag() << "\n";
}

void write_curve_svg(const std::string& path, const std::vector<donoghue::CurvePoint>& pts,
                     double a) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open " + path);
    const double w = 640.0, h = 480.0, margin = 40.0;
    const double q_min = pts.front().Q, q_max = pts.back().Q;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\">kappa(Q), a = " << a
        << "</text>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\"" << w - margin
        << "\" y2=\"" << h - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << h - margin << "\" stroke=\"black\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"blue\" points=\"";
    for (const auto& p : pts) {
        const double x = margin + (p.Q - q_min) / (q_max - q_min) * (w - 2 * margin);
        const double y = h - margin - p.kappa * (h - 2 * margin);
        out << x << "," << y << " ";
    }
    out << "\"/>\n</svg>\n";
}

struct GoldenCheck {
    std::string name;
    Complex got;
    Complex want;
};

int run_examples(const std::string& format) {
    const double s5 = std::sqrt(5.0), s2 = std::sqrt(2.0), s65 = std::sqrt(65.0),
                 s10 = std::sqrt(10.0), s13 = std::sqrt(13.0), s26 = std::sqrt(26.0);
    std::vector<GoldenCheck> checks;

    const auto p1 = donoghue::params_class_M(1.0);
    checks.push_back({"example1.kappa", p1.kappa, 1.0 / s5});
    checks.push_back({"example1.U", p1.U, Complex(-1.0, 2.0) / s5});
    checks.push_back({"example1.basis_phase", p1.basis_phase, Complex(1.0, -2.0) / s5});
    const auto [c1_phi, c1_psi] =
        donoghue::channel_coefficients(p1.kappa.real(), p1.U);
    const auto [d1_phi, d1_psi] = donoghue::to_delta_basis(c1_phi, c1_psi, p1.basis_phase);
    checks.push_back({"example1.chi_phi", d1_phi, Complex(1.0, 1.0) / s2});
    checks.push_back({"example1.chi_psi", d1_psi, Complex(7.0, 1.0) / (5.0 * s2)});

    const auto p2 = donoghue::params_class_Mk(1.0, 0.5);
    const auto u2 = donoghue::params_universal(1.0, 0.5);
    checks.push_back({"example2.kappa", p2.kappa, s65 / 13.0});
    checks.push_back({"example2.U", p2.U, Complex(-7.0, 4.0) / s65});
    checks.push_back({"example2.kappa_tilde", u2.kappa_tilde, 1.0 / s2});
    checks.push_back({"example2.U_tilde", u2.U_tilde, Complex(-1.0, 1.0) / s2});
    checks.push_back({"example2.kappa_complex", u2.kappa_complex,
                      s2 * Complex(11.0, -3.0) / 26.0});
    checks.push_back({"example2.kappa_modulus", u2.kappa_modulus, s65 / 13.0});
    const auto [c2_phi, c2_psi] =
        donoghue::channel_coefficients(p2.kappa.real(), p2.U);
    checks.push_back({"example2.chi_phi", c2_phi, Complex(1.0, 2.0) / 2.0});
    checks.push_back({"example2.chi_psi", c2_psi, Complex(1.0, 18.0) / (2.0 * s65)});
    checks.push_back({"example2.W", donoghue::impedance_to_transfer(Complex(1.0, 0.5)),
                      -Complex(1.0, 8.0) / 5.0});

    const double q0 = donoghue::matching_Q0(s65 / 13.0);
    checks.push_back({"example3.Q0", q0, std::sqrt(2.5)});
    const auto p3 = donoghue::params_class_M(q0);
    checks.push_back({"example3.U", p3.U, Complex(-s5, 2.0 * s2) / s13});
    const auto [c3_phi, c3_psi] = donoghue::channel_coefficients(s65 / 13.0, p3.U);
    checks.push_back({"example3.chi_phi", c3_phi, Complex(s26, s65) / (2.0 * s13)});
    checks.push_back({"example3.chi_psi", c3_psi, Complex(s10, 9.0) / (2.0 * s13)});
    const Complex factor = donoghue::example3_factor();
    checks.push_back({"example3.factor", factor, Complex(5.0, 2.0 * s10) / Complex(1.0, 8.0)});
    checks.push_back({"example3.factor_modulus", std::abs(factor), 1.0});

    bool all_ok = true;
    Json rows = Json::array();
    for (const auto& g : checks) {
        const double diff = std::abs(g.got - g.want);
        const bool ok = diff < 1e-10;
        all_ok = all_ok && ok;
        if (format == "json") {
            rows.push_back({{"name", g.name},
                            {"got", donoghue::complex_to_json(g.got)},
                            {"expected", donoghue::complex_to_json(g.want)},
                            {"diff", diff},
                            {"ok", ok}});
        } else {
            std::cout << (ok ? "ok   " : "FAIL ") << g.name << "  got " << fmt_complex(g.got)
                      << "  expected " << fmt_complex(g.want) << "  diff " << diff << "\n";
        }
    }
    if (format == "json")
        std::cout << Json{{"checks", rows}, {"passed", all_ok}}.dump(2) << "\n";
    else
        std::cout << (all_ok ? "all example checks passed" : "example checks FAILED") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realization parameters of perturbed Herglotz-Nevanlinna functions"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a function JSON file");
    std::string classify_input;
    classify_cmd->add_option("--input", classify_input, "function JSON")->required();

    // realize
    auto* realize_cmd =
        app.add_subcommand("realize", "compute von Neumann parameters kappa and U");
    std::string realize_input;
    double realize_Q = 0.0, realize_a = 1.0;
    bool realize_universal = false;
    realize_cmd->add_option("--input", realize_input, "function JSON");
    realize_cmd->add_option("--Q", realize_Q, "perturbation constant");
    realize_cmd->add_option("--a", realize_a, "normalization");
    realize_cmd->add_flag("--universal", realize_universal, "also emit universal parameters");

    // perturb
    auto* perturb_cmd = app.add_subcommand("perturb", "shift Q of a function JSON");
    std::string perturb_input;
    double perturb_dQ = 0.0;
    perturb_cmd->add_option("--input", perturb_input, "function JSON")->required();
    perturb_cmd->add_option("--dQ", perturb_dQ, "shift")->required();

    // rotate
    auto* rotate_cmd =
        app.add_subcommand("rotate", "solve rotation angles or rotate an impedance value");
    double rotate_Q = 0.0, rotate_a = 0.0, rotate_alpha = 0.0;
    std::string rotate_v;
    bool have_alpha = false;
    rotate_cmd->add_option("--Q", rotate_Q, "perturbation constant");
    rotate_cmd->add_option("--a", rotate_a, "normalization");
    rotate_cmd->add_option("--alpha", rotate_alpha, "rotation angle")->each([&](const std::string&) {
        have_alpha = true;
    });
    rotate_cmd->add_option("--v", rotate_v, "impedance value re,im");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "emit the kappa(Q) curve as CSV");
    std::string curve_class = "auto";
    double curve_a = 1.0;
    std::vector<double> curve_range = {-5.0, 5.0};
    int curve_steps = 101;
    std::string curve_output, curve_svg;
    bool curve_parallel = false;
    curve_cmd->add_option("--class", curve_class, "M, Mk, Mk_inv or auto")
        ->check(CLI::IsMember({"M", "Mk", "Mk_inv", "auto"}));
    curve_cmd->add_option("--a", curve_a, "normalization");
    curve_cmd->add_option("--Q-range", curve_range, "grid bounds")->expected(2);
    curve_cmd->add_option("--steps", curve_steps, "grid points");
    curve_cmd->add_option("--output", curve_output, "CSV file (default stdout)");
    curve_cmd->add_option("--svg", curve_svg, "also write an SVG polyline");
    curve_cmd->add_flag("--parallel", curve_parallel, "use the parallel kernel");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    std::uint64_t verify_seed = 0;
    verify_cmd->add_option("--seed", verify_seed, "rng seed (env DONOGHUE_LAB_SEED overrides)");

    // resolvent
    auto* resolvent_cmd =
        app.add_subcommand("resolvent", "evaluate the model resolvent at given z");
    std::string resolvent_input, resolvent_k;
    std::vector<std::string> resolvent_z;
    resolvent_cmd->add_option("--input", resolvent_input, "function JSON")->required();
    resolvent_cmd->add_option("--z", resolvent_z, "evaluation points re,im")->required();
    resolvent_cmd->add_option("--k", resolvent_k,
                              "extension parameter re,im (default from the universal formula)");

    // examples
    app.add_subcommand("examples", "replay the worked examples and diff against golden values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) {
            const auto f = load_function(classify_input);
            const auto c = donoghue::classify(f);
            emit({{"family", family_name(c.tag.family)},
                  {"kappa0", c.tag.kappa0},
                  {"perturbed", c.tag.perturbed},
                  {"Q", c.Q},
                  {"a", c.a}},
                 format);
        } else if (realize_cmd->parsed()) {
            double Q = realize_Q, a = realize_a;
            if (!realize_input.empty()) {
                const auto f = load_function(realize_input);
                Q = f.Q;
                a = f.a;
            }
            donoghue::RealizationParams p;
            if (std::abs(a - 1.0) <= 1e-12 * std::max(a, 1.0))
                p = donoghue::params_class_M(Q);
            else if (a < 1.0)
                p = donoghue::params_class_Mk(Q, a);
            else
                p = donoghue::params_class_Mk_inv(Q, a);
            Json out = realization_to_json(p);
            if (realize_universal) {
                const auto u = donoghue::params_universal(Q, a);
                out["kappa_tilde"] = u.kappa_tilde;
                out["U_tilde"] = donoghue::complex_to_json(u.U_tilde);
                out["phase"] = donoghue::complex_to_json(u.phase);
                out["kappa_complex"] = donoghue::complex_to_json(u.kappa_complex);
                out["kappa_modulus"] = u.kappa_modulus;
                out["kappa_original"] = donoghue::complex_to_json(u.kappa_original);
            }
            emit(out, format);
        } else if (perturb_cmd->parsed()) {
            const auto f = load_function(perturb_input);
            std::cout << donoghue::function_to_json(donoghue::perturb(f, perturb_dQ)).dump(2)
                      << "\n";
        } else if (rotate_cmd->parsed()) {
            if (have_alpha && !rotate_v.empty()) {
                const auto r = donoghue::RotationAngle::from_alpha(rotate_alpha);
                const Complex v = parse_complex_arg(rotate_v);
                emit({{"alpha", r.alpha},
                      {"unimodular_factor", donoghue::complex_to_json(r.unimodular_factor)},
                      {"rotated", donoghue::complex_to_json(donoghue::rotate(v, r))}},
                     format);
            } else if (rotate_Q != 0.0 && rotate_a > 0.0) {
                const auto [r1, r2] = donoghue::solve_rotation_angles(rotate_Q, rotate_a);
                const auto [q1, a1] = donoghue::rotated_parameters(rotate_Q, rotate_a, r1);
                const auto [q2, a2] = donoghue::rotated_parameters(rotate_Q, rotate_a, r2);
                emit({{"alpha_plus", r1.alpha},
                      {"alpha_minus", r2.alpha},
                      {"Q_alpha_plus", q1},
                      {"a_alpha_plus", a1},
                      {"Q_alpha_minus", q2},
                      {"a_alpha_minus", a2}},
                     format);
            } else {
                throw std::invalid_argument(
                    "rotate needs either --alpha with --v, or --Q with --a");
            }
        } else if (curve_cmd->parsed()) {
            if (curve_class == "M" && curve_a != 1.0)
                throw std::invalid_argument("class M requires a = 1");
            if (curve_class == "Mk" && !(curve_a < 1.0))
                throw std::invalid_argument("class Mk requires a < 1");
            if (curve_class == "Mk_inv" && !(curve_a > 1.0))
                throw std::invalid_argument("class Mk_inv requires a > 1");
            const auto pts =
                curve_parallel
                    ? donoghue::kappa_curve_parallel(curve_a, curve_range[0], curve_range[1],
                                                     curve_steps)
                    : donoghue::kappa_curve_serial(curve_a, curve_range[0], curve_range[1],
                                                   curve_steps);
            if (curve_output.empty()) {
                write_curve_csv(std::cout, pts, curve_a);
            } else {
                std::ofstream out(curve_output);
                if (!out)
                    throw std::invalid_argument("cannot open " + curve_output);
                write_curve_csv(out, pts, curve_a);
            }
            if (!curve_svg.empty())
                write_curve_svg(curve_svg, pts, curve_a);
        } else if (verify_cmd->parsed()) {
            const auto results = donoghue::run_all_suites(effective_seed(verify_seed));
            int failed = 0;
            Json rows = Json::array();
            for (const auto& r : results) {
                if (!r.passed)
                    ++failed;
                if (format == "json") {
                    rows.push_back({{"suite", r.name},
                                    {"cases", r.cases},
                                    {"max_deviation", r.max_deviation},
                                    {"tolerance", r.tolerance},
                                    {"passed", r.passed},
                                    {"detail", r.detail}});
                } else {
                    std::cout << (r.passed ? "pass " : "FAIL ") << r.name << "  cases "
                              << r.cases << "  max deviation " << r.max_deviation
                              << (r.passed ? "" : ("  (" + r.detail + ")")) << "\n";
                }
            }
            if (format == "json")
                std::cout << Json{{"suites", rows}, {"failed", failed}}.dump(2) << "\n";
            else
                std::cout << (failed == 0 ? "all suites passed"
                                          : std::to_string(failed) + " suite(s) failed")
                          << "\n";
            return failed == 0 ? 0 : 1;
        } else if (resolvent_cmd->parsed()) {
            const auto f = load_function(resolvent_input);
            Complex k_param;
            if (!resolvent_k.empty())
                k_param = parse_complex_arg(resolvent_k);
            else if (f.Q != 0.0)
                k_param = donoghue::params_universal(f.Q, f.a).kappa_original;
            else
                k_param = 0.0;
            const donoghue::ModelSystem ms(f.measure, 0.0, -1.0);
            Json out = Json::array();
            for (const std::string& zs : resolvent_z) {
                const Complex z = parse_complex_arg(zs);
                const auto R = donoghue::dissipative_resolvent(ms, k_param, z);
                Json entries = Json::array();
                for (Eigen::Index i = 0; i < R.rows(); ++i)
                    for (Eigen::Index j = 0; j < R.cols(); ++j)
                        entries.push_back(donoghue::complex_to_json(R(i, j)));
                out.push_back({{"z", donoghue::complex_to_json(z)},
                               {"n", R.rows()},
                               {"entries", entries}});
            }
            std::cout << Json{{"k", donoghue::complex_to_json(k_param)}, {"resolvents", out}}
                             .dump(2)
                      << "\n";
        } else {
            return run_examples(format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
