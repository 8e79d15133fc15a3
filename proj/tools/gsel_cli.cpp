// Command-line front end: evaluate closed forms, run quadrature oracles,
// execute verification suites, inspect channels, dump series.
//
// Exit codes: 0 success, 1 residual failure, 2 input/config error,
// 3 numerical error (pole proximity, non-convergence).

#include "gsel/hgsys.hpp"
#include "gsel/identities.hpp"
#include "gsel/json_io.hpp"
#include "gsel/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace gsel;

json load_input(const std::string& input) {
    if (input.empty()) throw std::invalid_argument("--input is required for this command");
    if (!input.empty() && input.front() == '{') return json::parse(input);
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot open input file: " + input);
    json j;
    f >> j;
    return j;
}

struct CommonOpts {
    std::string input;
    std::string format = "json";
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::string precision = "double";
    std::uint64_t seed = 0;
};

QuadratureConfig make_cfg(const CommonOpts& o, const json& j) {
    QuadratureConfig cfg;
    cfg.abs_tol = o.abs_tol;
    cfg.rel_tol = o.rel_tol;
    cfg.seed = o.seed;
    cfg.precision = o.precision == "extended" ? Precision::Extended : Precision::Double;
    if (j.contains("quadrature")) {
        // a quadrature block in the input overrides the flag defaults,
        // except for the seed which always comes from --seed
        cfg = quad_config_from_json(j.at("quadrature"));
        cfg.seed = o.seed;
    }
    cfg.validate();
    return cfg;
}

Precision prec_of(const CommonOpts& o) {
    if (o.precision == "extended") return Precision::Extended;
    if (o.precision == "double") return Precision::Double;
    throw std::invalid_argument("--precision must be double or extended");
}

void emit(const json& j, const CommonOpts& o) {
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        if (j.contains("value")) {
            std::cout << j["value"]["re"].get<double>() << "," << j["value"]["im"].get<double>()
                      << "," << j.value("error_estimate", 0.0) << "\n";
        } else if (j.contains("re")) {
            std::cout << j["re"].get<double>() << "," << j["im"].get<double>() << "\n";
        } else {
            std::cout << j.dump() << "\n";
        }
    } else {
        throw std::invalid_argument("--format must be json or csv");
    }
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double sample_kappa(std::mt19937_64& rng) {
    for (;;) {
        const double k = 2.1 + 7.6 * uniform01(rng);
        bool ok = true;
        for (int q = 1; q <= 12 && ok; ++q)
            if (std::abs(k * q - std::round(k * q)) < 0.02) ok = false;
        if (ok) return k;
    }
}

int cmd_channel(const CommonOpts& o) {
    const json in = load_input(o.input);
    const Channel ch = channel_from_json(in.at("channel"));
    const GenericWeight w = weight_from_json(in.at("weight"));
    const double kappa = in.at("kappa").get<double>();

    const ChannelAnalysis an = analyze(ch, kappa);
    const ExponentVector m = mu(ch, w, kappa);
    const ExponentVector e = eta(m, ch.N, kappa);
    const GenericityReport gr = genericity_check(e, kappa, in.value("genericity_tol", 1e-6));

    json out;
    out["s"] = an.s;
    out["a"] = an.a;
    out["A"] = complex_result(an.A);
    json mu_j = json::array(), eta_j = json::array();
    for (int i = 0; i < ch.N; ++i) {
        mu_j.push_back({m[i].real(), m[i].imag()});
        eta_j.push_back({e[i].real(), e[i].imag()});
    }
    out["mu"] = mu_j;
    out["eta"] = eta_j;
    out["genericity"] = to_json(gr);
    emit(out, o);
    return 0;
}

int cmd_eval(const CommonOpts& o, const std::string& what) {
    const json in = load_input(o.input);
    const Precision prec = prec_of(o);
    json out;
    if (what == "generalized_selberg") {
        const Channel ch = channel_from_json(in.at("channel"));
        const Params par(weight_from_json(in.at("weight")), in.at("kappa").get<double>());
        out = complex_result(generalized_selberg(ch, par, prec));
    } else if (what == "classical_selberg") {
        SelbergParams sp;
        sp.a = Complex(in.at("a").get<double>(), in.value("a_im", 0.0));
        sp.b = Complex(in.at("b").get<double>(), in.value("b_im", 0.0));
        sp.c = Complex(in.value("c", 0.0), in.value("c_im", 0.0));
        sp.m = in.at("m").get<int>();
        out = complex_result(classical_selberg_ordered(sp, prec));
    } else if (what == "contour_beta") {
        const Complex a(in.at("a").get<double>(), in.value("a_im", 0.0));
        const Complex b(in.at("b").get<double>(), in.value("b_im", 0.0));
        out = complex_result(contour_beta(a, b, prec));
    } else if (what == "leading_coefficient") {
        const Channel ch = channel_from_json(in.at("channel"));
        const Params par(weight_from_json(in.at("weight")), in.at("kappa").get<double>());
        out = complex_result(leading_coefficient(ch, par, prec));
    } else if (what == "opdam") {
        const Channel ch = channel_from_json(in.at("channel"));
        const double kappa = in.at("kappa").get<double>();
        const GenericWeight w = weight_from_json(in.at("weight"));
        const ExponentVector e = eta(mu(ch, w, kappa), ch.N, kappa);
        out = complex_result(opdam_factor(e, kappa, ch.N, prec));
    } else if (what == "monomial_exponent") {
        const Channel ch = channel_from_json(in.at("channel"));
        const Params par(weight_from_json(in.at("weight")), in.at("kappa").get<double>());
        out = complex_result(monomial_exponent(ch, par));
    } else if (what == "conversion_m2") {
        const GenericWeight w = weight_from_json(in.at("weight"));
        out = complex_result(contour_conversion_m2(w, in.at("kappa").get<double>()));
    } else {
        throw std::invalid_argument("eval: unknown --what " + what);
    }
    emit(out, o);
    return 0;
}

int cmd_oracle(const CommonOpts& o, const std::string& what) {
    const json in = load_input(o.input);
    const QuadratureConfig cfg = make_cfg(o, in);
    json out;
    if (what == "simplex") {
        SelbergParams sp;
        sp.a = Complex(in.at("a").get<double>(), in.value("a_im", 0.0));
        sp.b = Complex(in.at("b").get<double>(), in.value("b_im", 0.0));
        sp.c = Complex(in.value("c", 0.0), in.value("c_im", 0.0));
        sp.m = in.at("m").get<int>();
        out = to_json(quad_simplex_selberg(sp, cfg));
    } else if (what == "loop") {
        PowerProduct pp;
        for (const auto& f : in.at("factors")) {
            const std::string kind = f.at("kind").get<std::string>();
            const Complex e(f.at("exponent").get<double>(), f.value("exponent_im", 0.0));
            if (kind == "t")
                pp.factors.push_back(PowerFactor::t_pow(e));
            else if (kind == "point_minus_t")
                pp.factors.push_back(
                    PowerFactor::point_minus(Complex(f.at("point").get<double>(), 0.0), e));
            else if (kind == "t_minus_point")
                pp.factors.push_back(
                    PowerFactor::minus_point(Complex(f.at("point").get<double>(), 0.0), e));
            else
                throw std::invalid_argument("loop factor kind must be t, point_minus_t or t_minus_point");
        }
        CycleSpec cyc;
        cyc.base_point = Complex(in.value("base_point", 1.0), 0.0);
        for (const auto& c : in.value("enclosed_points", std::vector<double>{}))
            cyc.enclosed_points.push_back(Complex(c, 0.0));
        out = to_json(quad_loop(pp, cyc, cfg));
    } else if (what == "channel") {
        const Channel ch = channel_from_json(in.at("channel"));
        const Params par(weight_from_json(in.at("weight")), in.at("kappa").get<double>());
        out = to_json(quad_channel_integral(ch, par, in.at("z").get<std::vector<double>>(), cfg));
    } else if (what == "collapse") {
        const Channel ch = channel_from_json(in.at("channel"));
        const Params par(weight_from_json(in.at("weight")), in.at("kappa").get<double>());
        out = to_json(channel_collapse_limit(ch, par, cfg));
    } else if (what == "probe") {
        const Channel ch = channel_from_json(in.at("channel"));
        const Params par(weight_from_json(in.at("weight")), in.at("kappa").get<double>());
        const ExponentVector est =
            probe_exponents(ch, par, in.at("z").get<std::vector<double>>(),
                            in.value("scale_factors", std::vector<double>{}), cfg);
        json arr = json::array();
        for (int i = 0; i < est.size(); ++i) arr.push_back({est[i].real(), est[i].imag()});
        out["mu_estimate"] = arr;
    } else {
        throw std::invalid_argument("oracle: unknown --what " + what);
    }
    emit(out, o);
    return 0;
}

struct SuiteRow {
    std::string name;
    double residual;
    double threshold;
    double parameter;
};

int cmd_verify(const CommonOpts& o, const std::string& suite, int samples,
               const std::string& plot_path) {
    std::mt19937_64 rng(o.seed == 0 ? 0x5eed : o.seed);
    const Precision prec = prec_of(o);
    std::vector<SuiteRow> rows;

    const auto run_example2 = [&] {
        for (int it = 0; it < samples; ++it) {
            const double kappa = sample_kappa(rng);
            const GenericWeight lam({-(0.1 + 0.8 * uniform01(rng)) * kappa});
            const IdentityReport rep = channel_consistency({2, 1, 1}, 1, lam, kappa, prec);
            rows.push_back({"example2", rep.rel_residual, 1e-10, kappa});
        }
    };
    const auto run_section4 = [&] {
        for (int it = 0; it < samples; ++it) {
            const double kappa = sample_kappa(rng);
            const GenericWeight lam({-(0.1 + 0.8 * uniform01(rng)) * kappa});
            const IdentityReport rep = section4_chain(lam, kappa, prec);
            rows.push_back({"section4", rep.rel_residual, 1e-10, kappa});
        }
    };
    const auto run_four_index = [&] {
        for (int M = 0; M <= 6; ++M) {
            for (int it = 0; it < samples; ++it) {
                const double kappa = sample_kappa(rng);
                const GenericWeight lam({(0.1 + 0.5 * uniform01(rng)) * kappa,
                                         -(0.1 + 0.5 * uniform01(rng)) * kappa});
                const IdentityReport rep = four_index_check(lam, kappa, M, prec);
                rows.push_back({"four_index_M" + std::to_string(M), rep.rel_residual, 1e-9, kappa});
            }
        }
    };
    const auto run_three_index = [&] {
        for (int M = 1; M <= 6; ++M) {
            for (int it = 0; it < samples; ++it) {
                const double kappa = sample_kappa(rng);
                const GenericWeight lam({-(0.1 + 0.8 * uniform01(rng)) * kappa});
                const IdentityReport rep = three_index_check(lam, kappa, M, prec);
                rows.push_back({"three_index_M" + std::to_string(M), rep.abs_residual, 1e-9, kappa});
            }
        }
    };
    const auto run_monomial = [&] {
        for (int it = 0; it < samples; ++it) {
            const double kappa = sample_kappa(rng);
            const GenericWeight lam({-(0.1 + 0.8 * uniform01(rng)) * kappa,
                                     -(0.1 + 0.8 * uniform01(rng)) * kappa,
                                     -(0.1 + 0.8 * uniform01(rng)) * kappa});
            for (int n = 1; n <= 3; ++n) {
                for (int N = 2; N <= 4; ++N) {
                    const Channel ch(std::vector<int>(static_cast<size_t>(N), n + 1), n);
                    const ExponentVector e = eta(mu(ch, lam, kappa), N, kappa);
                    const double dev =
                        std::abs(opdam_factor(e, kappa, N, prec) - Complex(1.0, 0.0));
                    rows.push_back({"monomial_opdam_n" + std::to_string(n) + "_N" + std::to_string(N),
                                    dev, 1e-12, kappa});
                }
            }
        }
    };
    const auto run_series = [&] {
        for (int it = 0; it < samples; ++it) {
            const double kappa = sample_kappa(rng);
            const GenericWeight lam(
                {-(0.1 + 0.8 * uniform01(rng)) * kappa, -(0.1 + 0.8 * uniform01(rng)) * kappa});
            rows.push_back({"series_vs_2f1", series_vs_2f1(lam, kappa, 8), 1e-10, kappa});
            const Channel ch({3, 2}, 2);
            const ExponentVector e = eta(mu(ch, lam, kappa), 2, kappa);
            const TruncatedSeries s = hc_series(e, 1.0 / kappa, 8);
            for (const Complex zeta : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(-0.7, 0.0)}) {
                const EigenReport rep = sekiguchi_eigencheck(s, e, zeta, 1.0 / kappa);
                rows.push_back({"sekiguchi_zeta" + std::to_string(zeta.real()), rep.max_residual,
                                1e-9, kappa});
            }
        }
    };

    if (suite == "example2") run_example2();
    else if (suite == "section4") run_section4();
    else if (suite == "four_index") run_four_index();
    else if (suite == "three_index") run_three_index();
    else if (suite == "monomial") run_monomial();
    else if (suite == "series") run_series();
    else if (suite == "all") {
        run_example2();
        run_section4();
        run_four_index();
        run_three_index();
        run_monomial();
        run_series();
    } else {
        throw std::invalid_argument("verify: unknown suite " + suite);
    }

    int failures = 0;
    for (const SuiteRow& r : rows) {
        const bool ok = r.residual <= r.threshold;
        failures += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << r.name << " residual=" << r.residual
                  << " threshold=" << r.threshold << "\n";
    }
    std::cout << (failures == 0 ? "OK" : "FAILED") << " (" << rows.size() << " checks, "
              << failures << " failures)\n";

    if (!plot_path.empty()) {
        std::ofstream f(plot_path);
        f << "name,parameter,residual,threshold\n";
        for (const SuiteRow& r : rows)
            f << r.name << "," << r.parameter << "," << r.residual << "," << r.threshold << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_series(const CommonOpts& o) {
    const json in = load_input(o.input);
    const GenericWeight w = weight_from_json(in.at("weight"));
    const double kappa = in.at("kappa").get<double>();
    const int order = in.value("order", 8);

    const Channel ch = in.contains("channel") ? channel_from_json(in.at("channel"))
                                              : Channel({3, 2}, 2);
    const ExponentVector e = eta(mu(ch, w, kappa), ch.N, kappa);
    const TruncatedSeries s = hc_series(e, 1.0 / kappa, order);
    json out;
    out["series"] = to_json(s);
    if (ch.N == 2) {
        json checks = json::array();
        for (const auto& zj : in.value("zeta", std::vector<double>{0.0, 1.0, -0.7})) {
            const EigenReport rep = sekiguchi_eigencheck(s, e, Complex(zj, 0.0), 1.0 / kappa);
            checks.push_back({{"zeta", zj},
                              {"max_residual", rep.max_residual},
                              {"eigenvalue", complex_result(rep.eigenvalue)}});
        }
        out["eigenchecks"] = checks;
    }
    emit(out, o);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Selberg closed forms and verification oracles"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string what;
    std::string suite = "all";
    std::string plot_path;
    int samples = 10;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opts.input, "input file path or inline JSON");
        cmd->add_option("--format", opts.format, "output format: json or csv");
        cmd->add_option("--abs-tol", opts.abs_tol, "quadrature absolute tolerance");
        cmd->add_option("--rel-tol", opts.rel_tol, "quadrature relative tolerance");
        cmd->add_option("--precision", opts.precision, "double or extended");
        cmd->add_option("--seed", opts.seed, "seed for sampling and Monte Carlo");
    };

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate a closed form");
    add_common(c_eval);
    c_eval->add_option("--what", what, "generalized_selberg | classical_selberg | contour_beta | "
                                       "leading_coefficient | opdam | monomial_exponent | conversion_m2")
        ->required();

    CLI::App* c_oracle = app.add_subcommand("oracle", "run a quadrature oracle");
    add_common(c_oracle);
    c_oracle->add_option("--what", what, "simplex | loop | channel | collapse | probe")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    add_common(c_verify);
    c_verify->add_option("--suite", suite,
                         "example2 | section4 | four_index | three_index | monomial | series | all");
    c_verify->add_option("--samples", samples, "parameter sets per check");
    c_verify->add_option("--emit-plot-data", plot_path, "write residual-vs-parameter CSV here");

    CLI::App* c_channel = app.add_subcommand("channel", "inspect a fusion path");
    add_common(c_channel);

    CLI::App* c_series = app.add_subcommand("series", "dump a truncated series and eigenchecks");
    add_common(c_series);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_eval->parsed()) return cmd_eval(opts, what);
        if (c_oracle->parsed()) return cmd_oracle(opts, what);
        if (c_verify->parsed()) return cmd_verify(opts, suite, samples, plot_path);
        if (c_channel->parsed()) return cmd_channel(opts);
        if (c_series->parsed()) return cmd_series(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const gsel::PoleError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
