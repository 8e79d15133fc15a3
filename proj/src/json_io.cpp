#include "gsel/json_io.hpp"

#include <cmath>

namespace gsel {

json to_json(const Channel& ch) {
    return json{{"I", ch.I}, {"n", ch.n}, {"N", ch.N}};
}

Channel channel_from_json(const json& j) {
    Channel ch;
    ch.I = j.at("I").get<std::vector<int>>();
    ch.n = j.at("n").get<int>();
    ch.N = j.contains("N") ? j.at("N").get<int>() : static_cast<int>(ch.I.size());
    ch.validate();
    return ch;
}

json to_json(const GenericWeight& w) {
    return json{{"pairings", w.pairings}};
}

GenericWeight weight_from_json(const json& j) {
    return GenericWeight(j.at("pairings").get<std::vector<double>>());
}

json to_json(const QuadratureConfig& cfg) {
    return json{{"abs_tol", cfg.abs_tol},
                {"rel_tol", cfg.rel_tol},
                {"max_depth", cfg.max_depth},
                {"precision", cfg.precision == Precision::Extended ? "extended" : "double"},
                {"seed", cfg.seed}};
}

QuadratureConfig quad_config_from_json(const json& j) {
    QuadratureConfig cfg;
    if (j.contains("abs_tol")) cfg.abs_tol = j.at("abs_tol").get<double>();
    if (j.contains("rel_tol")) cfg.rel_tol = j.at("rel_tol").get<double>();
    if (j.contains("max_depth")) cfg.max_depth = j.at("max_depth").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("precision")) {
        const std::string p = j.at("precision").get<std::string>();
        if (p == "extended")
            cfg.precision = Precision::Extended;
        else if (p == "double")
            cfg.precision = Precision::Double;
        else
            throw std::invalid_argument("precision must be 'double' or 'extended'");
    }
    cfg.validate();
    return cfg;
}

json complex_result(const Complex& z) {
    return json{{"re", z.real()},
                {"im", z.imag()},
                {"log_modulus", std::log(std::abs(z))},
                {"phase", std::arg(z)}};
}

json to_json(const IdentityReport& rep) {
    return json{{"lhs", complex_result(rep.lhs)},
                {"rhs", complex_result(rep.rhs)},
                {"abs_residual", rep.abs_residual},
                {"rel_residual", rep.rel_residual},
                {"parameters", rep.parameters}};
}

json to_json(const GenericityReport& rep) {
    json j{{"pass", rep.pass},
           {"tol", rep.tol},
           {"min_pair_distance", rep.min_pair_distance},
           {"min_root_distance", rep.min_root_distance}};
    if (!rep.pass) j["offending_pair"] = {rep.bad_s, rep.bad_j};
    return j;
}

json to_json(const QuadResult& res) {
    return json{{"value", complex_result(res.value)},
                {"error_estimate", res.error_estimate},
                {"mc_fallback", res.mc_fallback},
                {"levels_used", res.levels_used}};
}

json to_json(const TruncatedSeries& s) {
    json be = json::array();
    for (int i = 0; i < s.base_exponent.size(); ++i)
        be.push_back({s.base_exponent[i].real(), s.base_exponent[i].imag()});
    json coeffs = json::array();
    for (const auto& [idx, c] : s.coeffs)
        coeffs.push_back({idx, c.real(), c.imag()});
    return json{{"base_exponent", be}, {"order", s.order}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
    TruncatedSeries s;
    std::vector<Complex> be;
    for (const auto& e : j.at("base_exponent"))
        be.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    s.base_exponent = ExponentVector(std::move(be));
    s.order = j.at("order").get<int>();
    for (const auto& row : j.at("coeffs")) {
        const MultiIndex idx = row.at(0).get<MultiIndex>();
        s.coeffs[idx] = Complex(row.at(1).get<double>(), row.at(2).get<double>());
    }
    return s;
}

} // namespace gsel
