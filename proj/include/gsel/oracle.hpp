#pragma once

#include "gsel/closedform.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gsel {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 8;          // highest tanh-sinh level in the doubling ladder
    Precision precision = Precision::Double;
    std::uint64_t seed = 0;     // Monte Carlo fallback only

    void validate() const;
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    bool mc_fallback = false;
    int levels_used = 0;
};

enum class CycleKind { ordered_simplex, loop_around_origin, nested_loops };

struct CycleSpec {
    CycleKind kind = CycleKind::loop_around_origin;
    Complex base_point{1.0, 0.0};
    std::vector<Complex> enclosed_points; // not counting the origin

    void validate() const; // loop kinds need |base_point| > max |enclosed|
};

/// One multiplicative factor of a power-product integrand in a single
/// complex variable t.
struct PowerFactor {
    enum class Kind { variable, point_minus_t, t_minus_point };
    Kind kind = Kind::variable;
    Complex point{0.0, 0.0};
    Complex exponent{0.0, 0.0};

    static PowerFactor t_pow(Complex e) { return {Kind::variable, {0.0, 0.0}, e}; }
    static PowerFactor point_minus(Complex c, Complex e) { return {Kind::point_minus_t, c, e}; }
    static PowerFactor minus_point(Complex c, Complex e) { return {Kind::t_minus_point, c, e}; }
};

struct PowerProduct {
    std::vector<PowerFactor> factors;
};

/// Ordered-domain Selberg integral 0 <= t_1 <= ... <= t_m <= 1 of
/// prod t_i^{a-1} (1-t_i)^{b-1} prod_{i<j} |t_i - t_j|^{2c}, m <= 3.
/// Endpoint singularities are resolved by the doubly-exponential substitution;
/// levels double until the step is below tolerance. If the ladder is exhausted
/// at m = 3, falls back to Beta-proposal importance sampling (flagged).
QuadResult quad_simplex_selberg(const SelbergParams& sp, const QuadratureConfig& cfg);

/// Integral of the power product along the loop t(theta) = r(theta) e^{i theta},
/// theta in (0, 2 pi), r interpolating from the base point inward to
/// max(base/2, 1.1 * max enclosed modulus). Each factor's branch is continued
/// continuously from its principal value at theta = 0+. Requires a real
/// positive base point; every factor point must be the base point itself,
/// strictly inside the loop, or strictly outside it.
QuadResult quad_loop(const PowerProduct& integrand, const CycleSpec& cyc,
                     const QuadratureConfig& cfg);

/// Channel integral at marked points 0 < z_1 < ... < z_N, measure dt/t folded
/// into the t-exponents. Supported cycles:
///  (i) exactly one integration variable (one i_j = 2, rest 1, n = 1):
///      loop based at z_j enclosing the origin and z_1 .. z_{j-1};
///  (ii) all-equal channels with n = 1 and N <= 3: real ordered simplex
///      0 <= t_1 <= ... <= t_m <= z_1.
/// Anything else throws std::invalid_argument naming the supported kinds.
QuadResult quad_channel_integral(const Channel& ch, const Params& p,
                                 const std::vector<double>& z,
                                 const QuadratureConfig& cfg);

/// z -> 1 collapse of the all-equal N = 2 channel, via a geometric ladder
/// z = (1 - delta, 1) and Richardson extrapolation over the known correction
/// exponents {1 - 2/kappa, 1, 2(1 - 2/kappa)}.
QuadResult channel_collapse_limit(const Channel& ch, const Params& p,
                                  const QuadratureConfig& cfg);

/// Scaling-slope estimate of the leading exponents, generic evaluator form:
/// mu_hat_j = log(F(z with z_j scaled) / F(z)) / log(scale). The test hook for
/// exact power functions enters here.
ExponentVector probe_exponents_fn(
    const std::function<Complex(const std::vector<double>&)>& eval,
    const std::vector<double>& z_base, const std::vector<double>& scale_factors);

/// Exponent probe backed by quad_channel_integral. Single-variable channels
/// scale one z_j at a time; all-equal channels use one global scaling (the
/// slope divided by N, which the monomial structure makes exact).
/// Requires >= 10x separation between consecutive z before and after scaling.
ExponentVector probe_exponents(const Channel& ch, const Params& p,
                               const std::vector<double>& z_base,
                               const std::vector<double>& scale_factors,
                               const QuadratureConfig& cfg);

} // namespace gsel
