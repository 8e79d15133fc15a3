#include "gsel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gsel {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------- tanh-sinh

struct TSNode {
    double x;  // node in (0,1)
    double xc; // 1 - x, computed without cancellation
    double w;  // weight (jacobian * step)
};

// Level L has step h = tmax / (8 * 2^L); the grids nest.
const std::vector<TSNode>& ts_level(int level) {
    static std::map<int, std::vector<TSNode>> cache;
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;

    const double tmax = 6.5;
    const double h = tmax / (8.0 * std::pow(2.0, level));
    std::vector<TSNode> nodes;
    const int kmax = static_cast<int>(tmax / h);
    nodes.reserve(static_cast<size_t>(2 * kmax + 1));
    for (int k = -kmax; k <= kmax; ++k) {
        const double t = k * h;
        const double s = std::sinh(t) * kPi / 2.0;
        if (std::abs(s) > 350.0) continue;
        const double e = std::exp(-2.0 * s);
        const double x = 1.0 / (1.0 + e);
        const double xc = e / (1.0 + e);
        const double dx = (kPi / 4.0) * std::cosh(t) / (std::cosh(s) * std::cosh(s));
        if (x <= 0.0 || xc <= 0.0 || dx < 1e-320) continue;
        nodes.push_back({x, xc, dx * h});
    }
    return cache.emplace(level, std::move(nodes)).first->second;
}

template <typename F>
auto integrate01(const F& f, int level) -> decltype(f(0.5, 0.5)) {
    using R = decltype(f(0.5, 0.5));
    R total{};
    for (const TSNode& nd : ts_level(level)) total += nd.w * f(nd.x, nd.xc);
    return total;
}

// Ladder of doubling levels; converged when the step between consecutive
// levels is inside tolerance.
template <typename EvalLevel>
QuadResult ladder(const EvalLevel& eval, const QuadratureConfig& cfg, int start_level) {
    QuadResult res;
    res.error_estimate = std::numeric_limits<double>::infinity(); // until two levels compare
    Complex prev(0.0, 0.0);
    bool have_prev = false;
    for (int lev = start_level; lev <= cfg.max_depth; ++lev) {
        const Complex cur = eval(lev);
        res.value = cur;
        res.levels_used = lev;
        if (have_prev) {
            res.error_estimate = std::abs(cur - prev);
            if (res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur)))
                return res;
        }
        prev = cur;
        have_prev = true;
    }
    return res; // caller decides whether the final estimate is acceptable
}

bool converged(const QuadResult& r, const QuadratureConfig& cfg) {
    return r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)) &&
           r.levels_used > 0;
}

// ------------------------------------------------- simplex-type integrands

bool is_real(const SelbergParams& sp) {
    return sp.a.imag() == 0.0 && sp.b.imag() == 0.0 && sp.c.imag() == 0.0;
}

// prod t_i^{a-1}(1-t_i)^{b-1} prod_{i<j}(t_j - t_i)^{2c} over the ordered
// simplex, nested scaled variables; V is double (real exponents) or Complex.
template <typename V>
Complex simplex_value(const SelbergParams& sp, int level) {
    const auto pw = [](double x, Complex e) -> V {
        if constexpr (std::is_same_v<V, double>)
            return std::pow(x, e.real());
        else
            return std::pow(Complex(x, 0.0), e);
    };
    const Complex am1 = sp.a - 1.0;
    const Complex bm1 = sp.b - 1.0;
    const Complex c2 = 2.0 * sp.c;

    if (sp.m == 1) {
        const auto f = [&](double x, double xc) -> V { return pw(x, am1) * pw(xc, bm1); };
        const V v = integrate01(f, level);
        return Complex(v);
    }
    if (sp.m == 2) {
        const auto outer = [&](double x2, double x2c) -> V {
            const double t2 = x2;
            const auto in = [&](double s, double sc) -> V {
                const double t1 = t2 * s;
                const double d21 = t2 * sc; // t2 - t1
                if (t1 <= 0.0 || d21 <= 0.0) return V{};
                const double t1c = x2c + d21; // 1 - t1
                return pw(t1, am1) * pw(t1c, bm1) * pw(d21, c2) * t2;
            };
            return pw(t2, am1) * pw(x2c, bm1) * integrate01(in, level);
        };
        return Complex(integrate01(outer, level));
    }
    // m == 3; inner-grid powers of s and (1-s) are level-constant, cache them.
    const std::vector<TSNode>& grid = ts_level(level);
    std::vector<V> s_pow(grid.size()), sc_pow(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        s_pow[i] = pw(grid[i].x, am1);
        sc_pow[i] = pw(grid[i].xc, c2);
    }
    const auto f3 = [&](double x3, double x3c) -> V {
        const double t3 = x3;
        const auto f2 = [&](double x2, double x2c) -> V {
            const double t2 = t3 * x2;
            const double d32 = t3 * x2c; // t3 - t2
            if (t2 <= 0.0 || d32 <= 0.0) return V{};
            const double t2c = x3c + d32; // 1 - t2
            V inner{};
            for (size_t i = 0; i < grid.size(); ++i) {
                const double s = grid[i].x;
                const double t1 = t2 * s;
                const double d21 = t2 * grid[i].xc; // t2 - t1
                const double d31 = d32 + d21;       // t3 - t1
                if (t1 <= 0.0 || d21 <= 0.0) continue;
                const double t1c = t2c + d21; // 1 - t1
                inner += grid[i].w * (s_pow[i] * pw(t1c, bm1) * sc_pow[i] * pw(d31, c2));
            }
            // t1^{a-1} = t2^{a-1} s^{a-1} and (t2-t1)^{2c} = t2^{2c} (1-s)^{2c},
            // on top of t2's own t2^{a-1}: collected power 2(a-1) + 2c
            return pw(t2, 2.0 * am1 + c2) * pw(t2c, bm1) * pw(d32, c2) * inner * t2;
        };
        return pw(t3, am1) * pw(x3c, bm1) * integrate01(f2, level) * t3;
    };
    return Complex(integrate01(f3, level));
}

QuadResult simplex_mc_fallback(const SelbergParams& sp, const QuadratureConfig& cfg) {
    // Beta(Re a, Re b) proposals, i.i.d. then sorted; density on the ordered
    // simplex is m! * prod beta_pdf(t_i).
    const int m = sp.m;
    const double ah = std::max(0.05, sp.a.real());
    const double bh = std::max(0.05, sp.b.real());
    std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL);
    std::gamma_distribution<double> ga(ah, 1.0), gb(bh, 1.0);
    const double log_beta_norm =
        std::lgamma(ah) + std::lgamma(bh) - std::lgamma(ah + bh);
    double log_mfact = 0.0;
    for (int i = 2; i <= m; ++i) log_mfact += std::log(static_cast<double>(i));

    const long samples = 2000000;
    Complex sum(0.0, 0.0), sums(0.0, 0.0);
    std::vector<double> t(static_cast<size_t>(m));
    for (long it = 0; it < samples; ++it) {
        for (int i = 0; i < m; ++i) {
            const double u = ga(rng), v = gb(rng);
            t[static_cast<size_t>(i)] = u / (u + v);
        }
        std::sort(t.begin(), t.end());
        Complex lg(0.0, 0.0);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (t[static_cast<size_t>(i)] <= 0.0 || t[static_cast<size_t>(i)] >= 1.0) ok = false;
            else {
                lg += (sp.a - ah) * std::log(t[static_cast<size_t>(i)]);
                lg += (sp.b - bh) * std::log(1.0 - t[static_cast<size_t>(i)]);
                lg += Complex(log_beta_norm, 0.0);
            }
        }
        if (!ok) continue;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                lg += 2.0 * sp.c * std::log(t[static_cast<size_t>(j)] - t[static_cast<size_t>(i)]);
        const Complex val = std::exp(lg - Complex(log_mfact, 0.0));
        sum += val;
        sums += Complex(std::norm(val), 0.0);
    }
    QuadResult res;
    res.value = sum / static_cast<double>(samples);
    const double var =
        std::max(0.0, sums.real() / samples - std::norm(res.value)) / samples;
    res.error_estimate = 3.0 * std::sqrt(var);
    res.mc_fallback = true;
    return res;
}

// --------------------------------------------------------------- loop paths

struct LoopGeometry {
    double base = 1.0;
    double r_mid = 0.5;
    double dr = 0.5;

    // sin(theta/2), cos(theta/2), with the short side computed from
    // whichever of theta, 2 pi - theta is smaller.
    void half_angle(double th, double thc, double& s2, double& c2) const {
        if (th <= kPi) {
            s2 = std::sin(th / 2.0);
            c2 = std::cos(th / 2.0);
        } else {
            s2 = std::sin(thc / 2.0);
            c2 = -std::cos(thc / 2.0);
        }
    }
    double radius(double s2) const { return base - dr * s2 * s2; }
};

enum class FactorClass { variable, base_point, inside, outside };

struct LoopFactor {
    PowerFactor spec;
    FactorClass cls = FactorClass::variable;
    double arg_offset = 0.0; // anchors the continuous arg to principal at theta -> 0+
};

// log magnitude and continuous argument of one factor at angle theta.
void factor_log(const LoopFactor& f, const LoopGeometry& g, double th, double thc,
                double s2, double c2, double r, const Complex& t, double& log_mag,
                double& arg) {
    switch (f.cls) {
        case FactorClass::variable: {
            log_mag = std::log(r);
            arg = (th <= kPi) ? th : 2.0 * kPi - thc;
            break;
        }
        case FactorClass::base_point: {
            // base - t = e^{i th/2} [ (base - r) cos(th/2) - i (base + r) sin(th/2) ]
            const Complex W(g.dr * s2 * s2 * c2, -(g.base + r) * s2);
            log_mag = std::log(std::abs(W));
            arg = ((th <= kPi) ? th : 2.0 * kPi - thc) / 2.0 + std::arg(W);
            break;
        }
        case FactorClass::inside: {
            // t - c = t (1 - c/t); arg(1 - c/t) stays principal since |c/t| < 1
            const Complex w = 1.0 - f.spec.point / t;
            log_mag = std::log(r) + std::log(std::abs(w));
            arg = ((th <= kPi) ? th : 2.0 * kPi - thc) + std::arg(w);
            break;
        }
        case FactorClass::outside: {
            // c - t = c (1 - t/c)
            const Complex w = 1.0 - t / f.spec.point;
            log_mag = std::log(std::abs(f.spec.point)) + std::log(std::abs(w));
            arg = std::arg(w);
            break;
        }
    }
    arg += f.arg_offset;
}

// Wrap into (-pi, pi].
double wrap_principal(double x) {
    double w = std::remainder(x, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

std::vector<LoopFactor> classify_factors(const PowerProduct& integrand,
                                         const LoopGeometry& g) {
    std::vector<LoopFactor> out;
    out.reserve(integrand.factors.size());
    for (const PowerFactor& pf : integrand.factors) {
        LoopFactor lf;
        lf.spec = pf;
        if (pf.kind == PowerFactor::Kind::variable) {
            lf.cls = FactorClass::variable;
        } else {
            const double ac = std::abs(pf.point);
            if (std::abs(pf.point - Complex(g.base, 0.0)) <= 1e-14 * g.base)
                lf.cls = FactorClass::base_point;
            else if (ac <= g.r_mid / 1.05)
                lf.cls = FactorClass::inside;
            else if (ac >= 1.05 * g.base)
                lf.cls = FactorClass::outside;
            else {
                std::ostringstream os;
                os << "quad_loop: factor point with modulus " << ac
                   << " is too close to the contour (r in [" << g.r_mid << ", " << g.base
                   << "])";
                throw std::invalid_argument(os.str());
            }
        }
        out.push_back(lf);
    }
    // The formulas in factor_log describe a natural orientation per class
    // (t, base - t, t - c inside, c - t outside). Anchor each factor to the
    // principal branch at theta -> 0+, folding in the pi flip when the
    // requested orientation is the opposite one.
    const double th0 = 1e-12;
    const double thc0 = 2.0 * kPi - th0;
    double s2, c2;
    g.half_angle(th0, thc0, s2, c2);
    const double r = g.radius(s2);
    const Complex t = r * std::exp(Complex(0.0, th0));
    for (LoopFactor& lf : out) {
        bool flip = false;
        if (lf.cls == FactorClass::inside)
            flip = (lf.spec.kind == PowerFactor::Kind::point_minus_t);
        else if (lf.cls == FactorClass::outside || lf.cls == FactorClass::base_point)
            flip = (lf.spec.kind == PowerFactor::Kind::t_minus_point);
        double lm = 0.0, ar = 0.0;
        factor_log(lf, g, th0, thc0, s2, c2, r, t, lm, ar);
        const double natural = ar + (flip ? kPi : 0.0);
        lf.arg_offset = wrap_principal(natural) - ar;
    }
    return out;
}

Complex loop_value(const std::vector<LoopFactor>& factors, const LoopGeometry& g,
                   int level) {
    Complex total(0.0, 0.0);
    for (const TSNode& nd : ts_level(level)) {
        const double th = 2.0 * kPi * nd.x;
        const double thc = 2.0 * kPi * nd.xc;
        double s2, c2;
        g.half_angle(th, thc, s2, c2);
        const double r = g.radius(s2);
        const Complex eith = std::exp(Complex(0.0, th <= kPi ? th : -(thc)));
        const Complex t = r * eith;
        Complex lg(0.0, 0.0);
        for (const LoopFactor& lf : factors) {
            double lm = 0.0, ar = 0.0;
            factor_log(lf, g, th, thc, s2, c2, r, t, lm, ar);
            lg += lf.spec.exponent * Complex(lm, ar);
        }
        const double drdth = -g.dr * s2 * c2; // d/dth [base - dr sin^2(th/2)]
        const Complex dt = Complex(drdth, r) * eith;
        const double lw = std::log(nd.w) + lg.real();
        if (lw < -745.0) continue; // contribution below double underflow
        if (lg.real() > 700.0)
            throw std::runtime_error("quad_loop: integrand overflow near the base point "
                                     "(exponent too close to -1)");
        total += nd.w * std::exp(lg) * dt * (2.0 * kPi);
    }
    return total;
}

// ----------------------------------------------------- channel simplex form

// All-equal channel integrand over the ordered simplex [0, z_1]:
// prod t_i^{a-1} prod_{i,j} (z_j - t_i)^{-1/kappa} prod_{i<j} (t_j - t_i)^{2/kappa}
// with a = (lambda, -alpha_1)/kappa (measure dt/t folded in).
Complex channel_simplex_value(const Params& p, const std::vector<double>& z, int m,
                              int level) {
    const double kappa = p.kappa;
    const double a = -p.lambda.pair_sum(1, 1) / kappa;
    const double c2 = 2.0 / kappa;
    const double mk = -1.0 / kappa;
    const double z1 = z.front();

    // f(t, z1 - t) with stable complements relative to z1
    const auto zfac = [&](double t, double z1c) -> double {
        double out = std::pow(z1c, mk); // the z_1 factor
        for (size_t j = 1; j < z.size(); ++j) out *= std::pow(z[j] - t, mk);
        return out;
    };
    if (m == 1) {
        const auto f = [&](double x, double xc) -> double {
            const double t = z1 * x;
            return std::pow(t, a - 1.0) * zfac(t, z1 * xc) * z1;
        };
        return Complex(integrate01(f, level), 0.0);
    }
    if (m == 2) {
        const auto outer = [&](double x2, double x2c) -> double {
            const double t2 = z1 * x2;
            const double z1c2 = z1 * x2c; // z1 - t2
            const auto in = [&](double s, double sc) -> double {
                const double t1 = t2 * s;
                const double d21 = t2 * sc;
                if (t1 <= 0.0 || d21 <= 0.0) return 0.0;
                return std::pow(t1, a - 1.0) * zfac(t1, z1c2 + d21) * std::pow(d21, c2) * t2;
            };
            return std::pow(t2, a - 1.0) * zfac(t2, z1c2) * integrate01(in, level) * z1;
        };
        return Complex(integrate01(outer, level), 0.0);
    }
    // m == 3
    const auto f3 = [&](double x3, double x3c) -> double {
        const double t3 = z1 * x3;
        const double z1c3 = z1 * x3c;
        const auto f2 = [&](double x2, double x2c) -> double {
            const double t2 = t3 * x2;
            const double d32 = t3 * x2c;
            if (t2 <= 0.0 || d32 <= 0.0) return 0.0;
            const double z1c2 = z1c3 + d32;
            const auto f1 = [&](double s, double sc) -> double {
                const double t1 = t2 * s;
                const double d21 = t2 * sc;
                if (t1 <= 0.0 || d21 <= 0.0) return 0.0;
                return std::pow(t1, a - 1.0) * zfac(t1, z1c2 + d21) * std::pow(d21, c2) *
                       std::pow(d32 + d21, c2) * t2;
            };
            return std::pow(t2, a - 1.0) * zfac(t2, z1c2) * std::pow(d32, c2) *
                   integrate01(f1, level) * t3;
        };
        return std::pow(t3, a - 1.0) * zfac(t3, z1c3) * integrate01(f2, level) * z1;
    };
    return Complex(integrate01(f3, level), 0.0);
}

void check_ordered(const std::vector<double>& z) {
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i] <= 0.0) throw std::invalid_argument("channel integral: z must be positive");
        if (i > 0 && z[i] <= z[i - 1])
            throw std::invalid_argument("channel integral: z must be strictly increasing");
    }
}

int single_variable_position(const Channel& ch) {
    int pos = -1;
    for (int j = 1; j <= ch.N; ++j) {
        const int ij = ch.I[static_cast<size_t>(j - 1)];
        if (ij == 2) {
            if (pos != -1) return -1;
            pos = j;
        } else if (ij != 1) {
            return -1;
        }
    }
    return pos;
}

} // namespace

void QuadratureConfig::validate() const {
    if (abs_tol <= 0.0 || rel_tol <= 0.0)
        throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
    if (max_depth < 1) throw std::invalid_argument("QuadratureConfig: max_depth must be >= 1");
}

void CycleSpec::validate() const {
    if (kind == CycleKind::ordered_simplex) return;
    const double b = std::abs(base_point);
    for (const Complex& c : enclosed_points)
        if (std::abs(c) >= b)
            throw std::invalid_argument(
                "CycleSpec: loop kinds need |base_point| > max |enclosed_points|");
}

QuadResult quad_simplex_selberg(const SelbergParams& sp, const QuadratureConfig& cfg) {
    cfg.validate();
    if (sp.m < 1 || sp.m > 3)
        throw std::invalid_argument("quad_simplex_selberg: m must be in [1, 3]");
    if (sp.a.real() <= 0.0 || sp.b.real() <= 0.0 || sp.c.real() < 0.0)
        throw std::invalid_argument(
            "quad_simplex_selberg: requires Re a > 0, Re b > 0, Re c >= 0");

    const int start = (sp.m == 3) ? 3 : 4;
    const int cap = (sp.m == 3) ? std::min(cfg.max_depth, 5) : cfg.max_depth;
    QuadratureConfig capped = cfg;
    capped.max_depth = cap;
    const auto eval = [&](int lev) {
        return is_real(sp) ? simplex_value<double>(sp, lev) : simplex_value<Complex>(sp, lev);
    };
    QuadResult res = ladder(eval, capped, start);
    if (converged(res, cfg)) return res;
    if (sp.m == 3) return simplex_mc_fallback(sp, cfg);
    throw std::runtime_error("quad_simplex_selberg: tolerance not reached within max_depth");
}

QuadResult quad_loop(const PowerProduct& integrand, const CycleSpec& cyc,
                     const QuadratureConfig& cfg) {
    cfg.validate();
    cyc.validate();
    if (cyc.kind == CycleKind::nested_loops)
        throw std::invalid_argument(
            "quad_loop: nested loop systems are not realized numerically");
    if (cyc.kind == CycleKind::ordered_simplex)
        throw std::invalid_argument("quad_loop: cycle is not a loop");
    if (std::abs(cyc.base_point.imag()) > 1e-14 || cyc.base_point.real() <= 0.0)
        throw std::invalid_argument("quad_loop: base point must be real positive");

    LoopGeometry g;
    g.base = cyc.base_point.real();
    double max_enclosed = 0.0;
    for (const Complex& c : cyc.enclosed_points)
        max_enclosed = std::max(max_enclosed, std::abs(c));
    g.r_mid = std::max(0.5 * g.base, 1.1 * max_enclosed);
    if (g.r_mid >= g.base)
        throw std::invalid_argument("quad_loop: enclosed points leave no room for the loop");
    g.dr = g.base - g.r_mid;

    const std::vector<LoopFactor> factors = classify_factors(integrand, g);
    for (const LoopFactor& lf : factors)
        if (lf.cls == FactorClass::base_point && lf.spec.exponent.real() <= -1.0)
            throw std::invalid_argument(
                "quad_loop: non-integrable base-point exponent (Re <= -1)");

    QuadResult res = ladder([&](int lev) { return loop_value(factors, g, lev); }, cfg, 4);
    if (!converged(res, cfg))
        throw std::runtime_error("quad_loop: tolerance not reached within max_depth");
    return res;
}

QuadResult quad_channel_integral(const Channel& ch, const Params& p,
                                 const std::vector<double>& z,
                                 const QuadratureConfig& cfg) {
    ch.validate();
    cfg.validate();
    if (static_cast<int>(z.size()) != ch.N)
        throw std::invalid_argument("quad_channel_integral: |z| must equal N");
    check_ordered(z);

    const int jstar = single_variable_position(ch);
    if (jstar > 0 && ch.n == 1) {
        // loop based at z_jstar around the origin and z_1 .. z_{jstar-1}
        PowerProduct pp;
        pp.factors.push_back(
            PowerFactor::t_pow(Complex(-p.lambda.pair_sum(1, 1) / p.kappa - 1.0, 0.0)));
        for (double zi : z)
            pp.factors.push_back(
                PowerFactor::point_minus(Complex(zi, 0.0), Complex(-1.0 / p.kappa, 0.0)));
        CycleSpec cyc;
        cyc.kind = CycleKind::loop_around_origin;
        cyc.base_point = Complex(z[static_cast<size_t>(jstar - 1)], 0.0);
        for (int i = 0; i + 1 < jstar; ++i)
            cyc.enclosed_points.push_back(Complex(z[static_cast<size_t>(i)], 0.0));
        return quad_loop(pp, cyc, cfg);
    }
    if (ch.all_equal() && ch.I.front() == 2 && ch.n == 1 && ch.N <= 3) {
        const auto eval = [&](int lev) { return channel_simplex_value(p, z, ch.N, lev); };
        QuadResult res = ladder(eval, cfg, ch.N == 3 ? 3 : 4);
        if (!converged(res, cfg))
            throw std::runtime_error("quad_channel_integral: tolerance not reached");
        return res;
    }
    throw std::invalid_argument(
        "quad_channel_integral: unsupported channel; supported kinds are "
        "(i) single-variable channels (one i_j = 2, rest 1, n = 1) and "
        "(ii) all-equal channels with n = 1 and N <= 3");
}

QuadResult channel_collapse_limit(const Channel& ch, const Params& p,
                                  const QuadratureConfig& cfg) {
    if (!(ch.all_equal() && ch.I.front() == 2 && ch.n == 1 && ch.N == 2))
        throw std::invalid_argument(
            "channel_collapse_limit: only the all-equal N = 2 channel is supported");
    const std::vector<double> deltas = {8e-3, 4e-3, 2e-3, 1e-3};
    std::vector<Complex> vals;
    QuadResult last;
    for (double d : deltas) {
        last = quad_channel_integral(ch, p, {1.0 - d, 1.0}, cfg);
        vals.push_back(last.value);
    }
    // F(d) = F0 + c1 d^{q1} + c2 d^{1} + c3 d^{2 q1}, q1 = 1 - 2/kappa:
    // solve the 4x4 Vandermonde-like system for F0.
    const double q1 = 1.0 - 2.0 / p.kappa;
    const double expo[3] = {q1, 1.0, 2.0 * q1};
    double A[4][5];
    for (int r = 0; r < 4; ++r) {
        A[r][0] = 1.0;
        for (int c = 0; c < 3; ++c) A[r][c + 1] = std::pow(deltas[static_cast<size_t>(r)], expo[c]);
        A[r][4] = vals[static_cast<size_t>(r)].real();
    }
    for (int col = 0; col < 4; ++col) { // Gaussian elimination, partial pivot
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[piv], A[col]);
        for (int r = 0; r < 4; ++r) {
            if (r == col || A[col][col] == 0.0) continue;
            const double f = A[r][col] / A[col][col];
            for (int c = col; c < 5; ++c) A[r][c] -= f * A[col][c];
        }
    }
    QuadResult res;
    res.value = Complex(A[0][4] / A[0][0], 0.0);
    res.levels_used = last.levels_used;
    // conservative: extrapolation residual scale plus the quadrature estimate
    res.error_estimate = std::abs(res.value - vals.back()) *
                             std::pow(deltas.back() / deltas.front(), 1.0) +
                         last.error_estimate;
    return res;
}

ExponentVector probe_exponents_fn(
    const std::function<Complex(const std::vector<double>&)>& eval,
    const std::vector<double>& z_base, const std::vector<double>& scale_factors) {
    if (scale_factors.size() != z_base.size())
        throw std::invalid_argument("probe_exponents_fn: one scale per component");
    const Complex f0 = eval(z_base);
    std::vector<Complex> out(z_base.size());
    for (size_t j = 0; j < z_base.size(); ++j) {
        std::vector<double> z = z_base;
        z[j] *= scale_factors[j];
        const Complex fj = eval(z);
        out[j] = std::log(fj / f0) / std::log(scale_factors[j]);
    }
    return ExponentVector(std::move(out));
}

ExponentVector probe_exponents(const Channel& ch, const Params& p,
                               const std::vector<double>& z_base,
                               const std::vector<double>& scale_factors,
                               const QuadratureConfig& cfg) {
    ch.validate();
    check_ordered(z_base);
    if (static_cast<int>(z_base.size()) != ch.N)
        throw std::invalid_argument("probe_exponents: |z_base| must equal N");
    std::vector<double> scales = scale_factors;
    if (scales.empty()) scales.assign(z_base.size(), 2.0);
    if (scales.size() != z_base.size())
        throw std::invalid_argument("probe_exponents: one scale factor per component");

    if (ch.all_equal() && ch.I.front() == 2) {
        // global scaling; the slope is exact for the monomial structure
        const double sigma = scales.front();
        std::vector<double> zs = z_base;
        for (double& v : zs) v *= sigma;
        const Complex f0 = quad_channel_integral(ch, p, z_base, cfg).value;
        const Complex f1 = quad_channel_integral(ch, p, zs, cfg).value;
        const Complex slope = std::log(f1 / f0) / std::log(sigma);
        std::vector<Complex> out(static_cast<size_t>(ch.N),
                                 slope / static_cast<double>(ch.N));
        return ExponentVector(std::move(out));
    }

    // separation must hold before and after each single-component scaling
    const auto check_sep = [&](const std::vector<double>& z) {
        for (size_t i = 1; i < z.size(); ++i)
            if (z[i] < 10.0 * z[i - 1])
                throw std::domain_error(
                    "probe_exponents: ill-conditioned estimate, need >= 10x separation "
                    "between consecutive z");
    };
    check_sep(z_base);
    for (size_t j = 0; j < z_base.size(); ++j) {
        std::vector<double> z = z_base;
        z[j] *= scales[j];
        check_sep(z);
    }
    return probe_exponents_fn(
        [&](const std::vector<double>& z) { return quad_channel_integral(ch, p, z, cfg).value; },
        z_base, scales);
}

} // namespace gsel
