#include "gsel/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace gsel {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kTwoPiI(0.0, 2.0 * kPi);

Complex unit_phase(double angle) { return std::exp(Complex(0.0, angle)); }
} // namespace

Params::Params(GenericWeight lam, double kappa_) : lambda(std::move(lam)), kappa(kappa_) {
    if (kappa == 0.0) throw std::domain_error("Params: kappa must be nonzero");
    k_coupling = 1.0 / kappa;
}

GammaProduct leading_coefficient_product(const Channel& ch, const Params& p) {
    ch.validate();
    const AmbientData amb = build_ambient(ch.n, ch.N);
    const double kappa = p.kappa;

    GammaProduct gp;
    double phase = 0.0;
    WeightVector H(amb.m_amb); // h_{i_1} + ... + h_{i_{j-1}}
    for (int j = 1; j <= ch.N; ++j) {
        const int ij = ch.I[static_cast<size_t>(j - 1)];
        for (int q = 1; q <= ij - 1; ++q) {
            // q plays the inner role: pairing with alpha_{ij-q} + ... + alpha_{ij-1}
            WeightVector S(amb.m_amb);
            for (int r = ij - q; r <= ij - 1; ++r) S += amb.alpha(r);
            const double x_minus =
                (-p.lambda.pair_sum(ij - q, ij - 1) - boost::rational_cast<double>(inner(H, S))) / kappa;
            const double x_plus = -x_minus;
            phase += kPi * (x_minus - static_cast<double>(q - 1) / kappa);
            gp.num(Complex(1.0 - 1.0 / kappa, 0.0));
            gp.mul(kTwoPiI);
            gp.den(Complex(x_minus - static_cast<double>(q) / kappa + 1.0, 0.0));
            gp.den(Complex(x_plus + static_cast<double>(q - 1) / kappa + 1.0, 0.0));
        }
        H += amb.h(ij);
    }
    gp.mul(unit_phase(phase));
    return gp;
}

Complex leading_coefficient(const Channel& ch, const Params& p, Precision prec) {
    return eval_gamma_product(leading_coefficient_product(ch, p), prec);
}

GammaProduct opdam_product(const ExponentVector& eta_vec, double kappa, int N) {
    if (eta_vec.size() != N) throw std::invalid_argument("opdam_product: length mismatch");
    const ExponentVector r = rho(N, kappa);
    GammaProduct gp;
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            const Complex x = eta_vec[i] - eta_vec[j];
            gp.num(x + 1.0);
            gp.den(x - 1.0 / kappa + 1.0);
            const Complex y = -(r[i] - r[j]);
            gp.den(y + 1.0);
            gp.num(y - 1.0 / kappa + 1.0);
        }
    }
    return gp;
}

Complex opdam_factor(const ExponentVector& eta_vec, double kappa, int N, Precision prec) {
    return eval_gamma_product(opdam_product(eta_vec, kappa, N), prec);
}

Complex collapse_phase(const Channel& ch, double kappa) {
    const ChannelAnalysis an = analyze(ch, kappa);
    return unit_phase(kPi / kappa * static_cast<double>(an.phase_sum));
}

Complex generalized_selberg(const Channel& ch, const Params& p, Precision prec) {
    if (ch.N == 0) return Complex(1.0, 0.0);
    const ExponentVector m = mu(ch, p.lambda, p.kappa);
    const ExponentVector e = eta(m, ch.N, p.kappa);
    GammaProduct gp = leading_coefficient_product(ch, p);
    const GammaProduct op = opdam_product(e, p.kappa, ch.N);
    for (const Complex& z : op.numerator_args) gp.num(z);
    for (const Complex& z : op.denominator_args) gp.den(z);
    gp.mul(op.scalar_prefactor);
    gp.mul(collapse_phase(ch, p.kappa));
    return eval_gamma_product(gp, prec);
}

GammaProduct classical_selberg_product(const SelbergParams& sp) {
    if (sp.m < 1) throw std::invalid_argument("classical_selberg: m must be >= 1");
    GammaProduct gp;
    for (int j = 0; j < sp.m; ++j) {
        const double jd = static_cast<double>(j);
        gp.num(sp.a + jd * sp.c);
        gp.num(sp.b + jd * sp.c);
        gp.den(sp.a + sp.b + static_cast<double>(sp.m + j - 1) * sp.c);
        if (j > 0) { // j = 0 contributes Gamma(c)/Gamma(c)
            gp.num((jd + 1.0) * sp.c);
            gp.den(sp.c);
        }
    }
    return gp;
}

Complex classical_selberg_ordered(const SelbergParams& sp, Precision prec) {
    return eval_gamma_product(classical_selberg_product(sp), prec);
}

Complex contour_beta(Complex a, Complex b, Precision prec) {
    // 1/Gamma(1-a) has a zero when a is a positive integer (single-valued
    // integrand, vanishing loop); switch to the reflected form there.
    const double ar = std::round(a.real());
    if (ar >= 1.0 && std::abs(a.real() - ar) < 0.1 && std::abs(a.imag()) < 0.1) {
        const Complex recip_gamma =
            std::sin(kPi * (1.0 - a)) * std::exp(log_gamma(a, prec)) / kPi;
        return std::exp(Complex(0.0, 1.0) * kPi * a) * kTwoPiI * recip_gamma *
               std::exp(log_gamma(b, prec) - log_gamma(a + b, prec));
    }
    GammaProduct gp;
    gp.num(b);
    gp.den(1.0 - a);
    gp.den(a + b);
    gp.mul(kTwoPiI);
    gp.mul(std::exp(Complex(0.0, 1.0) * kPi * a));
    return eval_gamma_product(gp, prec);
}

Complex contour_conversion_m2(const GenericWeight& lambda, double kappa) {
    if (kappa == 0.0) throw std::domain_error("contour_conversion_m2: kappa must be nonzero");
    const double v = -lambda.pair_sum(1, 1); // lambda_2 - lambda_1 = (lambda, -alpha_1)
    const Complex twoi(0.0, 2.0);
    return unit_phase(kPi / kappa) * (2.0 * std::cos(kPi / kappa)) *
           unit_phase(kPi * (v + 1.0) / kappa) * twoi * std::sin(kPi * (v + 1.0) / kappa) *
           unit_phase(kPi * v / kappa) * twoi * std::sin(kPi * v / kappa);
}

Complex monomial_exponent(const Channel& ch, const Params& p) {
    if (!ch.all_equal())
        throw std::invalid_argument("monomial_exponent: channel is not all-equal");
    const int c = ch.I.front();
    // (lambda, e_c - e_1) = -(lambda, alpha_1 + ... + alpha_{c-1})
    const Complex value((-p.lambda.pair_sum(1, c - 1) - static_cast<double>(c - 1)) / p.kappa, 0.0);
    const ExponentVector m = mu(ch, p.lambda, p.kappa);
    for (int j = 0; j < ch.N; ++j)
        if (std::abs(m[j] - value) > 1e-12 * (1.0 + std::abs(value)))
            throw std::logic_error("monomial_exponent: mu is not constant at the formula value");
    return value;
}

} // namespace gsel
