#pragma once

#include "gsel/channel.hpp"
#include "gsel/special.hpp"

namespace gsel {

/// Classical Selberg exponents over the ordered domain 0 <= t_1 <= ... <= t_m <= 1.
struct SelbergParams {
    Complex a{1.0, 0.0};
    Complex b{1.0, 0.0};
    Complex c{0.0, 0.0};
    int m = 1;
};

/// Coupling bundle: kappa and k = 1/kappa.
struct Params {
    GenericWeight lambda;
    double kappa = 2.0;
    double k_coupling = 0.5;

    Params() = default;
    Params(GenericWeight lam, double kappa_);
};

/// Constant multiplying z^mu in the channel integral's expansion deep in the
/// ordered chamber, as a Gamma product with phase prefactor:
/// product over j and p = 1..i_j-1 of
///   exp(i pi [ (lambda + h_{i_1}+...+h_{i_{j-1}}, -(alpha_{i_j-p}+...+alpha_{i_j-1}))/kappa
///              - (p-1)/kappa ])
///   * Gamma(1 - 1/kappa) (2 pi i)
///   / [ Gamma(<same pairing>/kappa - p/kappa + 1)
///       Gamma(<opposite-sign pairing>/kappa + (p-1)/kappa + 1) ].
GammaProduct leading_coefficient_product(const Channel& ch, const Params& p);
Complex leading_coefficient(const Channel& ch, const Params& p,
                            Precision prec = Precision::Double);

/// Value at the unity of the normalized asymptotic solution:
/// [prod_alpha Gamma((eta,alpha)+1)/Gamma((eta,alpha)-1/kappa+1)] /
/// [prod_alpha Gamma(-(rho,alpha)+1)/Gamma(-(rho,alpha)-1/kappa+1)]
/// over the positive roots of the N-point system.
GammaProduct opdam_product(const ExponentVector& eta_vec, double kappa, int N);
Complex opdam_factor(const ExponentVector& eta_vec, double kappa, int N,
                     Precision prec = Precision::Double);

/// Phase earned as the z-points collapse to the unity and cross the
/// screening contours: exp(+i pi / kappa * sum_p a(p)). This is the complex
/// conjugate of ChannelAnalysis::A; the three-way agreement of the one-variable
/// channels and the m=2 product chain both require this sign.
Complex collapse_phase(const Channel& ch, double kappa);

/// The generalized Selberg value: collapse_phase * leading_coefficient * opdam_factor.
Complex generalized_selberg(const Channel& ch, const Params& p,
                            Precision prec = Precision::Double);

/// Ordered-domain classical Selberg integral:
/// prod_{j=0}^{m-1} Gamma(a+jc) Gamma(b+jc) Gamma((j+1)c) /
///                  [Gamma(a+b+(m+j-1)c) Gamma(c)].
/// The j = 0 factor Gamma(c)/Gamma(c) cancels structurally, so c = 0 is fine at m = 1.
GammaProduct classical_selberg_product(const SelbergParams& sp);
Complex classical_selberg_ordered(const SelbergParams& sp,
                                  Precision prec = Precision::Double);

/// Loop integral of t^{a-1}(1-t)^{b-1} over a contour starting and ending at 1,
/// enclosing 0 anticlockwise: e^{i pi a} (2 pi i) Gamma(b) / [Gamma(1-a) Gamma(a+b)],
/// algebraically (e^{2 pi i a}-1) Gamma(a) Gamma(b) / Gamma(a+b).
Complex contour_beta(Complex a, Complex b, Precision prec = Precision::Double);

/// Extra factor converting the ordered m=2 real integral to the nested loop
/// system: e^{i pi/kappa} 2 cos(pi/kappa)
///         * e^{i pi (v+1)/kappa} (2i) sin(pi (v+1)/kappa)
///         * e^{i pi v/kappa} (2i) sin(pi v/kappa),  v = (lambda, -alpha_1).
Complex contour_conversion_m2(const GenericWeight& lambda, double kappa);

/// Common exponent of the all-equal channel (i_1 = ... = i_N = c):
/// ((lambda, e_c - e_1) - (c-1)) / kappa. Asserts every mu_j equals it.
/// Throws std::invalid_argument if the channel is not all-equal.
Complex monomial_exponent(const Channel& ch, const Params& p);

} // namespace gsel
