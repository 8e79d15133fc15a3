#pragma once

#include "gsel/channel.hpp"

#include <map>
#include <vector>

namespace gsel {

/// Degrees in the chamber ratios x_i = z_i / z_{i+1}, i = 1..N-1.
using MultiIndex = std::vector<int>;

/// z^mu times a finite power series in the ratios x_i, truncated at a total
/// degree. Solutions normalized to constant coefficient 1.
struct TruncatedSeries {
    ExponentVector base_exponent; // mu, length N
    std::map<MultiIndex, Complex> coeffs;
    int order = 0;

    int npoints() const { return base_exponent.size(); }
    int nvars() const { return npoints() - 1; }

    Complex coeff(const MultiIndex& idx) const {
        auto it = coeffs.find(idx);
        return it == coeffs.end() ? Complex(0.0, 0.0) : it->second;
    }
};

/// The radial part of the quadratic Calogero-Sutherland-type operator:
///   L = sum_i (z_i d/dz_i)^2 - k sum_{i<j} (z_j+z_i)/(z_j-z_i) (z_i d/dz_i - z_j d/dz_j),
/// acting on the truncated series with the fraction expanded in the chamber
/// |z_1| < ... < |z_N| as 1 + 2 sum_{r>=1} (z_i/z_j)^r. Degree-preserving and
/// degree-raising only, so retained degrees are exact.
TruncatedSeries apply_L(const TruncatedSeries& s, double k);

/// The unique series z^mu (1 + ...) with mu = eta + rho(N, 1/k) solving
/// L phi = ((eta,eta) - (rho,rho)) phi to the truncation order, built degree
/// by degree. Throws std::domain_error when a recursion divisor falls below
/// 1e-10 (non-generic eta).
TruncatedSeries hc_series(const ExponentVector& eta_vec, double k, int order);

/// Which delta enters the commuting-family determinant formula.
enum class DeltaConvention {
    half_sum,  // ((N-1)/2, (N-3)/2, ..., (1-N)/2); the eigencheck selects this one
    staircase, // (N-1, N-2, ..., 0); shifts the spectral parameter by k(N-1)/2
};

/// How w acts on delta in the factor (w delta, e_i).
enum class WAction { by_position, by_value }; // coincide for N = 2

struct EigenReport {
    double max_residual = 0.0;
    Complex eigenvalue{0.0, 0.0}; // prod_i (zeta + eta_i)
    int degrees_checked = 0;
};

/// Applies the determinant operator
///   D(zeta,k) = (1/prod_{i<j}(z_i-z_j)) sum_{w in S_N} det(w)
///               prod_j z_j^{N-w(j)} prod_i (zeta + z_i d/dz_i + (w delta, e_i) k)
/// to the series (Vandermonde division as exact series division) and reports
/// the max coefficient deviation from prod_i (zeta + eta_i) * s over degrees
/// <= order - 2. N = 2 only.
EigenReport sekiguchi_eigencheck(const TruncatedSeries& s, const ExponentVector& eta_vec,
                                 Complex zeta, double k,
                                 DeltaConvention delta = DeltaConvention::half_sum,
                                 WAction waction = WAction::by_position);

/// Coefficientwise comparison of the two-point series against the Gauss
/// hypergeometric series with a = k, b = (lambda, -alpha_2)/kappa,
/// c = b - k + 1 in x = z_1/z_2; returns the max coefficient deviation.
double series_vs_2f1(const GenericWeight& lambda, double kappa, int order);

} // namespace gsel
