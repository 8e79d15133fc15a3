#pragma once

#include "gsel/rootsys.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gsel {

/// Working precision for Gamma-product evaluation. Extended uses 80-bit
/// long double internally; results are returned as double complex either way.
enum class Precision { Double, Extended };

/// Thrown when a Gamma argument is within pole_tol of a non-positive integer,
/// or when a series fails to converge.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, Complex argument)
        : std::runtime_error(what), argument_(argument) {}
    Complex argument() const { return argument_; }

private:
    Complex argument_;
};

inline constexpr double kDefaultPoleTol = 1e-9;

/// Principal-branch log Gamma. Lanczos in double mode, Spouge in extended
/// mode; reflection for Re z < 1/2 (imaginary part then agrees with the
/// principal branch modulo 2 pi, which is all Gamma products need).
/// Throws PoleError within pole_tol of a non-positive integer.
Complex log_gamma(Complex z, Precision prec = Precision::Double,
                  double pole_tol = kDefaultPoleTol);

/// Gamma(z) through log_gamma.
Complex gamma_fn(Complex z, Precision prec = Precision::Double);

/// Signed list of Gamma arguments plus a scalar prefactor:
/// value = scalar_prefactor * prod Gamma(num) / prod Gamma(den).
struct GammaProduct {
    std::vector<Complex> numerator_args;
    std::vector<Complex> denominator_args;
    Complex scalar_prefactor{1.0, 0.0};

    GammaProduct& num(Complex z) { numerator_args.push_back(z); return *this; }
    GammaProduct& den(Complex z) { denominator_args.push_back(z); return *this; }
    GammaProduct& mul(Complex c) { scalar_prefactor *= c; return *this; }

    /// Removes numerator/denominator argument pairs that are exactly equal.
    void cancel_equal_args();
};

/// Log-domain evaluation, summation in listed order (deterministic).
Complex eval_gamma_product(const GammaProduct& p, Precision prec = Precision::Double,
                           double pole_tol = kDefaultPoleTol);

/// Gauss hypergeometric series sum_m (a)_m (b)_m / ((c)_m m!) x^m, truncated
/// when |term| < tol * |partial sum|. Series domain only: requires |x| <= 0.9.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex x, double tol = 1e-14,
                  int max_terms = 10000);

} // namespace gsel
