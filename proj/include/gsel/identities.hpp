#pragma once

#include "gsel/closedform.hpp"

#include <string>
#include <vector>

namespace gsel {

struct IdentityReport {
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    std::string parameters; // echoed inputs, "key=value" pairs

    bool passes(double threshold) const {
        return std::min(rel_residual, abs_residual) <= threshold;
    }
};

/// Four-index Gamma-function identity from the two-step channel's series
/// route: prefactor times the constrained sum over m_1+m_2+m_3+m_4 = M
/// against the single-M Gamma ratio. Summands are evaluated in log domain,
/// one exponentiation each, summed in descending magnitude order.
IdentityReport four_index_check(const GenericWeight& lambda, double kappa, int M,
                                Precision prec = Precision::Double);

/// Three-index identity from the monomial case: the constrained sum over
/// m_1+m_2+m_3 = M vanishes for M >= 1. abs_residual is scaled by the largest
/// summand magnitude; rhs is identically 0.
IdentityReport three_index_check(const GenericWeight& lambda, double kappa, int M,
                                 Precision prec = Precision::Double);

/// Ordered m=2 Selberg value times the contour-conversion factor against the
/// closed loop-system product, which is cross-checked against the all-equal
/// two-point channel. rel_residual covers the first comparison, abs_residual
/// the worse of both.
IdentityReport section4_chain(const GenericWeight& lambda, double kappa,
                              Precision prec = Precision::Double);

/// Evaluates the closed form for every distinct ordering of the multiset and
/// reports the max pairwise relative deviation; when the multiset is n = 1
/// with a single 2 (one integration variable), also compares against
/// contour_beta((lambda,-alpha)/kappa, 1 - N/kappa).
IdentityReport channel_consistency(const std::vector<int>& I_multiset, int n,
                                   const GenericWeight& lambda, double kappa,
                                   Precision prec = Precision::Double);

} // namespace gsel
