#pragma once

#include "gsel/rootsys.hpp"

#include <vector>

namespace gsel {

/// Fusion path I = (i_1, ..., i_N), entries in [1, n+1].
struct Channel {
    std::vector<int> I;
    int n = 0;
    int N = 0;

    Channel() = default;
    Channel(std::vector<int> I_, int n_);

    /// Throws std::invalid_argument if any entry leaves [1, n+1] or N != |I|.
    void validate() const;

    bool all_equal() const;
    /// Number of integration variables, sum over j of (i_j - 1).
    int variable_count() const;
};

/// A generic weight given by its pairings with the simple roots,
/// pairings[j-1] = (lambda, alpha_j) for j = 1..n. All formulas consume
/// lambda only through these pairings and their partial sums.
struct GenericWeight {
    std::vector<double> pairings;

    GenericWeight() = default;
    explicit GenericWeight(std::vector<double> p) : pairings(std::move(p)) {}

    int n() const { return static_cast<int>(pairings.size()); }

    /// (lambda, alpha_lo + ... + alpha_hi), 1-based inclusive; pairings
    /// beyond the stored range are zero.
    double pair_sum(int lo, int hi) const;

    /// A representative vector with these pairings, orthogonal to
    /// e_1 + ... + e_m: sum_j pairings[j] * Lambda_j in dimension m_amb.
    std::vector<double> realized(int m_amb) const;
};

struct ChannelAnalysis {
    std::vector<int> s; // s[k-1] = #{ i_j > k },  k = 1..n
    std::vector<int> a; // a[p-1] = #{ i_j > 1 : j > p },  p = 1..N
    int phase_sum = 0;  // sum_p a(p)
    Complex A{1.0, 0.0}; // exp(-i pi / kappa * phase_sum)
};

/// Counts s(k), a(p) and the reordering phase A for the channel.
ChannelAnalysis analyze(const Channel& ch, double kappa);

/// Exponent vector of the leading power z^mu of the channel integral:
/// mu_j = [ (lambda + h_{i_1} + ... + h_{i_{j-1}}, -(alpha_1+...+alpha_{i_j-1}))
///          - (i_j - 1)
///          + (h_{i_1} + ... + h_{i_{j-1}} - (j-1) Lambda_1, Lambda_1) ] / kappa.
/// The lambda-independent part is exact rational arithmetic.
ExponentVector mu(const Channel& ch, const GenericWeight& lambda, double kappa);

/// Componentwise mu - rho(N, kappa).
ExponentVector eta(const ExponentVector& mu_vec, int N, double kappa);

struct GenericityReport {
    bool pass = true;
    double tol = 0.0;
    double min_pair_distance = 0.0; // min over s != j of dist(eta_s - eta_j, Z)
    double min_root_distance = 0.0; // min over positive roots of dist((eta,alpha), Z)
    int bad_s = -1, bad_j = -1;     // offending pair when failing (1-based)
};

/// Distance-to-integer report for the pairwise differences of eta.
/// Pass iff both minima exceed tol.
GenericityReport genericity_check(const ExponentVector& eta_vec, double kappa,
                                  double tol = 1e-6);

} // namespace gsel
