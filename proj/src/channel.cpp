#include "gsel/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gsel {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

double dist_to_integer(double x) {
    return std::abs(x - std::round(x));
}
} // namespace

Channel::Channel(std::vector<int> I_, int n_) : I(std::move(I_)), n(n_), N(static_cast<int>(I.size())) {
    validate();
}

void Channel::validate() const {
    if (N != static_cast<int>(I.size()))
        throw std::invalid_argument("Channel: N does not match |I|");
    if (n < 1) throw std::invalid_argument("Channel: n must be >= 1");
    for (int ij : I)
        if (ij < 1 || ij > n + 1)
            throw std::invalid_argument("Channel: entries must lie in [1, n+1]");
}

bool Channel::all_equal() const {
    for (int ij : I)
        if (ij != I.front()) return false;
    return !I.empty();
}

int Channel::variable_count() const {
    int c = 0;
    for (int ij : I) c += ij - 1;
    return c;
}

double GenericWeight::pair_sum(int lo, int hi) const {
    double s = 0.0;
    for (int r = lo; r <= hi; ++r)
        if (r >= 1 && r <= n()) s += pairings[static_cast<size_t>(r - 1)];
    return s;
}

std::vector<double> GenericWeight::realized(int m_amb) const {
    AmbientData amb = build_ambient(std::max(1, n()), std::max(2, m_amb));
    std::vector<double> out(static_cast<size_t>(amb.m_amb), 0.0);
    for (int j = 1; j <= n() && j < amb.m_amb; ++j) {
        const auto lam = amb.Lambda(j).to_real();
        for (size_t q = 0; q < out.size(); ++q)
            out[q] += pairings[static_cast<size_t>(j - 1)] * lam[q];
    }
    return out;
}

ChannelAnalysis analyze(const Channel& ch, double kappa) {
    ch.validate();
    if (kappa == 0.0) throw std::domain_error("analyze: kappa must be nonzero");
    ChannelAnalysis out;
    out.s.resize(static_cast<size_t>(ch.n), 0);
    for (int k = 1; k <= ch.n; ++k)
        for (int ij : ch.I)
            if (ij > k) ++out.s[static_cast<size_t>(k - 1)];
    out.a.resize(static_cast<size_t>(ch.N), 0);
    for (int p = 1; p <= ch.N; ++p)
        for (int j = p + 1; j <= ch.N; ++j)
            if (ch.I[static_cast<size_t>(j - 1)] > 1) ++out.a[static_cast<size_t>(p - 1)];
    out.phase_sum = 0;
    for (int ap : out.a) out.phase_sum += ap;
    out.A = std::exp(Complex(0.0, -kPi / kappa * static_cast<double>(out.phase_sum)));
    return out;
}

ExponentVector mu(const Channel& ch, const GenericWeight& lambda, double kappa) {
    ch.validate();
    if (kappa == 0.0) throw std::domain_error("mu: kappa must be nonzero");
    const AmbientData amb = build_ambient(ch.n, ch.N);

    std::vector<Complex> out(static_cast<size_t>(ch.N));
    WeightVector H(amb.m_amb); // h_{i_1} + ... + h_{i_{j-1}}
    const Rational lam1_sq = inner(amb.Lambda(1), amb.Lambda(1));
    for (int j = 1; j <= ch.N; ++j) {
        const int ij = ch.I[static_cast<size_t>(j - 1)];
        WeightVector S(amb.m_amb); // alpha_1 + ... + alpha_{ij-1}
        for (int r = 1; r <= ij - 1; ++r) S += amb.alpha(r);
        const double lam_part = -lambda.pair_sum(1, ij - 1);
        const Rational rat_part =
            -inner(H, S) - Rational(ij - 1) + inner(H, amb.Lambda(1)) - Rational(j - 1) * lam1_sq;
        out[static_cast<size_t>(j - 1)] =
            Complex((lam_part + boost::rational_cast<double>(rat_part)) / kappa, 0.0);
        H += amb.h(ij);
    }
    return ExponentVector(std::move(out));
}

ExponentVector eta(const ExponentVector& mu_vec, int N, double kappa) {
    if (mu_vec.size() != N) throw std::invalid_argument("eta: length mismatch");
    const ExponentVector r = rho(N, kappa);
    std::vector<Complex> out(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) out[static_cast<size_t>(i)] = mu_vec[i] - r[i];
    return ExponentVector(std::move(out));
}

GenericityReport genericity_check(const ExponentVector& eta_vec, double /*kappa*/, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("genericity_check: tol must be > 0");
    GenericityReport rep;
    rep.tol = tol;
    rep.min_pair_distance = 1.0;
    rep.min_root_distance = 1.0;
    const int N = eta_vec.size();
    for (int s = 0; s < N; ++s) {
        for (int j = 0; j < N; ++j) {
            if (s == j) continue;
            const Complex d = eta_vec[s] - eta_vec[j];
            // distance to the nearest integer in the complex sense
            const double dist = std::hypot(dist_to_integer(d.real()), d.imag());
            if (dist < rep.min_pair_distance) {
                rep.min_pair_distance = dist;
                rep.bad_s = s + 1;
                rep.bad_j = j + 1;
            }
            if (s < j && dist < rep.min_root_distance) rep.min_root_distance = dist;
        }
    }
    if (N < 2) {
        rep.min_pair_distance = 1.0;
        rep.min_root_distance = 1.0;
    }
    rep.pass = rep.min_pair_distance > tol && rep.min_root_distance > tol;
    if (rep.pass) {
        rep.bad_s = -1;
        rep.bad_j = -1;
    }
    return rep;
}

} // namespace gsel
