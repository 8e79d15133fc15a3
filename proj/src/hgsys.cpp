#include "gsel/hgsys.hpp"

#include <cmath>
#include <stdexcept>

namespace gsel {

namespace {

// z-exponent of z_i in z^mu x^nu: mu_i + nu_i - nu_{i-1} (nu_0 = nu_N = 0).
Complex z_exponent(const TruncatedSeries& s, const MultiIndex& nu, int i) {
    const int nv = s.nvars();
    Complex e = s.base_exponent[i];
    if (i < nv) e += static_cast<double>(nu[static_cast<size_t>(i)]);
    if (i > 0) e -= static_cast<double>(nu[static_cast<size_t>(i - 1)]);
    return e;
}

void enumerate_indices(int nvars, int order, std::vector<MultiIndex>& out) {
    MultiIndex cur(static_cast<size_t>(nvars), 0);
    // lexicographic enumeration of all indices with total degree <= order
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, order);
}

int total_degree(const MultiIndex& nu) {
    int d = 0;
    for (int v : nu) d += v;
    return d;
}

} // namespace

TruncatedSeries apply_L(const TruncatedSeries& s, double k) {
    const int N = s.npoints();
    if (N < 2) throw std::invalid_argument("apply_L: needs N >= 2");
    TruncatedSeries out;
    out.base_exponent = s.base_exponent;
    out.order = s.order;

    for (const auto& [nu, c] : s.coeffs) {
        // Euler part and the degree-preserving interaction term
        Complex diag(0.0, 0.0);
        for (int i = 0; i < N; ++i) {
            const Complex ei = z_exponent(s, nu, i);
            diag += ei * ei;
        }
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                diag -= k * (z_exponent(s, nu, i) - z_exponent(s, nu, j));
        out.coeffs[nu] += diag * c;

        // degree-raising terms: -k * 2 (z_i/z_j)^r (z_i d_i - z_j d_j)
        for (int i = 0; i < N; ++i) {
            for (int j = i + 1; j < N; ++j) {
                const Complex dij = z_exponent(s, nu, i) - z_exponent(s, nu, j);
                for (int r = 1; r * (j - i) + total_degree(nu) <= s.order; ++r) {
                    MultiIndex target = nu;
                    for (int q = i; q < j; ++q) target[static_cast<size_t>(q)] += r;
                    out.coeffs[target] += -2.0 * k * dij * c;
                }
            }
        }
    }
    return out;
}

TruncatedSeries hc_series(const ExponentVector& eta_vec, double k, int order) {
    const int N = eta_vec.size();
    if (N < 2) throw std::invalid_argument("hc_series: needs N >= 2");
    if (order < 0) throw std::invalid_argument("hc_series: order must be >= 0");

    TruncatedSeries s;
    s.order = order;
    std::vector<Complex> mu_e(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        const double rho_i = k * static_cast<double>(N - 1 - 2 * i) / 2.0;
        mu_e[static_cast<size_t>(i)] = eta_vec[i] + rho_i;
    }
    s.base_exponent = ExponentVector(std::move(mu_e));
    s.coeffs[MultiIndex(static_cast<size_t>(N - 1), 0)] = Complex(1.0, 0.0);

    std::vector<MultiIndex> all;
    enumerate_indices(N - 1, order, all);
    std::sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
        const int da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });

    for (const MultiIndex& nu : all) {
        const int d = total_degree(nu);
        if (d == 0) continue;
        // divisor sum_i m_i (m_i + 2 eta_i), m_i = nu_i - nu_{i-1}
        Complex divisor(0.0, 0.0);
        for (int i = 0; i < N; ++i) {
            double m_i = 0.0;
            if (i < N - 1) m_i += static_cast<double>(nu[static_cast<size_t>(i)]);
            if (i > 0) m_i -= static_cast<double>(nu[static_cast<size_t>(i - 1)]);
            divisor += m_i * (m_i + 2.0 * eta_vec[i]);
        }
        if (std::abs(divisor) < 1e-10)
            throw std::domain_error("hc_series: recursion divisor below 1e-10 (non-generic eta)");

        Complex num(0.0, 0.0);
        for (int i = 0; i < N; ++i) {
            for (int j = i + 1; j < N; ++j) {
                for (int r = 1;; ++r) {
                    MultiIndex src = nu;
                    bool ok = true;
                    for (int q = i; q < j; ++q) {
                        src[static_cast<size_t>(q)] -= r;
                        if (src[static_cast<size_t>(q)] < 0) ok = false;
                    }
                    if (!ok) break;
                    const auto it = s.coeffs.find(src);
                    if (it != s.coeffs.end())
                        num += 2.0 * k * (z_exponent(s, src, i) - z_exponent(s, src, j)) *
                               it->second;
                }
            }
        }
        if (num != Complex(0.0, 0.0)) s.coeffs[nu] = num / divisor;
    }
    return s;
}

EigenReport sekiguchi_eigencheck(const TruncatedSeries& s, const ExponentVector& eta_vec,
                                 Complex zeta, double k, DeltaConvention delta,
                                 WAction waction) {
    const int N = s.npoints();
    if (N != 2)
        throw std::invalid_argument("sekiguchi_eigencheck: only N = 2 is supported");
    if (eta_vec.size() != 2)
        throw std::invalid_argument("sekiguchi_eigencheck: eta length mismatch");

    double d1, d2;
    if (delta == DeltaConvention::half_sum) {
        d1 = 0.5;
        d2 = -0.5;
    } else {
        d1 = 1.0;
        d2 = 0.0;
    }
    // w delta for the transposition is (d2, d1) under either action; the two
    // readings coincide at N = 2.
    (void)waction;

    const Complex mu1 = s.base_exponent[0];
    const Complex mu2 = s.base_exponent[1];
    const int order = s.order;

    // numerator coefficients of z_2^{...} [P(m) x^{m+1} - Q(m) x^m]
    std::vector<Complex> num(static_cast<size_t>(order + 2), Complex(0.0, 0.0));
    for (int m = 0; m <= order; ++m) {
        const Complex c = s.coeff(MultiIndex{m});
        if (c == Complex(0.0, 0.0)) continue;
        const double md = static_cast<double>(m);
        const Complex P = (zeta + mu1 + md + d1 * k) * (zeta + mu2 - md + d2 * k);
        const Complex Q = (zeta + mu1 + md + d2 * k) * (zeta + mu2 - md + d1 * k);
        num[static_cast<size_t>(m + 1)] += c * P;
        num[static_cast<size_t>(m)] -= c * Q;
    }
    // divide by the Vandermonde z_1 - z_2 = -z_2(1 - x): multiply by -(1+x+...)
    std::vector<Complex> dphi(static_cast<size_t>(order + 2), Complex(0.0, 0.0));
    Complex acc(0.0, 0.0);
    for (int d = 0; d <= order + 1; ++d) {
        acc += num[static_cast<size_t>(d)];
        dphi[static_cast<size_t>(d)] = -acc;
    }

    EigenReport rep;
    rep.eigenvalue = (zeta + eta_vec[0]) * (zeta + eta_vec[1]);
    rep.degrees_checked = std::max(0, order - 1);
    for (int d = 0; d <= order - 2; ++d) {
        const Complex want = rep.eigenvalue * s.coeff(MultiIndex{d});
        rep.max_residual =
            std::max(rep.max_residual, std::abs(dphi[static_cast<size_t>(d)] - want));
    }
    return rep;
}

double series_vs_2f1(const GenericWeight& lambda, double kappa, int order) {
    if (lambda.n() < 2)
        throw std::invalid_argument("series_vs_2f1: needs pairings with alpha_1 and alpha_2");
    const Channel ch({3, 2}, 2);
    const ExponentVector m = mu(ch, lambda, kappa);
    const ExponentVector e = eta(m, 2, kappa);
    const double k = 1.0 / kappa;
    const TruncatedSeries s = hc_series(e, k, order);

    const Complex a(k, 0.0);
    const Complex b(-lambda.pairings[1] / kappa, 0.0); // (lambda, -alpha_2)/kappa
    const Complex c = b - k + 1.0;
    double max_dev = 0.0;
    Complex term(1.0, 0.0);
    for (int mm = 0; mm <= order; ++mm) {
        max_dev = std::max(max_dev, std::abs(s.coeff(MultiIndex{mm}) - term));
        const double md = static_cast<double>(mm);
        term *= (a + md) * (b + md) / ((c + md) * (md + 1.0));
    }
    return max_dev;
}

} // namespace gsel
