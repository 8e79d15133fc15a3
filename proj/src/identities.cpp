#include "gsel/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gsel {

namespace {

// One log-domain exponentiation per summand; descending-magnitude summation
// to control cancellation when the target is exactly zero.
Complex sum_descending(std::vector<Complex>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Complex& a, const Complex& b) {
        return std::abs(a) > std::abs(b);
    });
    Complex tot(0.0, 0.0);
    for (const Complex& t : terms) tot += t;
    return tot;
}

Complex log_gamma_ratio(std::initializer_list<Complex> nums,
                        std::initializer_list<Complex> dens, Precision prec) {
    Complex s(0.0, 0.0);
    for (const Complex& z : nums) s += log_gamma(z, prec);
    for (const Complex& z : dens) s -= log_gamma(z, prec);
    return s;
}

std::string echo(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

} // namespace

IdentityReport four_index_check(const GenericWeight& lambda, double kappa, int M,
                                Precision prec) {
    if (M < 0) throw std::invalid_argument("four_index_check: M must be >= 0");
    if (lambda.n() < 2)
        throw std::invalid_argument("four_index_check: needs pairings with alpha_1, alpha_2");
    const double k = 1.0 / kappa;
    const double g = lambda.pairings[0] / kappa;  // (lambda, alpha_1)/kappa
    const double b = -lambda.pairings[1] / kappa; // (lambda, -alpha_2)/kappa
    const double w = -lambda.pair_sum(1, 2) / kappa;

    const Complex log_pre = log_gamma_ratio(
        {Complex(g + 1.0), Complex(b - k + 1.0), Complex(w + 1.0 - 2.0 * k)},
        {Complex(g + k), Complex(b), Complex(w - k), Complex(k), Complex(k), Complex(-2.0 * k),
         Complex(k)},
        prec);

    std::vector<Complex> terms;
    for (int m1 = 0; m1 <= M; ++m1) {
        for (int m2 = 0; m2 + m1 <= M; ++m2) {
            for (int m3 = 0; m3 + m2 + m1 <= M; ++m3) {
                const int m4 = M - m1 - m2 - m3;
                const double s134 = static_cast<double>(m1 + m3 + m4);
                const double s234 = static_cast<double>(m2 + m3 + m4);
                const Complex lg = log_gamma_ratio(
                    {Complex(w + s134 - k), Complex(b + m4), Complex(g + k + s234),
                     Complex(k + m1), Complex(k + m2), Complex(-2.0 * k + m3), Complex(k + m4)},
                    {Complex(w + s134 + 1.0 - 2.0 * k), Complex(b + m4 + 1.0 - k),
                     Complex(g + 1.0 + s234), Complex(m1 + 1.0), Complex(m2 + 1.0),
                     Complex(m3 + 1.0), Complex(m4 + 1.0)},
                    prec);
                terms.push_back(std::exp(lg + log_pre));
            }
        }
    }
    IdentityReport rep;
    rep.lhs = sum_descending(terms);
    rep.rhs = std::exp(log_gamma_ratio(
        {Complex(b - k + 1.0), Complex(k + M), Complex(b + M)},
        {Complex(k), Complex(b), Complex(b - k + 1.0 + M), Complex(M + 1.0)}, prec));
    rep.abs_residual = std::abs(rep.lhs - rep.rhs);
    rep.rel_residual = rep.abs_residual / std::max(std::abs(rep.rhs), 1e-300);
    rep.parameters = echo({{"kappa", kappa}, {"g", g}, {"b", b}, {"M", static_cast<double>(M)}});
    return rep;
}

IdentityReport three_index_check(const GenericWeight& lambda, double kappa, int M,
                                 Precision prec) {
    if (M < 1) throw std::invalid_argument("three_index_check: requires M >= 1");
    const double k = 1.0 / kappa;
    const double p = -lambda.pair_sum(1, 1) / kappa; // (lambda, -alpha_1)/kappa
    const double r = -p;

    std::vector<Complex> terms;
    double largest = 0.0;
    for (int m1 = 0; m1 <= M; ++m1) {
        for (int m2 = 0; m2 + m1 <= M; ++m2) {
            const int m3 = M - m1 - m2;
            const double s13 = static_cast<double>(m1 + m3);
            const double s23 = static_cast<double>(m2 + m3);
            const Complex lg = log_gamma_ratio(
                {Complex(p + s13), Complex(r + s23), Complex(k + m1), Complex(k + m2),
                 Complex(-2.0 * k + m3)},
                {Complex(p + s13 + 1.0 - k), Complex(r + s23 + 1.0 - k), Complex(m1 + 1.0),
                 Complex(m2 + 1.0), Complex(m3 + 1.0)},
                prec);
            const Complex t = std::exp(lg);
            largest = std::max(largest, std::abs(t));
            terms.push_back(t);
        }
    }
    IdentityReport rep;
    rep.lhs = sum_descending(terms);
    rep.rhs = Complex(0.0, 0.0);
    rep.abs_residual = std::abs(rep.lhs) / std::max(largest, 1e-300);
    rep.rel_residual = rep.abs_residual;
    rep.parameters = echo({{"kappa", kappa}, {"p", p}, {"M", static_cast<double>(M)}});
    return rep;
}

IdentityReport section4_chain(const GenericWeight& lambda, double kappa, Precision prec) {
    const double u = -lambda.pair_sum(1, 1) / kappa; // (lambda, -alpha)/kappa
    const double k = 1.0 / kappa;

    SelbergParams sp;
    sp.a = Complex(u, 0.0);
    sp.b = Complex(1.0 - 2.0 * k, 0.0);
    sp.c = Complex(k, 0.0);
    sp.m = 2;
    const Complex lhs = classical_selberg_ordered(sp, prec) * contour_conversion_m2(lambda, kappa);

    // closed loop-system product:
    // e^{2 pi i (u + 1/kappa)} Gamma(1-1/kappa)^2 (2 pi i)^2 /
    // [Gamma(1-u-1/kappa) Gamma(1-u) Gamma(u+1) Gamma(u+1-1/kappa)]
    GammaProduct s3;
    s3.num(Complex(1.0 - k)).num(Complex(1.0 - k));
    s3.den(Complex(1.0 - u - k)).den(Complex(1.0 - u)).den(Complex(u + 1.0)).den(
        Complex(u + 1.0 - k));
    const Complex two_pi_i(0.0, 2.0 * 3.14159265358979323846264338327950288);
    s3.mul(two_pi_i * two_pi_i);
    s3.mul(std::exp(Complex(0.0, 2.0 * 3.14159265358979323846264338327950288 * (u + k))));
    const Complex rhs = eval_gamma_product(s3, prec);

    const Complex gs = generalized_selberg(Channel({2, 2}, 1), Params(lambda, kappa), prec);

    IdentityReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_residual = std::max(std::abs(lhs - rhs), std::abs(rhs - gs));
    rep.rel_residual = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    rep.parameters = echo({{"kappa", kappa}, {"u", u}});
    return rep;
}

IdentityReport channel_consistency(const std::vector<int>& I_multiset, int n,
                                   const GenericWeight& lambda, double kappa,
                                   Precision prec) {
    std::vector<int> I = I_multiset;
    std::sort(I.begin(), I.end());
    const Params par(lambda, kappa);

    std::vector<Complex> vals;
    do {
        vals.push_back(generalized_selberg(Channel(I, n), par, prec));
    } while (std::next_permutation(I.begin(), I.end()));

    IdentityReport rep;
    rep.lhs = vals.front();
    rep.rhs = vals.front();
    double max_pair = 0.0;
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
            max_pair = std::max(max_pair,
                                std::abs(vals[i] - vals[j]) / std::max(std::abs(vals[i]), 1e-300));

    int twos = 0;
    for (int v : I_multiset) twos += (v == 2) ? 1 : 0;
    const bool direct = (n == 1 && twos == 1 &&
                         static_cast<int>(I_multiset.size()) ==
                             1 + static_cast<int>(std::count(I_multiset.begin(), I_multiset.end(), 1)));
    if (direct) {
        const double u = -lambda.pair_sum(1, 1) / kappa;
        const double N = static_cast<double>(I_multiset.size());
        rep.rhs = contour_beta(Complex(u, 0.0), Complex(1.0 - N / kappa, 0.0), prec);
        for (const Complex& v : vals)
            max_pair = std::max(max_pair, std::abs(v - rep.rhs) / std::abs(rep.rhs));
    }
    rep.rel_residual = max_pair;
    rep.abs_residual = max_pair * std::abs(rep.rhs);
    rep.parameters = echo({{"kappa", kappa}, {"n", static_cast<double>(n)}});
    return rep;
}

} // namespace gsel
