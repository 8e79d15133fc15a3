#include "gsel/closedform.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace gsel;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Complex kTwoPiI(0.0, 2.0 * kPi);

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// generic sampling: kappa away from small-denominator rationals, pairings
// scaled to keep Gamma arguments in the pole-free band
double sample_kappa(std::mt19937_64& rng) {
    for (;;) {
        const double k = 2.1 + 7.6 * uniform01(rng);
        bool ok = true;
        for (int q = 1; q <= 12 && ok; ++q)
            if (std::abs(k * q - std::round(k * q)) < 0.02) ok = false;
        if (ok) return k;
    }
}

GenericWeight sample_weight1(std::mt19937_64& rng, double kappa) {
    return GenericWeight({-(0.1 + 0.8 * uniform01(rng)) * kappa});
}
} // namespace

TEST_CASE("leading coefficient trivial and one-point cases") {
    const double kappa = 3.137, v = 1.7123, u = v / kappa;
    const Params par(GenericWeight({-v}), kappa);

    CHECK(std::abs(leading_coefficient(Channel({1}, 1), par) - Complex(1.0, 0.0)) < 1e-15);

    // single factor: e^{i pi u} Gamma(1-1/kappa)(2 pi i) /
    //                [Gamma(u - 1/kappa + 1) Gamma(-u + 1)]
    const Complex got = leading_coefficient(Channel({2}, 1), par);
    const Complex want = std::exp(Complex(0.0, kPi * u)) * gamma_fn(Complex(1.0 - 1.0 / kappa)) *
                         kTwoPiI /
                         (gamma_fn(Complex(u - 1.0 / kappa + 1.0)) * gamma_fn(Complex(1.0 - u)));
    CHECK(std::abs(got - want) <= 1e-13 * std::abs(want));
}

TEST_CASE("opdam factor is 1 at eta = -rho and for constant mu") {
    const double kappa = 3.137;
    for (int N : {2, 3, 4}) {
        const ExponentVector r = rho(N, kappa);
        std::vector<Complex> neg(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) neg[static_cast<size_t>(i)] = -r[i];
        CHECK(std::abs(opdam_factor(ExponentVector(neg), kappa, N) - Complex(1.0, 0.0)) < 1e-14);

        // constant mu: eta pairings equal the -rho pairings termwise
        std::vector<Complex> flat(static_cast<size_t>(N), Complex(0.71, 0.0));
        const ExponentVector e = eta(ExponentVector(flat), N, kappa);
        CHECK(std::abs(opdam_factor(e, kappa, N) - Complex(1.0, 0.0)) < 1e-14);
    }
}

TEST_CASE("opdam factor reproduces the worked three-point ratio") {
    const double kappa = 3.137, v = 1.7123, u = v / kappa, k = 1.0 / kappa;
    const Params par(GenericWeight({-v}), kappa);
    const ExponentVector m = mu(Channel({2, 1, 1}, 1), par.lambda, kappa);
    const ExponentVector e = eta(m, 3, kappa);
    // numerator block Gamma(u-2/k+1)Gamma(u-1/k+1)Gamma(1-1/k) /
    //                 [Gamma(u-3/k+1)Gamma(u-2/k+1)Gamma(1-2/k)]
    // over the same block at u = 0
    GammaProduct want;
    want.num(Complex(u - 2 * k + 1)).num(Complex(u - k + 1)).num(Complex(1 - k));
    want.den(Complex(u - 3 * k + 1)).den(Complex(u - 2 * k + 1)).den(Complex(1 - 2 * k));
    want.den(Complex(1 - k)).den(Complex(1 - k)).den(Complex(1 - 2 * k));
    want.num(Complex(1 - 2 * k)).num(Complex(1 - 2 * k)).num(Complex(1 - 3 * k));
    const Complex w = eval_gamma_product(want);
    const Complex got = opdam_factor(e, kappa, 3);
    CHECK(std::abs(got - w) <= 1e-12 * std::abs(w));
}

TEST_CASE("three-way agreement with the one-variable loop value") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 10; ++it) {
        const double kappa = sample_kappa(rng);
        const GenericWeight lam = sample_weight1(rng, kappa);
        const Params par(lam, kappa);
        const double u = -lam.pairings[0] / kappa;
        const Complex ref = contour_beta(Complex(u, 0.0), Complex(1.0 - 3.0 / kappa, 0.0));
        for (const std::vector<int>& I :
             {std::vector<int>{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}) {
            const Complex gs = generalized_selberg(Channel(I, 1), par);
            CHECK(std::abs(gs - ref) <= 1e-10 * std::abs(ref));
        }
    }
}

TEST_CASE("empty channel evaluates to 1") {
    Channel ch;
    ch.n = 1;
    const Params par(GenericWeight({-1.0}), 3.0);
    CHECK(generalized_selberg(ch, par) == Complex(1.0, 0.0));
}

TEST_CASE("permutation invariance over n = 1 multisets") {
    std::mt19937_64 rng(77);
    const double kappa = sample_kappa(rng);
    const GenericWeight lam = sample_weight1(rng, kappa);
    const Params par(lam, kappa);
    for (std::vector<int> mset : {std::vector<int>{2, 2, 1}, {2, 2, 2}, {2, 1, 1, 1}}) {
        std::sort(mset.begin(), mset.end());
        std::vector<Complex> vals;
        do {
            vals.push_back(generalized_selberg(Channel(mset, 1), par));
        } while (std::next_permutation(mset.begin(), mset.end()));
        for (const Complex& v : vals)
            CHECK(std::abs(v - vals.front()) <= 1e-11 * std::abs(vals.front()));
    }
}

TEST_CASE("classical Selberg ordered values") {
    SUBCASE("m=1 reduces to the Beta function") {
        SelbergParams sp;
        sp.a = Complex(2.0, 0.0);
        sp.b = Complex(3.0, 0.0);
        sp.c = Complex(0.7, 0.0); // must cancel structurally at m=1
        sp.m = 1;
        CHECK(std::abs(classical_selberg_ordered(sp) - Complex(1.0 / 12.0, 0.0)) < 1e-14);

        GammaProduct gp = classical_selberg_product(sp);
        gp.cancel_equal_args();
        CHECK(gp.numerator_args.size() == 2);
        CHECK(gp.denominator_args.size() == 1);
    }
    SUBCASE("m=2 polynomial case") {
        SelbergParams sp;
        sp.a = Complex(1.0, 0.0);
        sp.b = Complex(1.0, 0.0);
        sp.c = Complex(1.0, 0.0);
        sp.m = 2;
        CHECK(std::abs(classical_selberg_ordered(sp) - Complex(1.0 / 12.0, 0.0)) < 1e-14);
    }
    SUBCASE("m=2 coupling parameters against the explicit Gamma ratio") {
        const double kappa = 3.137, v = 1.7123, u = v / kappa, k = 1.0 / kappa;
        SelbergParams sp;
        sp.a = Complex(u, 0.0);
        sp.b = Complex(1.0 - 2.0 * k, 0.0);
        sp.c = Complex(k, 0.0);
        sp.m = 2;
        GammaProduct want; // Gamma(u)Gamma(u+k)Gamma(1-2k)Gamma(1-k)Gamma(2k) /
                           // [Gamma(u+1-k)Gamma(u+1)Gamma(k)]
        want.num(Complex(u)).num(Complex(u + k)).num(Complex(1 - 2 * k));
        want.num(Complex(1 - k)).num(Complex(2 * k));
        want.den(Complex(u + 1 - k)).den(Complex(u + 1)).den(Complex(k));
        const Complex w = eval_gamma_product(want);
        CHECK(std::abs(classical_selberg_ordered(sp) - w) <= 1e-12 * std::abs(w));
    }
}

TEST_CASE("contour_beta closed forms") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        const Complex a(0.1 + 2.0 * uniform01(rng), 0.4 * uniform01(rng) - 0.2);
        const Complex b(0.1 + 2.0 * uniform01(rng), 0.4 * uniform01(rng) - 0.2);
        const Complex cb = contour_beta(a, b);
        // algebraically (e^{2 pi i a} - 1) Gamma(a) Gamma(b) / Gamma(a+b)
        const Complex alt = (std::exp(kTwoPiI * a) - 1.0) *
                            std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
        CHECK(std::abs(cb - alt) <= 1e-12 * std::max(1.0, std::abs(cb)));
        // normalization identity
        const Complex one = cb * gamma_fn(1.0 - a) * gamma_fn(a + b) /
                            (gamma_fn(b) * kTwoPiI * std::exp(Complex(0.0, kPi) * a));
        CHECK(std::abs(one - Complex(1.0, 0.0)) < 1e-12);
    }
    // integer exponent: single-valued integrand, zero loop value
    CHECK(std::abs(contour_beta(Complex(1.0, 0.0), Complex(0.7, 0.0))) < 1e-14);
}

TEST_CASE("contour conversion factor") {
    SUBCASE("vanishes at integer (lambda_2 - lambda_1)/kappa") {
        const double kappa = 4.0;
        const GenericWeight lam({-2.0 * kappa}); // v/kappa = 2
        CHECK(std::abs(contour_conversion_m2(lam, kappa)) < 1e-12);
    }
    SUBCASE("equals the corrected phase-sum expansion") {
        std::mt19937_64 rng(9);
        for (int it = 0; it < 10; ++it) {
            const double kappa = sample_kappa(rng);
            const GenericWeight lam = sample_weight1(rng, kappa);
            const double u = -lam.pairings[0] / kappa;
            const Complex prod = contour_conversion_m2(lam, kappa);
            // (e^{2 pi i u} - 1)(e^{2 pi i (u+2/kappa)} - e^{2 pi i/kappa}
            //                    + e^{2 pi i (u+1/kappa)} - 1); the second
            // exponent's printed form drops the 2/kappa shift, which breaks
            // the product form it is displayed with
            const auto ph = [](double x) { return std::exp(Complex(0.0, 2.0 * kPi * x)); };
            const double k = 1.0 / kappa;
            const Complex sum =
                (ph(u) - 1.0) * (ph(u + 2 * k) - ph(k) + ph(u + k) - 1.0);
            CHECK(std::abs(prod - sum) <= 1e-12 * std::max(1.0, std::abs(prod)));
        }
    }
    SUBCASE("ordered value times conversion equals the loop-system product") {
        std::mt19937_64 rng(42);
        for (int it = 0; it < 10; ++it) {
            const double kappa = sample_kappa(rng);
            const GenericWeight lam = sample_weight1(rng, kappa);
            const double u = -lam.pairings[0] / kappa;
            const double k = 1.0 / kappa;
            SelbergParams sp;
            sp.a = Complex(u, 0.0);
            sp.b = Complex(1.0 - 2.0 * k, 0.0);
            sp.c = Complex(k, 0.0);
            sp.m = 2;
            const Complex lhs =
                classical_selberg_ordered(sp) * contour_conversion_m2(lam, kappa);
            GammaProduct s3;
            s3.num(Complex(1 - k)).num(Complex(1 - k));
            s3.den(Complex(1 - u - k)).den(Complex(1 - u));
            s3.den(Complex(u + 1)).den(Complex(u + 1 - k));
            s3.mul(kTwoPiI * kTwoPiI).mul(std::exp(kTwoPiI * Complex(u + k, 0.0)));
            const Complex rhs = eval_gamma_product(s3);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
        }
    }
}

TEST_CASE("monomial exponent of all-equal channels") {
    const double kappa = 3.137;
    SUBCASE("two-step rank-2 channel") {
        // exponent ((lambda, e_2 - e_1) - 1)/kappa; the sign of the shift is
        // fixed by the exponent formula and the scaling probe (the printed
        // worked value carries the opposite sign)
        const GenericWeight lam({-1.7123, -0.9321});
        const Params par(lam, kappa);
        const Complex got = monomial_exponent(Channel({2, 2}, 2), par);
        CHECK(got.real() == doctest::Approx((1.7123 - 1.0) / kappa).epsilon(1e-13));
    }
    SUBCASE("n=1 all-equal channels agree with mu componentwise") {
        const GenericWeight lam({-1.7123});
        const Params par(lam, kappa);
        for (int N : {1, 2, 3, 4}) {
            const Channel ch(std::vector<int>(static_cast<size_t>(N), 2), 1);
            const Complex v = monomial_exponent(ch, par);
            const ExponentVector m = mu(ch, lam, kappa);
            for (int j = 0; j < N; ++j) CHECK(std::abs(m[j] - v) < 1e-13);
        }
    }
    SUBCASE("opdam factor is 1 for all-equal channels") {
        const GenericWeight lam({-1.7123, -0.9321, -0.55});
        const Params par(lam, kappa);
        for (int n = 1; n <= 3; ++n) {
            for (int N = 2; N <= 4; ++N) {
                for (int c = 2; c <= n + 1; ++c) {
                    const Channel ch(std::vector<int>(static_cast<size_t>(N), c), n);
                    const ExponentVector e = eta(mu(ch, lam, kappa), N, kappa);
                    CHECK(std::abs(opdam_factor(e, kappa, N) - Complex(1.0, 0.0)) < 1e-12);
                }
            }
        }
    }
    SUBCASE("rejects non-all-equal channels") {
        const Params par(GenericWeight({-1.0}), kappa);
        CHECK_THROWS_AS(monomial_exponent(Channel({2, 1}, 1), par), std::invalid_argument);
    }
}

TEST_CASE("theorem factorization: product of separately finite factors") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 10; ++it) {
        const double kappa = sample_kappa(rng);
        const GenericWeight lam = sample_weight1(rng, kappa);
        const Params par(lam, kappa);
        const Channel ch({1, 2, 1}, 1);
        const ExponentVector e = eta(mu(ch, lam, kappa), 3, kappa);
        REQUIRE(genericity_check(e, kappa).pass);
        const Complex A = collapse_phase(ch, kappa);
        const Complex lc = leading_coefficient(ch, par);
        const Complex op = opdam_factor(e, kappa, 3);
        CHECK(std::isfinite(std::abs(lc)));
        CHECK(std::isfinite(std::abs(op)));
        const Complex gs = generalized_selberg(ch, par);
        CHECK(std::abs(gs - A * lc * op) <= 1e-11 * std::abs(gs));
        // the reported reordering phase is the conjugate of the collapse phase
        CHECK(std::abs(analyze(ch, kappa).A - std::conj(A)) < 1e-14);
    }
}
