#include "gsel/special.hpp"

#include <cmath>
#include <sstream>

namespace gsel {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos g=7, 9 terms; ~1e-13 relative over the test strip.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,  12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// log(sin z) without overflow for large |Im z|.
Complex log_sin(Complex z) {
    const Complex I(0.0, 1.0);
    if (z.imag() > 0.0)
        return -I * (kPi / 2) - std::log(2.0) - I * z + std::log(std::exp(2.0 * I * z) - 1.0);
    return -I * (kPi / 2) - std::log(2.0) + I * z + std::log(1.0 - std::exp(-2.0 * I * z));
}

Complex log_gamma_lanczos(Complex z) {
    if (z.real() < 0.5)
        return std::log(kPi) - log_sin(kPi * z) - log_gamma_lanczos(1.0 - z);
    z -= 1.0;
    Complex x(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

using ComplexL = std::complex<long double>;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;

ComplexL log_sin_l(ComplexL z) {
    const ComplexL I(0.0L, 1.0L);
    if (z.imag() > 0.0L)
        return -I * (kPiL / 2) - std::log(2.0L) - I * z + std::log(std::exp(ComplexL(2.0L) * I * z) - 1.0L);
    return -I * (kPiL / 2) - std::log(2.0L) + I * z + std::log(1.0L - std::exp(-ComplexL(2.0L) * I * z));
}

// Spouge's formula, a = 24; coefficients are exact expressions evaluated in
// long double, good to ~1e-17 for Re z >= 1/2.
ComplexL log_gamma_spouge(ComplexL z) {
    if (z.real() < 0.5L)
        return std::log(kPiL) - log_sin_l(kPiL * z) - log_gamma_spouge(1.0L - z);
    constexpr int a = 24;
    static const std::vector<long double> c = [] {
        std::vector<long double> out(a);
        out[0] = std::sqrt(2.0L * kPiL);
        long double fact = 1.0L;
        for (int k = 1; k < a; ++k) {
            if (k > 1) fact *= -static_cast<long double>(k - 1);
            out[static_cast<size_t>(k)] =
                std::pow(static_cast<long double>(a - k), k - 0.5L) *
                std::exp(static_cast<long double>(a - k)) / fact;
        }
        return out;
    }();
    z -= 1.0L;
    ComplexL s(c[0], 0.0L);
    for (int k = 1; k < a; ++k) s += c[static_cast<size_t>(k)] / (z + static_cast<long double>(k));
    const ComplexL t = z + static_cast<long double>(a);
    return (z + 0.5L) * std::log(t) - t + std::log(s);
}

void check_pole(Complex z, double pole_tol) {
    if (z.imag() != 0.0 && std::abs(z.imag()) > pole_tol) return;
    const double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z.real() - r) <= pole_tol && std::abs(z.imag()) <= pole_tol) {
        std::ostringstream os;
        os << "log_gamma: argument (" << z.real() << ", " << z.imag()
           << ") within " << pole_tol << " of pole at " << r;
        throw PoleError(os.str(), z);
    }
}

} // namespace

Complex log_gamma(Complex z, Precision prec, double pole_tol) {
    check_pole(z, pole_tol);
    if (prec == Precision::Double) return log_gamma_lanczos(z);
    const ComplexL r = log_gamma_spouge(ComplexL(z.real(), z.imag()));
    return Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
}

Complex gamma_fn(Complex z, Precision prec) {
    return std::exp(log_gamma(z, prec));
}

void GammaProduct::cancel_equal_args() {
    for (auto it = numerator_args.begin(); it != numerator_args.end();) {
        bool cancelled = false;
        for (auto jt = denominator_args.begin(); jt != denominator_args.end(); ++jt) {
            if (*jt == *it) {
                denominator_args.erase(jt);
                cancelled = true;
                break;
            }
        }
        it = cancelled ? numerator_args.erase(it) : it + 1;
    }
}

Complex eval_gamma_product(const GammaProduct& p, Precision prec, double pole_tol) {
    if (prec == Precision::Extended) {
        for (const Complex& z : p.numerator_args) check_pole(z, pole_tol);
        for (const Complex& z : p.denominator_args) check_pole(z, pole_tol);
        ComplexL s(0.0L, 0.0L);
        for (const Complex& z : p.numerator_args) s += log_gamma_spouge(ComplexL(z.real(), z.imag()));
        for (const Complex& z : p.denominator_args) s -= log_gamma_spouge(ComplexL(z.real(), z.imag()));
        const ComplexL v = ComplexL(p.scalar_prefactor.real(), p.scalar_prefactor.imag()) * std::exp(s);
        return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    Complex s(0.0, 0.0);
    for (const Complex& z : p.numerator_args) s += log_gamma(z, prec, pole_tol);
    for (const Complex& z : p.denominator_args) s -= log_gamma(z, prec, pole_tol);
    return p.scalar_prefactor * std::exp(s);
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex x, double tol, int max_terms) {
    if (std::abs(x) > 0.9)
        throw std::domain_error("gauss_2f1: |x| must be <= 0.9 (series domain)");
    check_pole(c, kDefaultPoleTol);
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int m = 0; m < max_terms; ++m) {
        const double md = static_cast<double>(m);
        term *= (a + md) * (b + md) / ((c + md) * (md + 1.0)) * x;
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) return sum;
    }
    throw PoleError("gauss_2f1: no convergence within max_terms", c);
}

} // namespace gsel
