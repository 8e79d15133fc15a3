#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <vector>

namespace gsel {

using Rational = boost::rational<long long>;
using Complex = std::complex<double>;

/// Coordinate vector in the ambient Euclidean space, exact rational entries.
struct WeightVector {
    std::vector<Rational> coords;

    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> c) : coords(std::move(c)) {}
    explicit WeightVector(int dim) : coords(static_cast<size_t>(dim), Rational(0)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    bool operator==(const WeightVector& o) const { return coords == o.coords; }

    std::vector<double> to_real() const;
};

/// Exact Euclidean pairing. Throws std::invalid_argument on dimension mismatch.
Rational inner(const WeightVector& u, const WeightVector& v);

/// Exponents of z_1..z_N; complex-valued in general.
struct ExponentVector {
    std::vector<Complex> entries;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<Complex> e) : entries(std::move(e)) {}

    int size() const { return static_cast<int>(entries.size()); }
    Complex& operator[](int i) { return entries[static_cast<size_t>(i)]; }
    const Complex& operator[](int i) const { return entries[static_cast<size_t>(i)]; }
};

/// Simple roots, fundamental weights, the h_i ladder and the positive roots
/// used by the N-point closed forms.
///
/// The ambient dimension is max(n+1, N): the ladder ends at
/// h_{n+1} = Lambda_1 - alpha_1 - ... - alpha_n, and alpha_n needs n+1
/// coordinates. All pairings among roots, h_i and e_i - e_j differences are
/// unchanged under padding to a larger ambient dimension.
struct AmbientData {
    int n = 0;
    int N = 0;
    int m_amb = 0;
    std::vector<WeightVector> simple_roots;        // alpha_1 .. alpha_{m_amb-1}
    std::vector<WeightVector> fundamental_weights; // Lambda_1 .. Lambda_{m_amb-1}
    std::vector<WeightVector> h_vectors;           // h_1 .. h_{n+1}
    std::vector<WeightVector> positive_roots_N;    // e_i - e_j, 1 <= i < j <= N

    const WeightVector& alpha(int i) const { return simple_roots.at(static_cast<size_t>(i - 1)); }
    const WeightVector& Lambda(int i) const { return fundamental_weights.at(static_cast<size_t>(i - 1)); }
    const WeightVector& h(int i) const { return h_vectors.at(static_cast<size_t>(i - 1)); }
};

/// Builds the ambient data for given n, N (both >= 1).
AmbientData build_ambient(int n, int N);

/// (1/kappa) times half the sum of the positive roots of the N-point system:
/// (1/(2 kappa)) (N-1, N-3, ..., 1-N). Throws std::domain_error for kappa == 0.
ExponentVector rho(int N, double kappa);

} // namespace gsel
