#include "gsel/rootsys.hpp"

#include <stdexcept>

namespace gsel {

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    if (coords.size() != o.coords.size())
        throw std::invalid_argument("WeightVector: dimension mismatch");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    if (coords.size() != o.coords.size())
        throw std::invalid_argument("WeightVector: dimension mismatch");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

std::vector<double> WeightVector::to_real() const {
    std::vector<double> out(coords.size());
    for (size_t i = 0; i < coords.size(); ++i)
        out[i] = boost::rational_cast<double>(coords[i]);
    return out;
}

Rational inner(const WeightVector& u, const WeightVector& v) {
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("inner: dimension mismatch");
    Rational s(0);
    for (size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * v.coords[i];
    return s;
}

AmbientData build_ambient(int n, int N) {
    if (n < 1 || N < 1) throw std::invalid_argument("build_ambient: n, N must be >= 1");
    AmbientData amb;
    amb.n = n;
    amb.N = N;
    const int m = std::max(n + 1, N);
    amb.m_amb = m;

    auto basis = [m](int i) {
        WeightVector v(m);
        v.coords[static_cast<size_t>(i)] = Rational(1);
        return v;
    };

    for (int i = 0; i + 1 < m; ++i)
        amb.simple_roots.push_back(basis(i) - basis(i + 1));

    // Lambda_i = e_1 + ... + e_i - (i/m) (e_1 + ... + e_m)
    for (int i = 1; i < m; ++i) {
        WeightVector v(m);
        for (int r = 0; r < i; ++r) v.coords[static_cast<size_t>(r)] += Rational(1);
        for (int r = 0; r < m; ++r) v.coords[static_cast<size_t>(r)] -= Rational(i, m);
        amb.fundamental_weights.push_back(std::move(v));
    }

    // h_1 = Lambda_1, h_{i+1} = h_i - alpha_i
    amb.h_vectors.push_back(amb.fundamental_weights[0]);
    for (int i = 1; i <= n; ++i)
        amb.h_vectors.push_back(amb.h_vectors.back() - amb.simple_roots[static_cast<size_t>(i - 1)]);

    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            amb.positive_roots_N.push_back(basis(i) - basis(j));

    return amb;
}

ExponentVector rho(int N, double kappa) {
    if (N < 1) throw std::invalid_argument("rho: N must be >= 1");
    if (kappa == 0.0) throw std::domain_error("rho: kappa must be nonzero");
    std::vector<Complex> e(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i)
        e[static_cast<size_t>(i)] = Complex(static_cast<double>(N - 1 - 2 * i) / (2.0 * kappa), 0.0);
    return ExponentVector(std::move(e));
}

} // namespace gsel
