// Dense-matrix and quadrature helpers for the test suites. Everything here is
// built from first principles (explicit Fourier sums, Simpson quadrature) so it
// stays independent of the library code paths it checks.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "qtent/statevector.hpp"

namespace oracles {

using qtent::cplx;
using Mat = std::vector<std::vector<cplx>>;

inline Mat zeros(std::size_t n)
{
    return Mat(n, std::vector<cplx>(n, cplx{0.0, 0.0}));
}

inline Mat identity(std::size_t n)
{
    Mat m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = cplx{1.0, 0.0};
    return m;
}

/// <q|F|p> = e^{sign 2 pi i p q / N} / sqrt(N)
inline Mat dft_matrix(std::size_t n, int sign)
{
    Mat m = zeros(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
            m[q][p] = norm * std::polar(1.0, sign * 2.0 * qtent::pi *
                                                 static_cast<double>((p * q) % n) /
                                                 static_cast<double>(n));
    return m;
}

inline Mat mat_mult(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size();
    Mat c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i][k];
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

inline double max_abs_diff(const Mat& a, const Mat& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

/// ||A^dag A - 1||_max
inline double unitarity_defect(const Mat& a)
{
    const std::size_t n = a.size();
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(a[k][i]) * a[k][j];
            if (i == j) acc -= 1.0;
            m = std::max(m, std::abs(acc));
        }
    }
    return m;
}

/// Dense matrix of a state transformation, column p = op applied to |p>.
inline Mat matrix_of(int n_qubits, const std::function<void(qtent::StateVector&)>& op)
{
    const std::size_t n = std::size_t{1} << n_qubits;
    Mat m = zeros(n);
    for (std::size_t p = 0; p < n; ++p) {
        qtent::StateVector s = qtent::StateVector::basis_state(n_qubits, p);
        op(s);
        for (std::size_t q = 0; q < n; ++q) m[q][p] = s[q];
    }
    return m;
}

/// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol, int depth = 40)
{
    const double c = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fc = f(c);
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double a_, double b_, double fa_, double fb_, double fc_, double whole,
            int d) -> double {
        const double c_ = 0.5 * (a_ + b_);
        const double lm = 0.5 * (a_ + c_), rm = 0.5 * (c_ + b_);
        const double flm = f(lm), frm = f(rm);
        const double left = (c_ - a_) / 6.0 * (fa_ + 4.0 * flm + fc_);
        const double right = (b_ - c_) / 6.0 * (fc_ + 4.0 * frm + fb_);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return rec(a_, c_, fa_, fc_, flm, left, d - 1) +
               rec(c_, b_, fc_, fb_, frm, right, d - 1);
    };
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    return rec(a, b, fa, fb, fc, whole, depth);
}

} // namespace oracles
