#pragma once

// Independent reference computations used only by the tests.

#include "dibm/geometry.hpp"
#include "dibm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

/// Integral of x^a y^b over the triangle (0,0),(1,0),(0,1).
inline double monomial_on_unit_triangle(int a, int b) { return factorial(a) * factorial(b) / factorial(a + b + 2); }

inline Dense to_dense(const dibm::SparseMatrix& m)
{
    Dense d(m.size(), std::vector<double>(m.size(), 0.0));
    for (int i = 0; i < m.size(); ++i) {
        const auto cols = m.row_cols(i);
        const auto vals = m.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k)
            d[i][cols[k]] = vals[k];
    }
    return d;
}

inline std::vector<double> dense_matvec(const Dense& a, const std::vector<double>& x)
{
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            y[i] += a[i][j] * x[j];
    return y;
}

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Dense a, std::vector<double> b)
{
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k]))
                p = i;
        if (a[p][k] == 0.0)
            throw std::runtime_error("dense_solve: singular matrix");
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            if (f == 0.0)
                continue;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Direct Cholesky solve of an SPD sparse matrix whose entries all lie within
/// the given half-bandwidth. Dense arithmetic inside the band, no fill-in
/// dropped, so this is an exact direct elimination.
inline std::vector<double> banded_cholesky_solve(const dibm::SparseMatrix& a, const std::vector<double>& b)
{
    const int n = a.size();
    int bw = 0;
    for (int i = 0; i < n; ++i)
        for (int j : a.row_cols(i))
            bw = std::max(bw, std::abs(i - j));
    // band storage: L(i, j) for i - bw <= j <= i at l[i][j - i + bw]
    std::vector<std::vector<double>> l(n, std::vector<double>(bw + 1, 0.0));
    for (int i = 0; i < n; ++i) {
        const auto cols = a.row_cols(i);
        const auto vals = a.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (cols[k] <= i)
                l[i][cols[k] - i + bw] = vals[k];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - bw); j <= i; ++j) {
            double s = l[i][j - i + bw];
            for (int k = std::max({0, i - bw, j - bw}); k < j; ++k)
                s -= l[i][k - i + bw] * l[j][k - j + bw];
            if (j == i) {
                if (!(s > 0.0))
                    throw std::runtime_error("banded_cholesky_solve: matrix not SPD");
                l[i][bw] = std::sqrt(s);
            } else {
                l[i][j - i + bw] = s / l[j][bw];
            }
        }
    }
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = std::max(0, i - bw); k < i; ++k)
            s -= l[i][k - i + bw] * y[k];
        y[i] = s / l[i][bw];
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k <= std::min(n - 1, i + bw); ++k)
            s -= l[k][i - k + bw] * x[k];
        x[i] = s / l[i][bw];
    }
    return x;
}

/// min / max of |d| over a triangle by dense barycentric sampling (vertices included).
inline std::pair<double, double> sampled_abs_distance(const dibm::Triangle& t, const dibm::ImplicitDomain& dom,
                                                      int m = 400)
{
    double lo = 1e300;
    double hi = 0.0;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; i + j <= m; ++j) {
            const double a = static_cast<double>(i) / m;
            const double b = static_cast<double>(j) / m;
            const double d = std::abs(dom(dibm::from_barycentric(t, {1.0 - a - b, a, b})));
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    return {lo, hi};
}

/// Integral of x^2 + y^2 over a simple counterclockwise polygon via Green's theorem.
inline double polygon_polar_moment(const std::vector<dibm::Point2>& poly)
{
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        const double c = p.x * q.y - q.x * p.y;
        s += c * (p.x * p.x + p.x * q.x + q.x * q.x + p.y * p.y + p.y * q.y + q.y * q.y);
    }
    return s / 12.0;
}

inline double polygon_area(const std::vector<dibm::Point2>& poly)
{
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        s += dibm::cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * s;
}

} // namespace oracle
