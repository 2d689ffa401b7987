#include "dibm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dibm {

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

SparseMatrix SparseMatrix::from_pattern(std::vector<std::vector<int>> rows)
{
    SparseMatrix m;
    const int n = static_cast<int>(rows.size());
    m.row_offsets_.assign(rows.size() + 1, 0);
    for (int i = 0; i < n; ++i) {
        auto& r = rows[i];
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        if (!r.empty() && (r.front() < 0 || r.back() >= n))
            throw std::invalid_argument("SparseMatrix: column index out of range in row " + std::to_string(i));
        m.row_offsets_[i + 1] = m.row_offsets_[i] + static_cast<int>(r.size());
    }
    m.cols_.reserve(m.row_offsets_.back());
    for (const auto& r : rows)
        m.cols_.insert(m.cols_.end(), r.begin(), r.end());
    m.values_.assign(m.cols_.size(), 0.0);
    return m;
}

SparseMatrix SparseMatrix::identity(int n)
{
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i)
        rows[i] = {i};
    auto m = from_pattern(std::move(rows));
    std::fill(m.values_.begin(), m.values_.end(), 1.0);
    return m;
}

std::ptrdiff_t SparseMatrix::slot(int i, int j) const
{
    const auto begin = cols_.begin() + row_offsets_[i];
    const auto end = cols_.begin() + row_offsets_[i + 1];
    const auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j)
        return -1;
    return it - cols_.begin();
}

double SparseMatrix::at(int i, int j) const
{
    const auto s = slot(i, j);
    return s < 0 ? 0.0 : values_[s];
}

void SparseMatrix::add(int i, int j, double v)
{
    const auto s = slot(i, j);
    if (s < 0)
        throw std::out_of_range("SparseMatrix::add: (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") not in pattern");
    values_[s] += v;
}

double max_abs_difference(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("max_abs_difference: dimension mismatch");
    double diff = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        const auto ca = a.row_cols(i);
        const auto va = a.row_values(i);
        for (std::size_t k = 0; k < ca.size(); ++k)
            diff = std::max(diff, std::abs(va[k] - b.at(i, ca[k])));
        const auto cb = b.row_cols(i);
        const auto vb = b.row_values(i);
        for (std::size_t k = 0; k < cb.size(); ++k)
            if (a.slot(i, cb[k]) < 0)
                diff = std::max(diff, std::abs(vb[k]));
    }
    return diff;
}

void matvec(const SparseMatrix& a, std::span<const double> x, std::span<double> y, Exec exec)
{
    const int n = a.size();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("matvec: dimension mismatch");
    const int* offsets = a.row_offsets().data();
    const int* cols = a.cols().data();
    const double* vals = a.values().data();

    if (exec == Exec::Serial) {
        for (int i = 0; i < n; ++i) {
            double sum = 0.0;
            for (int k = offsets[i]; k < offsets[i + 1]; ++k)
                sum += vals[k] * x[cols[k]];
            y[i] = sum;
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int k = offsets[i]; k < offsets[i + 1]; ++k)
            sum += vals[k] * x[cols[k]];
        y[i] = sum;
    }
}

std::vector<double> matvec(const SparseMatrix& a, std::span<const double> x, Exec exec)
{
    std::vector<double> y(x.size());
    matvec(a, x, y, exec);
    return y;
}

double dot(std::span<const double> a, std::span<const double> b, Exec exec)
{
    const auto n = static_cast<std::ptrdiff_t>(a.size());
    double sum = 0.0;
    if (exec == Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            sum += a[i] * b[i];
        return sum;
    }
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        sum += a[i] * b[i];
    return sum;
}

double norm2(std::span<const double> a, Exec exec) { return std::sqrt(dot(a, a, exec)); }

std::pair<std::vector<double>, SolveReport> cg_solve(const SparseMatrix& a, std::span<const double> b,
                                                     const CgOptions& options)
{
    const int n = a.size();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("cg_solve: dimension mismatch");
    if (!(options.tol > 0.0))
        throw std::invalid_argument("cg_solve: tolerance must be positive");
    const int max_it = options.max_iterations > 0
                           ? options.max_iterations
                           : std::max(1, static_cast<int>(20.0 * std::sqrt(static_cast<double>(n))));
    const Exec exec = options.exec;

    std::vector<double> inv_diag(n);
    for (int i = 0; i < n; ++i) {
        const double d = a.at(i, i);
        if (!(d > 0.0))
            throw std::invalid_argument("cg_solve: non-positive diagonal in row " + std::to_string(i));
        inv_diag[i] = 1.0 / d;
    }

    SolveReport report;
    std::vector<double> x(n, 0.0);
    const double b_norm = norm2(b, exec);
    if (b_norm == 0.0) {
        report.converged = true;
        return {x, report};
    }

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> z(n), p(n), q(n);
    for (int i = 0; i < n; ++i)
        z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z, exec);

    std::vector<double> best = x;
    double best_res = 1.0;
    report.relative_residual = 1.0;
    if (options.record_history)
        report.history.push_back(1.0);

    for (int it = 1; it <= max_it; ++it) {
        matvec(a, p, q, exec);
        const double pq = dot(p, q, exec);
        if (!(pq > 0.0))
            break;
        const double alpha = rz / pq;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        const double res = norm2(r, exec) / b_norm;
        report.iterations = it;
        report.relative_residual = res;
        if (options.record_history)
            report.history.push_back(res);
        if (res < best_res) {
            best_res = res;
            best = x;
        }
        if (res <= options.tol) {
            report.converged = true;
            return {x, report};
        }
        for (int i = 0; i < n; ++i)
            z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z, exec);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i)
            p[i] = z[i] + beta * p[i];
    }
    report.relative_residual = best_res;
    return {best, report};
}

} // namespace dibm
