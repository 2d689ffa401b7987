#pragma once

#include "dibm/exec.hpp"

#include <span>
#include <utility>
#include <vector>

namespace dibm {

/// Square matrix in compressed row storage. Column indices are sorted and
/// unique within each row.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Builds a zero-valued matrix from per-row column lists (sorted and
    /// deduplicated here).
    static SparseMatrix from_pattern(std::vector<std::vector<int>> rows);

    [[nodiscard]] int size() const { return static_cast<int>(row_offsets_.size()) - 1; }
    [[nodiscard]] std::size_t nonzeros() const { return values_.size(); }

    [[nodiscard]] std::span<const int> row_cols(int i) const
    {
        return {cols_.data() + row_offsets_[i], cols_.data() + row_offsets_[i + 1]};
    }
    [[nodiscard]] std::span<const double> row_values(int i) const
    {
        return {values_.data() + row_offsets_[i], values_.data() + row_offsets_[i + 1]};
    }
    [[nodiscard]] std::span<double> row_values(int i)
    {
        return {values_.data() + row_offsets_[i], values_.data() + row_offsets_[i + 1]};
    }

    /// Storage slot of (i, j); -1 when structurally zero.
    [[nodiscard]] std::ptrdiff_t slot(int i, int j) const;

    /// Value at (i, j), zero when outside the pattern.
    [[nodiscard]] double at(int i, int j) const;

    /// Adds to an entry in the pattern; throws if (i, j) is structurally zero.
    void add(int i, int j, double v);

    [[nodiscard]] const std::vector<int>& row_offsets() const { return row_offsets_; }
    [[nodiscard]] const std::vector<int>& cols() const { return cols_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] std::vector<double>& values() { return values_; }

    [[nodiscard]] static SparseMatrix identity(int n);

private:
    std::vector<int> row_offsets_{0};
    std::vector<int> cols_;
    std::vector<double> values_;
};

/// Max over entries of |A(i,j) - B(i,j)| over the union of both patterns.
double max_abs_difference(const SparseMatrix& a, const SparseMatrix& b);

/// y = A x. Throws std::invalid_argument on dimension mismatch.
void matvec(const SparseMatrix& a, std::span<const double> x, std::span<double> y, Exec exec = Exec::Parallel);
std::vector<double> matvec(const SparseMatrix& a, std::span<const double> x, Exec exec = Exec::Parallel);

double dot(std::span<const double> a, std::span<const double> b, Exec exec = Exec::Serial);
double norm2(std::span<const double> a, Exec exec = Exec::Serial);

struct SolveReport {
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
    /// Preconditioned residual norms per iteration when requested.
    std::vector<double> history;
};

struct CgOptions {
    double tol = 1e-10;
    int max_iterations = -1; // <= 0: 20 * sqrt(n)
    Exec exec = Exec::Parallel;
    bool record_history = false;
};

/// Jacobi-preconditioned conjugate gradients for symmetric positive definite A.
/// On non-convergence the best iterate is returned with converged = false.
std::pair<std::vector<double>, SolveReport> cg_solve(const SparseMatrix& a, std::span<const double> b,
                                                     const CgOptions& options = {});

} // namespace dibm
