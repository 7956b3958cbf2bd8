#pragma once

#include <span>
#include <vector>

namespace orlapprox {

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int r, int c) { return data_[index(r, c)]; }
    double operator()(int r, int c) const { return data_[index(r, c)]; }
    std::span<double> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(int r) const {
        return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
    }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

struct SimplexOptions {
    /// Consecutive degenerate pivots tolerated before switching from the
    /// largest-coefficient rule to Bland's rule.
    int degenerate_streak = 50;
    /// 0 selects 50 * (rows + cols).
    int max_pivots = 0;
};

struct SimplexResult {
    std::vector<double> x;        ///< primal solution
    std::vector<double> duals;    ///< one per inequality row, >= 0
    double objective = 0.0;       ///< c^T x
    double dual_objective = 0.0;  ///< b^T y
    int pivots = 0;
    int bland_pivots = 0;
};

/// Tableau simplex for  max c^T x  s.t.  A x <= b,  x >= 0  with b >= 0.
///
/// Rows and columns may both be appended between solves, so a
/// cutting-plane / column-generation loop keeps its basis. The slack basis is
/// a feasible start and no phase one is needed. A new row that the current
/// point violates is repaired by dual simplex pivots (dual steepest edge,
/// Harris ratio test); a new column with positive reduced cost is brought in
/// by primal pivots. Callers should add only one of the two kinds between
/// solves so that either primal or dual feasibility holds.
///
/// Primal pivots: entering column by largest reduced cost, leaving row by
/// minimum ratio with ties broken toward the smallest basic index. After a
/// run of degenerate pivots the entering rule switches to Bland's
/// smallest-index rule, which guarantees termination.
class DenseSimplex {
public:
    DenseSimplex() = default;
    explicit DenseSimplex(std::span<const double> costs, SimplexOptions options = {});

    int rows() const { return m_; }
    int columns() const { return n_; }

    /// Appends  a^T x <= b  (b >= 0), a indexed by structural column.
    int add_row(std::span<const double> a, double b);

    /// Appends a structural column, a indexed by row.
    int add_column(std::span<const double> a, double cost);

    /// Optimizes. Throws SolverError when unbounded, when dual pivots find
    /// no entering column, or at the pivot cap.
    void solve();

    std::vector<double> primal() const;
    /// One per row, in insertion order.
    std::vector<double> duals() const;
    /// y^T a for a column given by its entries on the current rows.
    double price(std::span<const double> a) const;
    double objective() const { return objective_; }
    int pivots() const { return pivots_; }
    int bland_pivots() const { return bland_pivots_; }
    int dual_pivots() const { return dual_pivots_; }

private:
    void pivot(int row, int col);
    void dual_phase(int cap, int& used);
    void primal_phase(int cap, int& used);
    int width() const { return static_cast<int>(reduced_.size()); }

    int n_ = 0;
    int m_ = 0;
    SimplexOptions options_;
    // Tableau columns in insertion order; the maps below say which is which.
    std::vector<std::vector<double>> rows_;
    std::vector<double> rhs_;
    std::vector<double> reduced_;  // z_j - c_j
    std::vector<int> basis_;
    std::vector<int> struct_col_;
    std::vector<int> slack_col_;
    std::vector<int> col_struct_;  // structural index, or -1 for a slack
    double objective_ = 0.0;
    double cost_scale_ = 0.0;
    double pivot_scale_ = 0.0;
    int pivots_ = 0;
    int bland_pivots_ = 0;
    int dual_pivots_ = 0;
};

/// One-shot solve of  max c^T x, A x <= b, x >= 0.
SimplexResult simplex_maximize(const DenseMatrix& a, std::span<const double> b, std::span<const double> c,
                               const SimplexOptions& options = {});

}  // namespace orlapprox
