#include "orlapprox/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orlapprox/errors.hpp"

namespace orlapprox {

DenseSimplex::DenseSimplex(std::span<const double> costs, SimplexOptions options) : options_(options) {
    for (double c : costs) add_column({}, c);
}

int DenseSimplex::add_row(std::span<const double> a, double b) {
    if (static_cast<int>(a.size()) != n_) throw ConfigError("simplex: row length mismatch");
    if (!(b >= 0.0)) throw DomainError("simplex: right-hand side must be >= 0");
    for (auto& row : rows_) row.push_back(0.0);
    reduced_.push_back(0.0);
    const int slack = width() - 1;
    col_struct_.push_back(-1);
    slack_col_.push_back(slack);
    std::vector<double> row(static_cast<std::size_t>(width()), 0.0);
    for (int j = 0; j < n_; ++j) {
        row[static_cast<std::size_t>(struct_col_[static_cast<std::size_t>(j)])] = a[static_cast<std::size_t>(j)];
    }
    row[static_cast<std::size_t>(slack)] = 1.0;
    double r = b;
    for (int i = 0; i < m_; ++i) {
        const auto v = static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)]);
        const double f = row[v];
        if (f == 0.0) continue;
        const auto& src = rows_[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * src[j];
        row[v] = 0.0;
        r -= f * rhs_[static_cast<std::size_t>(i)];
    }
    for (double v : a) pivot_scale_ = std::max(pivot_scale_, std::abs(v));
    rows_.push_back(std::move(row));
    rhs_.push_back(r);
    basis_.push_back(slack);
    return m_++;
}

int DenseSimplex::add_column(std::span<const double> a, double cost) {
    if (static_cast<int>(a.size()) != m_) throw ConfigError("simplex: column length mismatch");
    // Tableau column is B^{-1} a; B^{-1} sits in the slack columns.
    for (int i = 0; i < m_; ++i) {
        auto& row = rows_[static_cast<std::size_t>(i)];
        double v = 0.0;
        for (int r = 0; r < m_; ++r) {
            v += row[static_cast<std::size_t>(slack_col_[static_cast<std::size_t>(r)])] * a[static_cast<std::size_t>(r)];
        }
        row.push_back(v);
    }
    reduced_.push_back(price(a) - cost);
    struct_col_.push_back(width() - 1);
    col_struct_.push_back(n_);
    for (double v : a) pivot_scale_ = std::max(pivot_scale_, std::abs(v));
    cost_scale_ = std::max(cost_scale_, std::abs(cost));
    return n_++;
}

double DenseSimplex::price(std::span<const double> a) const {
    double s = 0.0;
    for (int r = 0; r < m_; ++r) {
        s += reduced_[static_cast<std::size_t>(slack_col_[static_cast<std::size_t>(r)])] * a[static_cast<std::size_t>(r)];
    }
    return s;
}

void DenseSimplex::pivot(int prow_index, int col) {
    const auto w = static_cast<std::size_t>(width());
    auto& prow = rows_[static_cast<std::size_t>(prow_index)];
    const double inv = 1.0 / prow[static_cast<std::size_t>(col)];
    for (std::size_t j = 0; j < w; ++j) prow[j] *= inv;
    prow[static_cast<std::size_t>(col)] = 1.0;
    rhs_[static_cast<std::size_t>(prow_index)] *= inv;
    const double prhs = rhs_[static_cast<std::size_t>(prow_index)];
    const double* __restrict src = prow.data();
    for (int i = 0; i < m_; ++i) {
        if (i == prow_index) continue;
        auto& row = rows_[static_cast<std::size_t>(i)];
        const double f = row[static_cast<std::size_t>(col)];
        if (f == 0.0) continue;
        double* __restrict dst = row.data();
        for (std::size_t j = 0; j < w; ++j) dst[j] -= f * src[j];
        dst[col] = 0.0;
        rhs_[static_cast<std::size_t>(i)] -= f * prhs;
    }
    const double f = reduced_[static_cast<std::size_t>(col)];
    double* __restrict red = reduced_.data();
    for (std::size_t j = 0; j < w; ++j) red[j] -= f * src[j];
    red[col] = 0.0;
    objective_ -= f * prhs;
    basis_[static_cast<std::size_t>(prow_index)] = col;
}

void DenseSimplex::dual_phase(int cap, int& used) {
    const double pivot_tol = 1e-11 * std::max(pivot_scale_, 1e-300);
    const double cost_tol = 1e-11 * std::max(cost_scale_, 1e-300);
    double feas_tol = 0.0;
    for (double v : rhs_) feas_tol = std::max(feas_tol, std::abs(v));
    feas_tol = 1e-12 * std::max(1.0, feas_tol);
    const int w = width();
    while (true) {
        // Dual steepest edge: infeasibility over the norm of the B^{-1} row.
        int leave = -1;
        double score = 0.0;
        for (int i = 0; i < m_; ++i) {
            const double r = rhs_[static_cast<std::size_t>(i)];
            if (r >= -feas_tol) continue;
            const auto& row = rows_[static_cast<std::size_t>(i)];
            double norm2 = 0.0;
            for (int k : slack_col_) norm2 += row[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
            const double sc = r * r / std::max(norm2, 1e-300);
            if (sc > score) {
                score = sc;
                leave = i;
            }
        }
        if (leave < 0) return;
        const auto& row = rows_[static_cast<std::size_t>(leave)];
        // Two-pass (Harris) ratio test: find the smallest ratio under a
        // slightly relaxed bound, then take the largest pivot within it.
        double bound = std::numeric_limits<double>::infinity();
        for (int j = 0; j < w; ++j) {
            const double coef = row[static_cast<std::size_t>(j)];
            if (coef >= -pivot_tol) continue;
            const double d = std::max(0.0, reduced_[static_cast<std::size_t>(j)]);
            bound = std::min(bound, (d + cost_tol) / -coef);
        }
        int enter = -1;
        double biggest = 0.0;
        for (int j = 0; j < w; ++j) {
            const double coef = row[static_cast<std::size_t>(j)];
            if (coef >= -pivot_tol) continue;
            const double d = std::max(0.0, reduced_[static_cast<std::size_t>(j)]);
            if (d / -coef <= bound && -coef > biggest) {
                enter = j;
                biggest = -coef;
            }
        }
        if (enter < 0) throw SolverError("simplex: row " + std::to_string(leave) + " cannot be satisfied");
        if (++used > cap) throw SolverError("simplex: pivot cap " + std::to_string(cap) + " reached in dual pivots");
        ++pivots_;
        ++dual_pivots_;
        pivot(leave, enter);
    }
}

void DenseSimplex::primal_phase(int cap, int& used) {
    const double pivot_tol = 1e-11 * std::max(pivot_scale_, 1e-300);
    const double cost_tol = 1e-11 * std::max(cost_scale_, 1e-300);
    double feas_tol = 0.0;
    for (double v : rhs_) feas_tol = std::max(feas_tol, std::abs(v));
    feas_tol = 1e-12 * std::max(1.0, feas_tol);
    const int w = width();
    int streak = 0;
    bool bland = false;
    while (true) {
        int enter = -1;
        if (bland) {
            for (int j = 0; j < w; ++j) {
                if (reduced_[static_cast<std::size_t>(j)] < -cost_tol) {
                    enter = j;
                    break;
                }
            }
        } else {
            double score = cost_tol;
            for (int j = 0; j < w; ++j) {
                const double d = -reduced_[static_cast<std::size_t>(j)];
                if (d > score) {
                    score = d;
                    enter = j;
                }
            }
        }
        if (enter < 0) return;

        // Harris ratio test: bound the step under a slightly relaxed
        // feasibility tolerance, then take the largest pivot inside it
        // (smallest basic index in Bland mode).
        double bound = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m_; ++i) {
            const double coef = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (coef <= pivot_tol) continue;
            bound = std::min(bound, (std::max(0.0, rhs_[static_cast<std::size_t>(i)]) + feas_tol) / coef);
        }
        int leave = -1;
        double best_ratio = 0.0;
        double biggest = 0.0;
        for (int i = 0; i < m_; ++i) {
            const double coef = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (coef <= pivot_tol) continue;
            const double ratio = std::max(0.0, rhs_[static_cast<std::size_t>(i)]) / coef;
            if (ratio > bound) continue;
            const bool take = leave < 0 || (bland ? basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]
                                                  : coef > biggest);
            if (take) {
                leave = i;
                best_ratio = ratio;
                biggest = coef;
            }
        }
        if (leave < 0) throw SolverError("simplex: problem is unbounded in column " + std::to_string(enter));
        if (++used > cap) {
            throw SolverError("simplex: pivot cap " + std::to_string(cap) + " reached (" +
                              std::to_string(bland_pivots_) + " Bland pivots, objective " +
                              std::to_string(objective_) + ")");
        }
        ++pivots_;
        if (bland) ++bland_pivots_;
        if (best_ratio <= 1e-14) {
            if (++streak > options_.degenerate_streak) bland = true;
        } else {
            streak = 0;
            bland = false;
        }
        pivot(leave, enter);
    }
}

void DenseSimplex::solve() {
    const int cap = options_.max_pivots > 0 ? options_.max_pivots : 50 * (m_ + n_);
    int used = 0;
    dual_phase(cap, used);
    primal_phase(cap, used);
}

std::vector<double> DenseSimplex::primal() const {
    std::vector<double> x(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i) {
        const int v = col_struct_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
        if (v >= 0) x[static_cast<std::size_t>(v)] = std::max(0.0, rhs_[static_cast<std::size_t>(i)]);
    }
    return x;
}

std::vector<double> DenseSimplex::duals() const {
    std::vector<double> y(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        y[static_cast<std::size_t>(i)] = std::max(0.0, reduced_[static_cast<std::size_t>(slack_col_[static_cast<std::size_t>(i)])]);
    }
    return y;
}

SimplexResult simplex_maximize(const DenseMatrix& a, std::span<const double> b, std::span<const double> c,
                               const SimplexOptions& options) {
    if (a.rows() != static_cast<int>(b.size()) || a.cols() != static_cast<int>(c.size())) {
        throw ConfigError("simplex_maximize: dimension mismatch");
    }
    DenseSimplex lp(c, options);
    for (int i = 0; i < a.rows(); ++i) lp.add_row(a.row(i), b[static_cast<std::size_t>(i)]);
    lp.solve();
    SimplexResult out;
    out.x = lp.primal();
    out.duals = lp.duals();
    for (std::size_t j = 0; j < out.x.size(); ++j) out.objective += c[j] * out.x[j];
    for (std::size_t i = 0; i < out.duals.size(); ++i) out.dual_objective += b[i] * out.duals[i];
    out.pivots = lp.pivots();
    out.bland_pivots = lp.bland_pivots();
    return out;
}

}  // namespace orlapprox
