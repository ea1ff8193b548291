#include "trop/lp.hpp"

#include <algorithm>

namespace trop::lp {

namespace {

// tableau: m constraint rows x (n cols + rhs), plus cost row
struct Tableau {
    size_t m, n;
    std::vector<std::vector<Rat>> t;  // (m+1) x (n+1)
    std::vector<size_t> basis;        // size m

    void pivot(size_t r, size_t col) {
        Rat p = t[r][col];
        for (auto& v : t[r]) v /= p;
        for (size_t i = 0; i <= m; ++i) {
            if (i == r) continue;
            Rat f = t[i][col];
            if (f == 0) continue;
            for (size_t j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = col;
    }

    // Bland: entering = least column with negative reduced cost; leaving =
    // least basis variable among the minimum ratios.
    Status iterate() {
        while (true) {
            size_t enter = n;
            for (size_t j = 0; j < n; ++j)
                if (t[m][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == n) return Status::Optimal;
            size_t leave = m;
            Rat best;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = t[i][n] / t[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return Status::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

StdResult solve_standard(std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::vector<Rat> c) {
    const size_t m = A.size();
    const size_t n = m == 0 ? c.size() : A[0].size();
    for (size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }

    // phase 1: artificial variable per row
    Tableau tb;
    tb.m = m;
    tb.n = n + m;
    tb.t.assign(m + 1, std::vector<Rat>(tb.n + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) tb.t[i][j] = A[i][j];
        tb.t[i][n + i] = 1;
        tb.t[i][tb.n] = b[i];
        tb.basis.push_back(n + i);
    }
    // price out: cost row = sum of artificial costs
    for (size_t j = 0; j <= tb.n; ++j) {
        Rat s(0);
        for (size_t i = 0; i < m; ++i) s += tb.t[i][j];
        tb.t[m][j] = -s;
    }
    for (size_t i = 0; i < m; ++i) tb.t[m][n + i] = 0;
    if (tb.iterate() != Status::Optimal) throw Error("simplex: phase 1 unbounded");

    StdResult res;
    Rat phase1 = -tb.t[m][tb.n];
    if (phase1 > 0) {
        res.status = Status::Infeasible;
        // duals from the artificial columns: y_i = 1 - cbar(artificial_i)
        res.farkas.resize(m);
        for (size_t i = 0; i < m; ++i) res.farkas[i] = Rat(1) - tb.t[m][n + i];
        return res;
    }

    // drive artificials out of the basis where possible
    for (size_t i = 0; i < m; ++i) {
        if (tb.basis[i] < n) continue;
        size_t col = n;
        for (size_t j = 0; j < n; ++j)
            if (tb.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col < n) tb.pivot(i, col);
    }

    // phase 2 on the original columns; rows still carrying an artificial are
    // redundant (value 0) and harmless if the artificial column is frozen
    for (size_t j = 0; j < tb.n; ++j) tb.t[m][j] = j < n ? c[j] : Rat(0);
    tb.t[m][tb.n] = 0;
    // freeze artificial columns at zero so they never re-enter
    for (size_t i = 0; i < m; ++i)
        for (size_t j = n; j < tb.n; ++j)
            if (tb.basis[i] != j) tb.t[i][j] = 0;
    // price out the basis
    for (size_t i = 0; i < m; ++i) {
        Rat f = tb.t[m][tb.basis[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= tb.n; ++j) tb.t[m][j] -= f * tb.t[i][j];
    }
    Status st = tb.iterate();
    if (st == Status::Unbounded) {
        res.status = Status::Unbounded;
        return res;
    }
    res.status = Status::Optimal;
    res.x.assign(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.n];
    res.objective = 0;
    for (size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    return res;
}

std::optional<std::vector<Rat>> strict_feasible_point(int dim, const std::vector<lin::Row>& rows) {
    // variables: x_v = u_v - w_v (u,w >= 0), delta >= 0, one surplus per row,
    // one slack for delta <= 1
    const size_t nx = static_cast<size_t>(dim);
    size_t ncols = 2 * nx + 1 + rows.size() + 1;
    size_t delta_col = 2 * nx;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    size_t surplus = 2 * nx + 1;
    for (const auto& r : rows) {
        std::vector<Rat> row(ncols, Rat(0));
        for (const auto& [v, cc] : r.coef) {
            row[2 * v] = cc;
            row[2 * v + 1] = -cc;
        }
        if (r.rel == lin::Rel::Eq) {
            // no surplus: exact equality
        } else {
            if (r.rel == lin::Rel::Gt) row[delta_col] = -1;
            row[surplus] = -1;
        }
        ++surplus;
        A.push_back(std::move(row));
        b.push_back(r.rhs);
    }
    {
        // delta <= 1
        std::vector<Rat> row(ncols, Rat(0));
        row[delta_col] = 1;
        row[ncols - 1] = 1;
        A.push_back(std::move(row));
        b.push_back(Rat(1));
    }
    std::vector<Rat> c(ncols, Rat(0));
    c[delta_col] = -1;  // maximize delta
    StdResult res = solve_standard(std::move(A), std::move(b), std::move(c));
    if (res.status != Status::Optimal) return std::nullopt;
    if (res.x[delta_col] <= 0) return std::nullopt;
    std::vector<Rat> pt(nx);
    for (size_t v = 0; v < nx; ++v) pt[v] = res.x[2 * v] - res.x[2 * v + 1];
    return pt;
}

}  // namespace trop::lp
