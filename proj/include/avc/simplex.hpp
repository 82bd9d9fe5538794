#pragma once

#include <vector>

#include "avc/linalg.hpp"

namespace avc::lp {

enum class Status { Optimal, Infeasible, Unbounded };

enum class Rel { Le, Eq };

struct Row {
    Vec coef;
    Rel rel;
    Rat rhs;
};

struct Problem {
    int vars = 0;
    Vec objective;            // maximize objective . x over free x
    std::vector<Row> rows;

    void add_le(Vec c, Rat r) { rows.push_back({std::move(c), Rel::Le, std::move(r)}); }
    void add_eq(Vec c, Rat r) { rows.push_back({std::move(c), Rel::Eq, std::move(r)}); }
};

struct Result {
    Status status = Status::Infeasible;
    Rat value;                // objective at the optimum (Optimal only)
    Vec x;                    // witness point (Optimal; feasible point for Unbounded)
};

namespace detail {

// Standard-form simplex state: min f.y s.t. M y = g, y >= 0, M full row rank.
// Dense tableau with Bland's rule; exact rational pivoting throughout.
class Tableau {
public:
    Tableau(Mat m, Vec g, size_t real_cols)
        : t_(std::move(m)), rhs_(std::move(g)), real_cols_(real_cols) {}

    // Phase 1: append artificial columns, minimize their sum. Returns false
    // when the artificial optimum is positive (no feasible y exists).
    bool phase1() {
        size_t r = t_.size();
        for (size_t i = 0; i < r; ++i) {
            if (rhs_[i] < 0) {
                for (Rat& v : t_[i]) v = -v;
                rhs_[i] = -rhs_[i];
            }
        }
        size_t cols = real_cols_;
        for (size_t i = 0; i < r; ++i) {
            for (size_t j = 0; j < r; ++j) t_[j].push_back(i == j ? Rat(1) : Rat(0));
        }
        basis_.resize(r);
        for (size_t i = 0; i < r; ++i) basis_[i] = static_cast<int>(cols + i);
        Vec cost(cols + r, Rat(0));
        for (size_t j = cols; j < cols + r; ++j) cost[j] = 1;
        Rat opt = run(cost, cols + r);
        if (opt != 0) return false;
        // Pivot any zero-level artificial out of the basis; full row rank of
        // the real columns guarantees a pivot entry exists.
        for (size_t i = 0; i < r; ++i) {
            if (basis_[i] < static_cast<int>(real_cols_)) continue;
            size_t enter = real_cols_;
            for (size_t j = 0; j < real_cols_; ++j) {
                if (t_[i][j] != 0) { enter = j; break; }
            }
            if (enter == real_cols_) throw InternalError("simplex: rank-deficient system in phase 1");
            pivot(i, enter);
        }
        for (auto& row : t_) row.resize(real_cols_);
        return true;
    }

    // Phase 2: minimize f over the real columns. Returns Optimal/Unbounded.
    Status phase2(const Vec& f) {
        unbounded_ = false;
        run(f, real_cols_);
        return unbounded_ ? Status::Unbounded : Status::Optimal;
    }

    const std::vector<int>& basis() const { return basis_; }
    const Vec& rhs() const { return rhs_; }

private:
    // Minimizes cost over columns [0, ncols); returns the final objective.
    Rat run(const Vec& cost, size_t ncols) {
        size_t r = t_.size();
        // Reduced costs d_j = cost_j - cost_B . T_col_j, objective -cost_B . rhs.
        Vec d(ncols);
        Rat obj = 0;
        for (size_t i = 0; i < r; ++i) obj += cost[basis_[i]] * rhs_[i];
        for (size_t j = 0; j < ncols; ++j) {
            Rat s = cost[j];
            for (size_t i = 0; i < r; ++i) s -= cost[basis_[i]] * t_[i][j];
            d[j] = s;
        }
        for (;;) {
            size_t enter = ncols;
            for (size_t j = 0; j < ncols; ++j) {
                if (d[j] < 0) { enter = j; break; }   // Bland: lowest index
            }
            if (enter == ncols) return obj;
            size_t leave = r;
            for (size_t i = 0; i < r; ++i) {
                if (t_[i][enter] <= 0) continue;
                if (leave == r) { leave = i; continue; }
                Rat cur = rhs_[i] * t_[leave][enter];
                Rat best = rhs_[leave] * t_[i][enter];
                int c = cmp(cur, best);
                if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == r) { unbounded_ = true; return obj; }
            Rat ratio = rhs_[leave] / t_[leave][enter];
            obj += d[enter] * ratio;
            Rat dent = d[enter];
            pivot(leave, enter);
            // Update reduced costs: d -= dent * (pivot row after normalization).
            for (size_t j = 0; j < ncols; ++j)
                if (t_[leave][j] != 0) d[j] -= dent * t_[leave][j];
            d[enter] = 0;
        }
    }

    void pivot(size_t prow, size_t pcol) {
        size_t cols = t_[prow].size();
        Rat inv = 1 / t_[prow][pcol];
        for (size_t j = 0; j < cols; ++j) t_[prow][j] *= inv;
        rhs_[prow] *= inv;
        for (size_t i = 0; i < t_.size(); ++i) {
            if (i == prow || t_[i][pcol] == 0) continue;
            Rat f = t_[i][pcol];
            for (size_t j = 0; j < cols; ++j)
                if (t_[prow][j] != 0) t_[i][j] -= f * t_[prow][j];
            rhs_[i] -= f * rhs_[prow];
        }
        basis_[prow] = static_cast<int>(pcol);
    }

    Mat t_;
    Vec rhs_;
    std::vector<int> basis_;
    size_t real_cols_;
    bool unbounded_ = false;
};

}  // namespace detail

// Maximizes objective . x over { x : rows hold }, x free, by solving the dual
// in standard form. Deterministic (Bland's rule).
inline Result maximize(const Problem& p) {
    const size_t k = static_cast<size_t>(p.vars);
    if (p.objective.size() != k) throw InputError("lp: objective size mismatch");

    // Expand equalities into inequality pairs: A x <= b.
    Mat a;
    Vec b;
    for (const Row& row : p.rows) {
        if (row.coef.size() != k) throw InputError("lp: row size mismatch");
        a.push_back(row.coef);
        b.push_back(row.rhs);
        if (row.rel == Rel::Eq) {
            a.push_back(vec_neg(row.coef));
            b.push_back(-row.rhs);
        }
    }
    const size_t m = a.size();

    if (m == 0) {
        Result res;
        res.x = zero_vec(k);
        if (is_zero_vec(p.objective)) {
            res.status = Status::Optimal;
            res.value = 0;
        } else {
            res.status = Status::Unbounded;
        }
        return res;
    }

    // Dual equalities: for each variable j, sum_i A[i][j] lambda_i = c_j.
    // Keep a maximal consistent independent subset of equations; an
    // inconsistent system means the dual is infeasible.
    std::vector<size_t> kept;
    Mat reduced;             // running RREF of kept equation coefficient rows
    std::vector<Vec> kept_rows;
    bool inconsistent = false;
    for (size_t j = 0; j < k && !inconsistent; ++j) {
        Vec row(m + 1);
        for (size_t i = 0; i < m; ++i) row[i] = a[i][j];
        row[m] = p.objective[j];
        // Reduce against current RREF rows.
        Mat work = reduced;
        work.push_back(row);
        std::vector<int> piv = rref(work);
        if (piv.size() > reduced.size()) {
            if (piv.back() == static_cast<int>(m)) {
                inconsistent = true;                // pivot in rhs column
                break;
            }
            kept.push_back(j);
            kept_rows.push_back(std::move(row));
            reduced = std::move(work);
        }
    }

    if (inconsistent) {
        // Dual infeasible: the primal is unbounded if feasible. Decide with a
        // zero objective (always dual-consistent).
        Problem feas = p;
        feas.objective = zero_vec(k);
        Result fr = maximize(feas);
        if (fr.status == Status::Infeasible) return fr;
        Result res;
        res.status = Status::Unbounded;
        res.x = fr.x;
        return res;
    }

    const size_t r = kept.size();
    Mat md(r, Vec(m));
    Vec g(r);
    for (size_t e = 0; e < r; ++e) {
        for (size_t i = 0; i < m; ++i) md[e][i] = a[i][kept[e]];
        g[e] = p.objective[kept[e]];
    }

    detail::Tableau tab(std::move(md), std::move(g), m);
    if (!tab.phase1()) {
        // Dual infeasible on the nonnegativity side; same resolution.
        Problem feas = p;
        feas.objective = zero_vec(k);
        Result fr = maximize(feas);
        if (fr.status == Status::Infeasible) return fr;
        Result res;
        res.status = Status::Unbounded;
        res.x = fr.x;
        return res;
    }

    Vec f(m);
    for (size_t i = 0; i < m; ++i) f[i] = b[i];
    if (tab.phase2(f) == Status::Unbounded) {
        Result res;
        res.status = Status::Infeasible;
        return res;
    }

    // Simplex multipliers of the dual give the primal optimum: solve
    // (M_B)^T pi = f_B over the final basis columns.
    const std::vector<int>& basis = tab.basis();
    Mat mbt(r, Vec(r));
    Vec fb(r);
    for (size_t i = 0; i < r; ++i) {
        int col = basis[i];
        for (size_t e = 0; e < r; ++e) mbt[i][e] = a[static_cast<size_t>(col)][kept[e]];
        fb[i] = b[static_cast<size_t>(col)];
    }
    auto pi = solve_linear(std::move(mbt), fb);
    if (!pi) throw InternalError("simplex: singular basis system");

    Result res;
    res.status = Status::Optimal;
    res.x = zero_vec(k);
    for (size_t e = 0; e < r; ++e) res.x[kept[e]] = (*pi)[e];
    res.value = dot(p.objective, res.x);

    // Exact feasibility guard: the recovered x must satisfy every row.
    for (size_t i = 0; i < m; ++i) {
        if (dot(a[i], res.x) > b[i]) throw InternalError("simplex: recovered point infeasible");
    }
    return res;
}

// Convenience feasibility check (zero objective).
inline Result feasible_point(Problem p) {
    p.objective = zero_vec(p.vars);
    return maximize(p);
}

}  // namespace avc::lp
