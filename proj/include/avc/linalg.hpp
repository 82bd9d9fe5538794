#pragma once

#include <optional>
#include <vector>

#include "avc/rational.hpp"

namespace avc {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vec_sub: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vec_add: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_scale(const Vec& a, const Rat& t) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

inline Vec vec_neg(const Vec& a) { return vec_scale(a, Rat(-1)); }

inline bool is_zero_vec(const Vec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

inline Vec unit_vec(size_t n, size_t i) {
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

// Strict lexicographic order by coordinates.
inline bool lex_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

// Reduced row echelon form in place. Returns the pivot column of each
// surviving nonzero row, in row order.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

inline bool linearly_independent(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return true;
    return rank(vectors) == static_cast<int>(vectors.size());
}

// Canonical nullspace basis of m (RREF-based): one vector per free column, in
// ascending free-column order, with a 1 in the free coordinate.
inline std::vector<Vec> nullspace(Mat m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact solve of A x = b. Returns nullopt when inconsistent; free variables
// are set to zero.
inline std::optional<Vec> solve_linear(Mat a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("solve_linear: shape mismatch");
    if (a.empty()) return Vec{};
    size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // A pivot in the augmented column means inconsistency.
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    Vec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

// Basis (canonical) of the subspace orthogonal to all given vectors in R^dim.
inline std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vectors, size_t dim) {
    if (vectors.empty()) {
        std::vector<Vec> full;
        for (size_t i = 0; i < dim; ++i) full.push_back(unit_vec(dim, i));
        return full;
    }
    Mat m;
    for (const Vec& v : vectors) {
        if (v.size() != dim) throw InputError("orthogonal_complement: dimension mismatch");
        m.push_back(v);
    }
    return nullspace(std::move(m));
}

// Orthogonal projection of x onto span(basis) via the Gram system.
inline Vec project_onto_span(const std::vector<Vec>& basis, const Vec& x) {
    if (basis.empty()) return zero_vec(x.size());
    size_t k = basis.size();
    Mat gram(k, Vec(k));
    Vec rhs(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], x);
    }
    auto lambda = solve_linear(std::move(gram), rhs);
    if (!lambda) throw InputError("project_onto_span: dependent basis");
    Vec p = zero_vec(x.size());
    for (size_t i = 0; i < k; ++i) p = vec_add(p, vec_scale(basis[i], (*lambda)[i]));
    return p;
}

// Membership of x in span(vectors).
inline bool in_span(const std::vector<Vec>& vectors, const Vec& x) {
    if (is_zero_vec(x)) return true;
    if (vectors.empty()) return false;
    Mat m(vectors.begin(), vectors.end());
    int r0 = rank(m);
    m.push_back(x);
    return rank(m) == r0;
}

}  // namespace avc
