#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "avc/geometry.hpp"

namespace avc {

// Three-valued label set: Bot is the "always wrong" output a corrupted
// classifier produces when the adversary can reach both classes.
enum class Label : int8_t { Neg = -1, Bot = 0, Pos = 1 };

inline Label label_of_sign(int s) { return s > 0 ? Label::Pos : (s < 0 ? Label::Neg : Label::Bot); }

inline int label_to_int(Label l) { return static_cast<int>(l); }

// x -> sgn(a.x - b), with sgn(0) = Bot. a = 0 is accepted (constant
// classifier sgn(-b)); operations that need a nontrivial normal reject it.
struct Halfspace {
    Vec a;
    Rat b;

    bool degenerate() const { return is_zero_vec(a); }
};

inline Halfspace halfspace(Vec a, Rat b) { return Halfspace{std::move(a), std::move(b)}; }

// Labeled sample with exact rational coordinates.
struct LabeledDataset {
    std::vector<Vec> points;
    std::vector<int> labels;   // each -1 or +1

    LabeledDataset() = default;
    LabeledDataset(std::vector<Vec> pts, std::vector<int> lbls)
        : points(std::move(pts)), labels(std::move(lbls)) {
        if (points.empty()) throw InputError("dataset: needs at least one example");
        if (points.size() != labels.size()) throw InputError("dataset: points/labels size mismatch");
        size_t d = points[0].size();
        for (const Vec& p : points)
            if (p.size() != d) throw InputError("dataset: inconsistent dimensions");
        for (int c : labels)
            if (c != -1 && c != 1) throw InputError("dataset: labels must be -1 or +1");
    }

    size_t size() const { return points.size(); }
    int dim() const { return static_cast<int>(points[0].size()); }
};

inline Label evaluate(const Halfspace& h, const Vec& x) {
    if (h.a.size() != x.size()) throw InputError("evaluate: dimension mismatch");
    return label_of_sign(sign(dot(h.a, x) - h.b));
}

// Label-signed distance from x to the decision boundary in the B-geometry:
// c (a.x - b) / ||a||_{B*}. Zero when the dual seminorm is infinite (the
// lineality coset crosses the boundary); a signed infinity when the dual
// seminorm is zero (no reachable boundary point).
inline SqrtRat signed_distance(const Halfspace& h, const Vec& x, int c, const ConstraintSet& body) {
    if (h.degenerate()) throw DegenerateHypothesisError("signed_distance: a = 0");
    if (static_cast<int>(h.a.size()) != body.dim() || x.size() != h.a.size())
        throw InputError("signed_distance: dimension mismatch");
    if (c != -1 && c != 1) throw InputError("signed_distance: label must be -1 or +1");
    SqrtRat dual = dual_seminorm(body, h.a);
    Rat g = c * (dot(h.a, x) - h.b);
    if (dual.is_infinite()) return SqrtRat();
    if (dual.sgn() == 0) {
        if (g == 0) return SqrtRat();
        return SqrtRat::infinity(sign(g));
    }
    return SqrtRat::from_rational(g).divided_by(dual);
}

// Finite class as an explicit table: table[h][p] in {-1, +1} over point ids
// 0..num_points-1.
struct FiniteClass {
    int num_points = 0;
    std::vector<std::vector<int8_t>> table;

    int num_hypotheses() const { return static_cast<int>(table.size()); }

    void validate() const {
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != num_points)
                throw InputError("finite class: ragged table");
            for (int8_t v : row)
                if (v != -1 && v != 1) throw InputError("finite class: labels must be -1 or +1");
        }
    }
};

// { h_x : x in Z^dim } with h_x(y) = +1 iff y = x.
struct PointIndicatorClass {
    int dim;
};

using LatticePoint = std::vector<long>;

// Axis-aligned lattice box [lo_j, hi_j] per coordinate.
struct LatticeBox {
    std::vector<long> lo;
    std::vector<long> hi;

    size_t count() const {
        size_t n = 1;
        for (size_t j = 0; j < lo.size(); ++j) {
            if (hi[j] < lo[j]) throw InputError("lattice box: empty range");
            n *= static_cast<size_t>(hi[j] - lo[j] + 1);
        }
        return n;
    }

    std::vector<LatticePoint> enumerate() const {
        std::vector<LatticePoint> pts;
        pts.reserve(count());
        LatticePoint cur(lo.begin(), lo.end());
        for (;;) {
            pts.push_back(cur);
            size_t j = 0;
            for (; j < cur.size(); ++j) {
                if (cur[j] < hi[j]) { ++cur[j]; break; }
                cur[j] = lo[j];
            }
            if (j == cur.size()) break;
        }
        return pts;
    }
};

// A finite class materialized over a window, with the point-id map kept
// around so relations and datasets can be expressed over ids.
struct TabulatedClass {
    FiniteClass cls;
    std::vector<LatticePoint> points;            // id -> lattice point
    std::map<LatticePoint, int> point_id;        // lattice point -> id
    std::vector<LatticePoint> centers;           // hypothesis id -> center (indicator classes)
    bool has_far_row = false;                    // trailing all-(-1) row for out-of-window centers

    int id_of(const LatticePoint& p) const {
        auto it = point_id.find(p);
        if (it == point_id.end()) throw CoverageError("tabulated class: point outside window");
        return it->second;
    }
};

// Materializes the indicator class over a window. Hypotheses are the
// indicators with centers inside the window plus, once, the all-(-1)
// behavior every out-of-window center shares.
inline TabulatedClass tabulate(const PointIndicatorClass& cls, const std::vector<LatticePoint>& window,
                               bool include_far_row = true) {
    if (window.empty()) throw InputError("tabulate: empty window");
    TabulatedClass out;
    out.points = window;
    for (size_t i = 0; i < window.size(); ++i) {
        if (static_cast<int>(window[i].size()) != cls.dim)
            throw InputError("tabulate: window point dimension mismatch");
        if (!out.point_id.emplace(window[i], static_cast<int>(i)).second)
            throw InputError("tabulate: duplicate window point");
    }
    out.cls.num_points = static_cast<int>(window.size());
    for (const LatticePoint& center : window) {
        std::vector<int8_t> row(window.size(), -1);
        row[out.point_id.at(center)] = 1;
        out.cls.table.push_back(std::move(row));
        out.centers.push_back(center);
    }
    if (include_far_row) {
        out.cls.table.emplace_back(window.size(), -1);
        out.has_far_row = true;
    }
    return out;
}

// Materializes a halfspace family over explicit rational points. Points on a
// decision boundary are rejected (a finite class has no Bot entries).
inline FiniteClass tabulate(const std::vector<Halfspace>& hyps, const std::vector<Vec>& points) {
    if (points.empty()) throw InputError("tabulate: empty window");
    FiniteClass out;
    out.num_points = static_cast<int>(points.size());
    for (const Halfspace& h : hyps) {
        std::vector<int8_t> row;
        row.reserve(points.size());
        for (const Vec& p : points) {
            Label l = evaluate(h, p);
            if (l == Label::Bot)
                throw InputError("tabulate: halfspace boundary passes through a window point");
            row.push_back(static_cast<int8_t>(label_to_int(l)));
        }
        out.table.push_back(std::move(row));
    }
    return out;
}

}  // namespace avc
