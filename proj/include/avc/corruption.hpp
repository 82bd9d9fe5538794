#pragma once

#include <vector>

#include "avc/hypotheses.hpp"

namespace avc {

// Nearness relation over a finite ground set of point ids: N(x) is the set of
// points the adversary may substitute for x. Every neighborhood must contain
// at least one point.
struct TabularRelation {
    int num_points = 0;
    std::vector<std::vector<int>> neighbors;

    void validate() const {
        if (static_cast<int>(neighbors.size()) != num_points)
            throw InputError("relation: neighbor map size mismatch");
        for (const auto& n : neighbors) {
            if (n.empty()) throw InputError("relation: empty neighborhood");
            for (int j : n)
                if (j < 0 || j >= num_points) throw InputError("relation: neighbor id out of range");
        }
    }

    static TabularRelation identity(int num_points) {
        TabularRelation r;
        r.num_points = num_points;
        r.neighbors.resize(num_points);
        for (int i = 0; i < num_points; ++i) r.neighbors[i] = {i};
        return r;
    }

    // R1 subseteq R2 as relations (used by monotonicity checks).
    bool subset_of(const TabularRelation& other) const {
        if (num_points != other.num_points) return false;
        for (int i = 0; i < num_points; ++i) {
            for (int j : neighbors[i]) {
                bool found = false;
                for (int k : other.neighbors[i])
                    if (k == j) { found = true; break; }
                if (!found) return false;
            }
        }
        return true;
    }
};

// Dataset over ids of a tabulated ground set.
struct IdDataset {
    std::vector<int> point_ids;
    std::vector<int> labels;

    IdDataset() = default;
    IdDataset(std::vector<int> ids, std::vector<int> lbls)
        : point_ids(std::move(ids)), labels(std::move(lbls)) {
        if (point_ids.empty()) throw InputError("id dataset: needs at least one example");
        if (point_ids.size() != labels.size()) throw InputError("id dataset: size mismatch");
        for (int c : labels)
            if (c != -1 && c != 1) throw InputError("id dataset: labels must be -1 or +1");
    }

    size_t size() const { return point_ids.size(); }
};

// 0-1 loss over the three-valued label set: Bot never matches a true label.
inline int zero_one_loss(Label predicted, int c) {
    if (c != -1 && c != 1) throw InputError("zero_one_loss: label must be -1 or +1");
    return label_to_int(predicted) == c ? 0 : 1;
}

// kappa_R(h) for a halfspace under a constraint body, evaluated at x:
//   +1 when the whole neighborhood x + B is strictly positive,
//   -1 when it is strictly negative,
//   Bot otherwise (a reachable boundary point counts: B is closed).
// An infinite dual seminorm (a not orthogonal to V_B) forces Bot everywhere.
inline Label corrupted_evaluate(const Halfspace& h, const ConstraintSet& body, const Vec& x) {
    if (static_cast<int>(h.a.size()) != body.dim() || x.size() != h.a.size())
        throw InputError("corrupted_evaluate: dimension mismatch");
    SqrtRat dual = dual_seminorm(body, h.a);
    if (dual.is_infinite()) return Label::Bot;
    Rat g = dot(h.a, x) - h.b;
    SqrtRat gval = SqrtRat::from_rational(g);
    if (gval.compare(dual) > 0) return Label::Pos;
    if (gval.compare(-dual) < 0) return Label::Neg;
    return Label::Bot;
}

// kappa_R(row) over a tabular relation: scans N(x). A neighbor outside the
// row's domain is a coverage error - the caller tabulated too small a window.
inline std::vector<Label> corrupt_tabular(const std::vector<int8_t>& row, const TabularRelation& rel) {
    if (static_cast<int>(row.size()) < rel.num_points)
        throw CoverageError("corrupt_tabular: relation ground set exceeds the tabulated row");
    std::vector<Label> out(rel.num_points);
    for (int i = 0; i < rel.num_points; ++i) {
        bool pos = false, neg = false;
        for (int j : rel.neighbors[i]) {
            if (j >= static_cast<int>(row.size()))
                throw CoverageError("corrupt_tabular: neighbor outside the tabulated row");
            (row[j] > 0 ? pos : neg) = true;
        }
        out[i] = pos && neg ? Label::Bot : (pos ? Label::Pos : Label::Neg);
    }
    return out;
}

// linf lattice-ball relation of the given radius over tabulated points:
// N(p) = { q in window : |q - p|_inf <= radius }. Every in-window point whose
// full lattice ball is not contained in the window would silently weaken the
// adversary, so the caller must pass a window padded by `radius` around every
// point it evaluates; enforce_cover lists the ids that must have full balls.
inline TabularRelation linf_lattice_relation(const TabulatedClass& tab, long radius,
                                             const std::vector<int>& enforce_cover = {}) {
    if (radius < 0) throw InputError("linf_lattice_relation: negative radius");
    TabularRelation rel;
    rel.num_points = tab.cls.num_points;
    rel.neighbors.resize(rel.num_points);
    size_t dim = tab.points.empty() ? 0 : tab.points[0].size();
    size_t full = 1;
    for (size_t j = 0; j < dim; ++j) full *= static_cast<size_t>(2 * radius + 1);
    for (int i = 0; i < rel.num_points; ++i) {
        const LatticePoint& p = tab.points[i];
        LatticeBox ball{std::vector<long>(dim), std::vector<long>(dim)};
        for (size_t j = 0; j < dim; ++j) {
            ball.lo[j] = p[j] - radius;
            ball.hi[j] = p[j] + radius;
        }
        for (const LatticePoint& q : ball.enumerate()) {
            auto it = tab.point_id.find(q);
            if (it != tab.point_id.end()) rel.neighbors[i].push_back(it->second);
        }
    }
    for (int id : enforce_cover) {
        if (id < 0 || id >= rel.num_points) throw InputError("linf_lattice_relation: bad id");
        if (rel.neighbors[id].size() != full)
            throw CoverageError("linf_lattice_relation: window does not cover the lattice ball of a data point");
    }
    return rel;
}

}  // namespace avc
