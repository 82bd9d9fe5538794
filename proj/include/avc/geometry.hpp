#pragma once

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "avc/linalg.hpp"
#include "avc/simplex.hpp"
#include "avc/sqrt_rat.hpp"

namespace avc {

enum class BallKind { L1, L2, LInf };

// The perturbation budget is folded into the body: the represented set is the
// full perturbation set, radius included. Radius 0 degenerates to {0}.
struct LpBall {
    BallKind p;
    Rat radius;
};

// V-representation; required origin-symmetric.
struct Polytope {
    std::vector<Vec> vertices;
};

// The degenerate no-adversary body {0}.
struct Identity {};

using Body = std::variant<LpBall, Polytope, Identity>;

// Nonempty, closed, convex, origin-symmetric constraint body in R^dim:
// a bounded part (ball / polytope / {0}) Minkowski-summed with the span of
// `lineality` (unbounded perturbation directions).
class ConstraintSet {
public:
    ConstraintSet(int dim, Body body, std::vector<Vec> lineality = {})
        : dim_(dim), body_(std::move(body)), lineality_(std::move(lineality)) {
        if (dim_ < 1) throw InputError("constraint set: dimension must be >= 1");
        if (const LpBall* ball = std::get_if<LpBall>(&body_)) {
            if (ball->radius < 0) throw InputError("constraint set: negative radius");
        } else if (const Polytope* poly = std::get_if<Polytope>(&body_)) {
            if (poly->vertices.empty()) throw InputError("constraint set: polytope needs vertices");
            for (const Vec& v : poly->vertices) {
                if (static_cast<int>(v.size()) != dim_)
                    throw InputError("constraint set: vertex dimension mismatch");
                Vec neg = vec_neg(v);
                bool found = false;
                for (const Vec& u : poly->vertices)
                    if (u == neg) { found = true; break; }
                if (!found) throw InputError("constraint set: polytope is not origin-symmetric");
            }
        }
        for (const Vec& u : lineality_) {
            if (static_cast<int>(u.size()) != dim_)
                throw InputError("constraint set: lineality vector dimension mismatch");
            if (is_zero_vec(u)) throw InputError("constraint set: zero lineality vector");
        }
        if (!linearly_independent(lineality_))
            throw InputError("constraint set: lineality basis is dependent");
    }

    static ConstraintSet lp_ball(int dim, BallKind p, Rat radius, std::vector<Vec> lineality = {}) {
        return ConstraintSet(dim, LpBall{p, std::move(radius)}, std::move(lineality));
    }
    static ConstraintSet polytope(int dim, std::vector<Vec> vertices, std::vector<Vec> lineality = {}) {
        return ConstraintSet(dim, Polytope{std::move(vertices)}, std::move(lineality));
    }
    static ConstraintSet identity(int dim, std::vector<Vec> lineality = {}) {
        return ConstraintSet(dim, Identity{}, std::move(lineality));
    }

    int dim() const { return dim_; }
    const Body& body() const { return body_; }
    const std::vector<Vec>& lineality_basis() const { return lineality_; }
    int lineality_dim() const { return static_cast<int>(lineality_.size()); }

    // True when the bounded part is {0} (no budget).
    bool zero_body() const {
        if (std::holds_alternative<Identity>(body_)) return true;
        if (const LpBall* b = std::get_if<LpBall>(&body_)) return b->radius == 0;
        const Polytope& p = std::get<Polytope>(body_);
        for (const Vec& v : p.vertices)
            if (!is_zero_vec(v)) return false;
        return true;
    }

    bool is_polyhedral() const {
        if (zero_body()) return true;
        if (const LpBall* b = std::get_if<LpBall>(&body_)) return b->p != BallKind::L2;
        return true;
    }

    // Vertices of the bounded part in canonical order. For linf the order is
    // sign patterns counted with + before - per coordinate; for l1 it is
    // +r e1, -r e1, +r e2, ... Deterministic search results depend on it.
    std::vector<Vec> body_vertices() const {
        if (zero_body()) return {zero_vec(dim_)};
        if (const Polytope* poly = std::get_if<Polytope>(&body_)) return poly->vertices;
        const LpBall& ball = std::get<LpBall>(body_);
        std::vector<Vec> out;
        if (ball.p == BallKind::L1) {
            for (int j = 0; j < dim_; ++j) {
                Vec v = zero_vec(dim_);
                v[j] = ball.radius;
                out.push_back(v);
                v[j] = -ball.radius;
                out.push_back(std::move(v));
            }
            return out;
        }
        if (ball.p == BallKind::LInf) {
            if (dim_ > 20) throw CapacityError("linf vertex enumeration beyond dimension 20");
            size_t total = size_t{1} << dim_;
            for (size_t mask = 0; mask < total; ++mask) {
                Vec v(dim_);
                for (int j = 0; j < dim_; ++j)
                    v[j] = (mask >> (dim_ - 1 - j)) & 1 ? Rat(-ball.radius) : ball.radius;
                out.push_back(std::move(v));
            }
            return out;
        }
        throw UnsupportedBodyError("l2 ball has no vertex description");
    }

    // Same set with the bounded part scaled by t >= 0 (budget sweeps).
    ConstraintSet scaled(const Rat& t) const {
        if (t < 0) throw InputError("scaled: negative factor");
        Body b = body_;
        if (LpBall* ball = std::get_if<LpBall>(&b)) {
            ball->radius *= t;
        } else if (Polytope* poly = std::get_if<Polytope>(&b)) {
            for (Vec& v : poly->vertices) v = vec_scale(v, t);
        }
        return ConstraintSet(dim_, std::move(b), lineality_);
    }

private:
    int dim_;
    Body body_;
    std::vector<Vec> lineality_;
};

// dim(V_B) and a basis of the lineality space. The bounded parts contain no
// line, so V_B is exactly the declared span.
inline std::pair<int, std::vector<Vec>> lineality(const ConstraintSet& b) {
    return {b.lineality_dim(), b.lineality_basis()};
}

namespace detail {

inline void check_dim(const ConstraintSet& b, const Vec& x, const char* who) {
    if (static_cast<int>(x.size()) != b.dim())
        throw InputError(std::string(who) + ": vector dimension mismatch");
}

// min over mu of the lp-norm of (x - L mu), p in {1, inf}, via one exact LP.
inline Rat lp_distance_to_span(const ConstraintSet& b, const Vec& x, BallKind p) {
    const auto& basis = b.lineality_basis();
    int d = b.dim();
    int l = static_cast<int>(basis.size());
    lp::Problem prob;
    if (p == BallKind::LInf) {
        // vars: (s, mu); minimize s with |x_j - (L mu)_j| <= s.
        prob.vars = 1 + l;
        prob.objective = zero_vec(prob.vars);
        prob.objective[0] = -1;
        for (int j = 0; j < d; ++j) {
            Vec row1(prob.vars, Rat(0)), row2(prob.vars, Rat(0));
            row1[0] = -1;
            row2[0] = -1;
            for (int k = 0; k < l; ++k) {
                row1[1 + k] = -basis[k][j];
                row2[1 + k] = basis[k][j];
            }
            prob.add_le(std::move(row1), -x[j]);
            prob.add_le(std::move(row2), x[j]);
        }
    } else {
        // vars: (u_0..u_{d-1}, mu); minimize sum u with |x_j - (L mu)_j| <= u_j.
        prob.vars = d + l;
        prob.objective = zero_vec(prob.vars);
        for (int j = 0; j < d; ++j) prob.objective[j] = -1;
        for (int j = 0; j < d; ++j) {
            Vec row1(prob.vars, Rat(0)), row2(prob.vars, Rat(0));
            row1[j] = -1;
            row2[j] = -1;
            for (int k = 0; k < l; ++k) {
                row1[d + k] = -basis[k][j];
                row2[d + k] = basis[k][j];
            }
            prob.add_le(std::move(row1), -x[j]);
            prob.add_le(std::move(row2), x[j]);
        }
    }
    lp::Result res = lp::maximize(prob);
    if (res.status != lp::Status::Optimal) throw InternalError("lp_distance_to_span: solver failure");
    return -res.value;
}

// min s with x in s*conv(vertices) + span(L); nullopt when x is outside the span.
inline std::optional<Rat> polytope_gauge(const ConstraintSet& b, const Vec& x) {
    const auto& basis = b.lineality_basis();
    std::vector<Vec> verts = b.body_vertices();
    int d = b.dim();
    int k = static_cast<int>(verts.size());
    int l = static_cast<int>(basis.size());
    lp::Problem prob;
    // vars: (lambda_0..lambda_{k-1}, mu, s)
    prob.vars = k + l + 1;
    prob.objective = zero_vec(prob.vars);
    prob.objective[k + l] = -1;
    for (int j = 0; j < d; ++j) {
        Vec row(prob.vars, Rat(0));
        for (int i = 0; i < k; ++i) row[i] = verts[i][j];
        for (int m = 0; m < l; ++m) row[k + m] = basis[m][j];
        prob.add_eq(std::move(row), x[j]);
    }
    Vec sumrow(prob.vars, Rat(0));
    for (int i = 0; i < k; ++i) sumrow[i] = 1;
    sumrow[k + l] = -1;
    prob.add_eq(std::move(sumrow), Rat(0));
    for (int i = 0; i < k; ++i) {
        Vec row(prob.vars, Rat(0));
        row[i] = -1;
        prob.add_le(std::move(row), Rat(0));
    }
    lp::Result res = lp::maximize(prob);
    if (res.status == lp::Status::Infeasible) return std::nullopt;
    if (res.status != lp::Status::Optimal) throw InternalError("polytope_gauge: solver failure");
    return -res.value;
}

}  // namespace detail

// ||x||_B = inf { e >= 0 : x in e*B }. Zero on the lineality span, +inf
// outside span(B).
inline SqrtRat seminorm(const ConstraintSet& b, const Vec& x) {
    detail::check_dim(b, x, "seminorm");
    if (in_span(b.lineality_basis(), x)) return SqrtRat();
    if (b.zero_body()) return SqrtRat::infinity(+1);

    if (const LpBall* ball = std::get_if<LpBall>(&b.body())) {
        if (ball->p == BallKind::L2) {
            Vec perp = vec_sub(x, project_onto_span(b.lineality_basis(), x));
            Rat sq = dot(perp, perp) / (ball->radius * ball->radius);
            return SqrtRat::from_square(+1, sq);
        }
        if (b.lineality_dim() == 0) {
            Rat v = 0;
            for (const Rat& c : x) {
                Rat a = rat_abs(c);
                if (ball->p == BallKind::L1) v += a;
                else if (a > v) v = a;
            }
            return SqrtRat::from_rational(v / ball->radius);
        }
        Rat dist = detail::lp_distance_to_span(b, x, ball->p);
        return SqrtRat::from_rational(dist / ball->radius);
    }

    auto gauge = detail::polytope_gauge(b, x);
    if (!gauge) return SqrtRat::infinity(+1);
    return SqrtRat::from_rational(*gauge);
}

// ||w||_{B*} = sup_{y in B} w.y; +inf exactly when w is not orthogonal to the
// lineality span.
inline SqrtRat dual_seminorm(const ConstraintSet& b, const Vec& w) {
    detail::check_dim(b, w, "dual_seminorm");
    for (const Vec& u : b.lineality_basis())
        if (dot(u, w) != 0) return SqrtRat::infinity(+1);
    if (b.zero_body()) return SqrtRat();

    if (const LpBall* ball = std::get_if<LpBall>(&b.body())) {
        if (ball->p == BallKind::L2) {
            Rat sq = dot(w, w) * ball->radius * ball->radius;
            return SqrtRat::from_square(+1, sq);
        }
        // dual exponent: q = inf for p = 1 and q = 1 for p = inf
        Rat v = 0;
        for (const Rat& c : w) {
            Rat a = rat_abs(c);
            if (ball->p == BallKind::LInf) v += a;
            else if (a > v) v = a;
        }
        return SqrtRat::from_rational(v * ball->radius);
    }

    const Polytope& poly = std::get<Polytope>(b.body());
    Rat best = dot(w, poly.vertices[0]);
    for (size_t i = 1; i < poly.vertices.size(); ++i) {
        Rat v = dot(w, poly.vertices[i]);
        if (v > best) best = v;
    }
    return SqrtRat::from_rational(best);
}

// A vertex z* of the bounded part with w.z* = ||w||_{B*}. Ties resolve to the
// lexicographically largest maximizer, independent of storage order.
inline Vec support_vertex(const ConstraintSet& b, const Vec& w) {
    detail::check_dim(b, w, "support_vertex");
    if (!b.is_polyhedral()) throw UnsupportedBodyError("support_vertex: body is not polyhedral");
    for (const Vec& u : b.lineality_basis())
        if (dot(u, w) != 0) throw NoSupportError("support_vertex: infinite dual seminorm");
    if (b.zero_body()) return zero_vec(b.dim());

    if (const LpBall* ball = std::get_if<LpBall>(&b.body())) {
        if (ball->p == BallKind::LInf) {
            Vec v(b.dim());
            for (int j = 0; j < b.dim(); ++j)
                v[j] = w[j] < 0 ? Rat(-ball->radius) : ball->radius;
            return v;
        }
    }
    std::vector<Vec> verts = b.body_vertices();
    const Vec* best = &verts[0];
    Rat best_val = dot(w, verts[0]);
    for (size_t i = 1; i < verts.size(); ++i) {
        Rat v = dot(w, verts[i]);
        int c = cmp(v, best_val);
        if (c > 0 || (c == 0 && lex_less(*best, verts[i]))) {
            best = &verts[i];
            best_val = v;
        }
    }
    return *best;
}

}  // namespace avc
