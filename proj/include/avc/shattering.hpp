#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "avc/risk.hpp"

namespace avc {

// {0,1}^n adversarial-loss pattern; bit 1 means the adversary wins on that
// example.
struct LossPattern {
    std::vector<int8_t> bits;

    static LossPattern from_mask(size_t mask, size_t n) {
        LossPattern p;
        p.bits.resize(n);
        for (size_t i = 0; i < n; ++i) p.bits[i] = (mask >> i) & 1;
        return p;
    }

    size_t weight() const {
        size_t w = 0;
        for (int8_t b : bits) w += b;
        return w;
    }
};

// Which hypothesis family realizes a feasible pattern.
enum class WitnessKind {
    Normalized,    // ||a||_{B*} = 1, facet vertex recorded
    ZeroDual,      // a orthogonal to span(B) and V_B: adversary cannot move along a
    Constant,      // a = 0: constant sgn(-b) classifier
    LinealityBot,  // a not orthogonal to V_B: constant-Bot classifier
};

struct FeasibleWitness {
    Halfspace h;
    WitnessKind kind = WitnessKind::Normalized;
    std::optional<Vec> vertex;    // the facet choice certifying ||a||_{B*} = 1
    std::optional<Rat> slack;     // optimized strict-margin slack (LP strata)
};

// Appendix-style coefficient certificate: a nonzero a with sum a_i = 0,
// sum |a_i| = 2 and sum a_i x_i = 0 (after projecting out V_B), together with
// the derived unachievable pattern.
struct AppendixCertificate {
    Vec a;
    std::vector<int> j_set;       // indices with a_i > 0
    std::vector<int> k_set;       // indices with a_i < 0
    Rat alpha_j_pos, alpha_j_neg, alpha_k_pos, alpha_k_neg;
    bool flipped = false;         // the sign-flip fallback was applied
    std::vector<int8_t> eta;
};

struct StratumRecord {
    std::string stratum;          // "vertex k", "face +j", "constant", ...
    bool feasible = false;
    std::optional<Rat> slack;
};

struct FeasibilityCertificate {
    bool feasible = false;
    std::optional<FeasibleWitness> witness;
    std::optional<AppendixCertificate> appendix;
    std::vector<StratumRecord> exhausted;   // per-stratum LP record when infeasible
    uint64_t lps_solved = 0;
};

namespace detail {

// Per-example requirement fed to the pattern LP search.
enum class Req : int8_t {
    RobustCorrect,   // strict: c(a.x - b) > threshold
    AdversaryWins,   // non-strict: c(a.x - b) <= threshold
    Free,
};

inline std::vector<Req> reqs_from_pattern(const LossPattern& pattern) {
    std::vector<Req> reqs(pattern.bits.size());
    for (size_t i = 0; i < pattern.bits.size(); ++i)
        reqs[i] = pattern.bits[i] ? Req::AdversaryWins : Req::RobustCorrect;
    return reqs;
}

// Exact verification of a witness against the requirements.
inline bool witness_matches(const Halfspace& h, const ConstraintSet& body,
                            const LabeledDataset& data, const std::vector<Req>& reqs) {
    for (size_t i = 0; i < data.size(); ++i) {
        if (reqs[i] == Req::Free) continue;
        int loss = zero_one_loss(corrupted_evaluate(h, body, data.points[i]), data.labels[i]);
        if (reqs[i] == Req::RobustCorrect && loss != 0) return false;
        if (reqs[i] == Req::AdversaryWins && loss != 1) return false;
    }
    return true;
}

struct PatternSearchResult {
    bool feasible = false;
    FeasibleWitness witness;
    std::vector<StratumRecord> records;
    uint64_t lps_solved = 0;
};

// Decides whether some halfspace realizes the requirements against the
// (polyhedral) body. The nonconvex normalization ||a||_{B*} = 1 is split into
// finitely many linear strata:
//   - one LP per vertex v* of B achieving a.v* = 1 >= a.v (threshold 1),
//   - one LP per signed coordinate face of {||a||_inf = 1} restricted to
//     a orthogonal to span(B) and V_B (dual seminorm 0; threshold 0),
//   - the constant classifiers a = 0 and, when dim V_B > 0, the all-Bot
//     family (feasible only for the all-ones requirement).
// Strict robust-correct rows maximize a shared slack t; the stratum is
// feasible iff the optimum has t > 0. With `best_margin` all strata are
// solved and the largest slack wins (ties: earliest stratum).
inline PatternSearchResult pattern_search(const LabeledDataset& data, const std::vector<Req>& reqs,
                                          const ConstraintSet& body, bool best_margin) {
    if (!body.is_polyhedral())
        throw UnsupportedBodyError("pattern feasibility requires a polyhedral body");
    if (reqs.size() != data.size()) throw InputError("pattern feasibility: length mismatch");
    if (data.dim() != body.dim()) throw InputError("pattern feasibility: dimension mismatch");

    const int d = body.dim();
    const size_t n = data.size();
    PatternSearchResult out;

    bool no_correct_required = true;
    bool const_pos_ok = true, const_neg_ok = true;
    for (size_t i = 0; i < n; ++i) {
        if (reqs[i] == Req::RobustCorrect) {
            no_correct_required = false;
            if (data.labels[i] != 1) const_pos_ok = false;
            if (data.labels[i] != -1) const_neg_ok = false;
        } else if (reqs[i] == Req::AdversaryWins) {
            if (data.labels[i] != -1) const_pos_ok = false;
            if (data.labels[i] != 1) const_neg_ok = false;
        }
    }

    auto accept = [&](FeasibleWitness w) {
        if (!witness_matches(w.h, body, data, reqs))
            throw InternalError("pattern feasibility: witness failed the exact re-check");
        out.feasible = true;
        out.witness = std::move(w);
    };

    // Constant classifiers first (deterministic preference; they realize
    // their requirements with unlimited margin).
    if (const_pos_ok) {
        accept({Halfspace{zero_vec(d), Rat(-1)}, WitnessKind::Constant, std::nullopt, std::nullopt});
        return out;
    }
    if (const_neg_ok) {
        accept({Halfspace{zero_vec(d), Rat(1)}, WitnessKind::Constant, std::nullopt, std::nullopt});
        return out;
    }
    if (no_correct_required) {
        // Constant-Bot classifier loses everywhere; with dim V_B > 0 the
        // whole family of a not orthogonal to V_B realizes the same all-Bot
        // behavior.
        Halfspace h{zero_vec(d), Rat(0)};
        accept({std::move(h), WitnessKind::Constant, std::nullopt, std::nullopt});
        return out;
    }

    const auto& linbasis = body.lineality_basis();
    std::vector<Vec> verts = body.body_vertices();

    auto solve_stratum = [&](const std::string& name, const Vec* vstar, int face_coord, int face_sign,
                             const Rat& threshold) -> std::optional<FeasibleWitness> {
        // vars: (a_0..a_{d-1}, b, t)
        lp::Problem prob;
        prob.vars = d + 2;
        prob.objective = zero_vec(d + 2);
        prob.objective[d + 1] = 1;
        if (vstar) {
            Vec row(d + 2, Rat(0));
            for (int j = 0; j < d; ++j) row[j] = (*vstar)[j];
            prob.add_eq(std::move(row), Rat(1));
            for (const Vec& v : verts) {
                if (&v == vstar) continue;
                Vec r2(d + 2, Rat(0));
                for (int j = 0; j < d; ++j) r2[j] = v[j];
                prob.add_le(std::move(r2), Rat(1));
            }
        } else {
            // zero-dual stratum: a orthogonal to span(B), normalized on an
            // linf face of the a-coordinates
            for (const Vec& v : verts) {
                if (is_zero_vec(v)) continue;
                Vec r2(d + 2, Rat(0));
                for (int j = 0; j < d; ++j) r2[j] = v[j];
                prob.add_eq(std::move(r2), Rat(0));
            }
            Vec face(d + 2, Rat(0));
            face[face_coord] = face_sign;
            prob.add_eq(std::move(face), Rat(1));
            for (int j = 0; j < d; ++j) {
                Vec r1(d + 2, Rat(0)), r2(d + 2, Rat(0));
                r1[j] = 1;
                r2[j] = -1;
                prob.add_le(std::move(r1), Rat(1));
                prob.add_le(std::move(r2), Rat(1));
            }
        }
        for (const Vec& u : linbasis) {
            Vec row(d + 2, Rat(0));
            for (int j = 0; j < d; ++j) row[j] = u[j];
            prob.add_eq(std::move(row), Rat(0));
        }
        for (size_t i = 0; i < n; ++i) {
            if (reqs[i] == Req::Free) continue;
            const Rat c = data.labels[i];
            if (reqs[i] == Req::RobustCorrect) {
                // c(a.x - b) >= threshold + t  <=>  -c a.x + c b + t <= -threshold
                Vec row(d + 2, Rat(0));
                for (int j = 0; j < d; ++j) row[j] = -c * data.points[i][j];
                row[d] = c;
                row[d + 1] = 1;
                prob.add_le(std::move(row), -threshold);
            } else {
                Vec row(d + 2, Rat(0));
                for (int j = 0; j < d; ++j) row[j] = c * data.points[i][j];
                row[d] = -c;
                prob.add_le(std::move(row), threshold);
            }
        }
        {
            Vec cap(d + 2, Rat(0));
            cap[d + 1] = 1;
            prob.add_le(std::move(cap), Rat(1));
        }
        ++out.lps_solved;
        lp::Result res = lp::maximize(prob);
        StratumRecord rec{name, false, std::nullopt};
        if (res.status == lp::Status::Optimal) rec.slack = res.value;
        if (res.status == lp::Status::Optimal && res.value > 0) {
            rec.feasible = true;
            out.records.push_back(rec);
            Halfspace h;
            h.a.assign(res.x.begin(), res.x.begin() + d);
            h.b = res.x[d];
            FeasibleWitness w{std::move(h),
                              vstar ? WitnessKind::Normalized : WitnessKind::ZeroDual,
                              vstar ? std::optional<Vec>(*vstar) : std::nullopt,
                              std::optional<Rat>(res.value)};
            return w;
        }
        out.records.push_back(rec);
        return std::nullopt;
    };

    std::optional<FeasibleWitness> best;
    auto consider = [&](std::optional<FeasibleWitness> w) -> bool {
        if (!w) return false;
        if (!best || (w->slack && best->slack && *w->slack > *best->slack)) best = std::move(w);
        return !best_margin;   // stop at the first witness unless optimizing
    };

    // Facet strata in canonical vertex order.
    bool done = false;
    for (size_t k = 0; k < verts.size() && !done; ++k) {
        if (is_zero_vec(verts[k])) continue;   // a.0 = 1 is impossible
        done = consider(solve_stratum("vertex " + std::to_string(k), &verts[k], -1, 0, Rat(1)));
    }

    // Zero-dual strata only exist when span(B) + V_B is a proper subspace.
    if (!done) {
        std::vector<Vec> span_rows;
        for (const Vec& v : verts)
            if (!is_zero_vec(v)) span_rows.push_back(v);
        for (const Vec& u : linbasis) span_rows.push_back(u);
        bool proper = span_rows.empty() || rank(Mat(span_rows.begin(), span_rows.end())) < d;
        if (proper) {
            for (int j = 0; j < d && !done; ++j) {
                for (int s = 0; s < 2 && !done; ++s) {
                    done = consider(solve_stratum(std::string("face ") + (s == 0 ? "+" : "-") + std::to_string(j),
                                                  nullptr, j, s == 0 ? 1 : -1, Rat(0)));
                }
            }
        }
    }

    if (best) {
        accept(std::move(*best));
    }
    return out;
}

}  // namespace detail

// Decides whether some halfspace, corrupted by the polyhedral body, realizes
// the exact loss pattern on the dataset. Returns a checkable certificate
// either way.
inline FeasibilityCertificate halfspace_pattern_feasible(const LabeledDataset& data,
                                                         const LossPattern& pattern,
                                                         const ConstraintSet& body,
                                                         bool best_margin = false) {
    if (pattern.bits.size() != data.size())
        throw InputError("halfspace_pattern_feasible: pattern length mismatch");
    auto res = detail::pattern_search(data, detail::reqs_from_pattern(pattern), body, best_margin);
    FeasibilityCertificate cert;
    cert.feasible = res.feasible;
    cert.lps_solved = res.lps_solved;
    if (res.feasible) cert.witness = std::move(res.witness);
    else cert.exhausted = std::move(res.records);
    return cert;
}

struct PatternSetOptions {
    int enumeration_cap = 20;    // 2^n patterns
    int threads = 0;
};

// All corrupted loss patterns a finite class achieves on an id-dataset.
inline std::set<std::vector<int8_t>> loss_pattern_set(const FiniteClass& cls, const TabularRelation& rel,
                                                      const IdDataset& data) {
    cls.validate();
    rel.validate();
    std::set<std::vector<int8_t>> patterns;
    for (const auto& row : cls.table) {
        std::vector<Label> corrupted = corrupt_tabular(row, rel);
        std::vector<int8_t> bits(data.size());
        for (size_t i = 0; i < data.size(); ++i) {
            int id = data.point_ids[i];
            if (id < 0 || id >= static_cast<int>(corrupted.size()))
                throw CoverageError("loss_pattern_set: data point outside relation ground set");
            bits[i] = static_cast<int8_t>(zero_one_loss(corrupted[id], data.labels[i]));
        }
        patterns.insert(std::move(bits));
    }
    return patterns;
}

// All corrupted loss patterns the halfspace family achieves: enumerates the
// 2^n candidate patterns and keeps the LP-feasible ones.
inline std::set<std::vector<int8_t>> loss_pattern_set(const LabeledDataset& data,
                                                      const ConstraintSet& body,
                                                      const PatternSetOptions& opts = {}) {
    const size_t n = data.size();
    if (static_cast<int>(n) > opts.enumeration_cap)
        throw CapacityError("loss_pattern_set: 2^n enumeration beyond the cap");
    const size_t total = size_t{1} << n;
    std::vector<int8_t> feas(total, 0);
    parallel_for(total, [&](size_t mask) {
        LossPattern p = LossPattern::from_mask(mask, n);
        feas[mask] = halfspace_pattern_feasible(data, p, body).feasible ? 1 : 0;
    }, opts.threads);
    std::set<std::vector<int8_t>> patterns;
    for (size_t mask = 0; mask < total; ++mask)
        if (feas[mask]) patterns.insert(LossPattern::from_mask(mask, n).bits);
    return patterns;
}

inline bool shatter_check(const FiniteClass& cls, const TabularRelation& rel, const IdDataset& data) {
    if (data.size() > 30) throw CapacityError("shatter_check: dataset too large");
    return loss_pattern_set(cls, rel, data).size() == (size_t{1} << data.size());
}

inline bool shatter_check(const LabeledDataset& data, const ConstraintSet& body,
                          const PatternSetOptions& opts = {}) {
    return loss_pattern_set(data, body, opts).size() == (size_t{1} << data.size());
}

// Max number of achieved loss patterns over the supplied candidate datasets
// (the true sup over all placements is not computable).
inline size_t shattering_coefficient(const FiniteClass& cls, const TabularRelation& rel,
                                     const std::vector<IdDataset>& datasets) {
    size_t best = 0;
    for (const auto& d : datasets) best = std::max(best, loss_pattern_set(cls, rel, d).size());
    return best;
}

inline size_t shattering_coefficient(const std::vector<LabeledDataset>& datasets,
                                     const ConstraintSet& body, const PatternSetOptions& opts = {}) {
    size_t best = 0;
    for (const auto& d : datasets) best = std::max(best, loss_pattern_set(d, body, opts).size());
    return best;
}

// AVC(halfspaces, B) = d + 1 - dim(V_B).
inline int avc_theorem_value(int d, const ConstraintSet& body) {
    if (body.dim() != d) throw InputError("avc_theorem_value: dimension mismatch");
    return d + 1 - body.lineality_dim();
}

// The shattered example list: x_0 = 0 and a basis of the orthogonal
// complement of V_B, scaled by an exact rational upper bound on 3/eps with
// eps the minimum pairwise dual-seminorm separation. Scaling up only
// increases separations, so shattering is preserved.
inline std::vector<Vec> shattered_witness_points(const ConstraintSet& body) {
    const int d = body.dim();
    std::vector<Vec> basis = orthogonal_complement(body.lineality_basis(), d);
    std::vector<Vec> pts;
    pts.push_back(zero_vec(d));
    for (const Vec& v : basis) pts.push_back(v);

    std::optional<SqrtRat> min_sep;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            SqrtRat sep = dual_seminorm(body, vec_sub(pts[i], pts[j]));
            if (sep.is_infinite())
                throw PreconditionError("shattered_witness: infinite dual separation");
            if (sep.sgn() <= 0)
                throw PreconditionError("shattered_witness: degenerate basis (zero dual separation)");
            if (!min_sep || sep < *min_sep) min_sep = sep;
        }
    }
    if (!min_sep) throw PreconditionError("shattered_witness: no basis directions");

    Rat scale;
    if (auto exact = min_sep->rational_value()) {
        scale = Rat(3) / *exact;
    } else {
        // rational upper bound on 3/sqrt(num/den): sqrt(num/den) >= floor(sqrt(num*den))/den
        mpz_class prod = min_sep->square().get_num() * min_sep->square().get_den();
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        if (root == 0) throw InternalError("shattered_witness: zero separation bound");
        scale = Rat(3) * Rat(min_sep->square().get_den()) / Rat(root);
    }
    for (Vec& p : pts) p = vec_scale(p, scale);
    return pts;
}

// Appendix construction: a canonical coefficient vector certifying one
// unachievable loss pattern for any dataset with n >= d + 2 - dim(V_B).
inline std::pair<LossPattern, FeasibilityCertificate> unachievable_pattern(const LabeledDataset& data,
                                                                           const ConstraintSet& body) {
    const int d = body.dim();
    if (data.dim() != d) throw InputError("unachievable_pattern: dimension mismatch");
    const int n = static_cast<int>(data.size());
    const int need = d + 2 - body.lineality_dim();
    if (n < need)
        throw PreconditionError("unachievable_pattern: needs n >= d + 2 - dim(V_B)");

    // Project out the lineality directions; only the quotient geometry is
    // visible to finite-dual-norm halfspaces.
    const auto& lin = body.lineality_basis();
    std::vector<Vec> proj;
    proj.reserve(data.size());
    for (const Vec& x : data.points)
        proj.push_back(lin.empty() ? x : vec_sub(x, project_onto_span(lin, x)));

    Mat m;
    m.push_back(Vec(n, Rat(1)));
    for (int j = 0; j < d; ++j) {
        Vec row(n);
        for (int i = 0; i < n; ++i) row[i] = proj[i][j];
        m.push_back(std::move(row));
    }
    std::vector<Vec> null = nullspace(std::move(m));
    if (null.empty()) throw InternalError("unachievable_pattern: empty nullspace");
    Vec a = null.front();     // canonical: first RREF nullspace basis vector

    Rat abssum = 0;
    for (const Rat& v : a) abssum += rat_abs(v);
    if (abssum == 0) throw InternalError("unachievable_pattern: zero coefficient vector");
    a = vec_scale(a, Rat(2) / abssum);

    auto alphas = [&](const Vec& coef) {
        AppendixCertificate c;
        c.a = coef;
        for (int i = 0; i < n; ++i) {
            if (coef[i] > 0) {
                c.j_set.push_back(i);
                (data.labels[i] == 1 ? c.alpha_j_pos : c.alpha_j_neg) += rat_abs(coef[i]);
            } else if (coef[i] < 0) {
                c.k_set.push_back(i);
                (data.labels[i] == 1 ? c.alpha_k_pos : c.alpha_k_neg) += rat_abs(coef[i]);
            }
        }
        return c;
    };

    AppendixCertificate cert = alphas(a);
    if (cert.alpha_j_pos + cert.alpha_k_neg < cert.alpha_j_neg + cert.alpha_k_pos) {
        cert = alphas(vec_neg(a));
        cert.flipped = true;
    }

    LossPattern eta;
    eta.bits.resize(n, 0);
    for (int i = 0; i < n; ++i) {
        int s = sign(cert.a[i]);
        if (s == 0) continue;    // no constraint in the proof; bit 0 keeps it checkable
        eta.bits[i] = s != data.labels[i] ? 1 : 0;
    }
    cert.eta = eta.bits;

    // Construction invariants.
    Rat sum = 0, abs2 = 0;
    Vec comb = zero_vec(d);
    for (int i = 0; i < n; ++i) {
        sum += cert.a[i];
        abs2 += rat_abs(cert.a[i]);
        comb = vec_add(comb, vec_scale(proj[i], cert.a[i]));
    }
    if (sum != 0 || abs2 != 2 || !is_zero_vec(comb))
        throw InternalError("unachievable_pattern: certificate invariants violated");

    FeasibilityCertificate out;
    out.feasible = false;
    out.appendix = std::move(cert);
    return {std::move(eta), std::move(out)};
}

// The lattice construction separating AVC from VC: d points in {-1,1}^d with
// (x_i)_j = -1 iff i = j, all labeled -1, against the indicator hypotheses
// with centers {0,1}^d under an linf lattice budget of 1.
struct IndicatorConstruction {
    int d = 0;
    long budget = 1;
    std::vector<LatticePoint> data_points;
    std::vector<LatticePoint> centers;
    LabeledDataset dataset;   // same points with rational coordinates
};

inline IndicatorConstruction point_indicator_construction(int d) {
    if (d < 1) throw InputError("point_indicator_construction: d must be >= 1");
    if (d > 20) throw CapacityError("point_indicator_construction: d beyond enumeration cap");
    IndicatorConstruction out;
    out.d = d;
    std::vector<Vec> rats;
    for (int i = 0; i < d; ++i) {
        LatticePoint p(d, 1);
        p[i] = -1;
        Vec r(d);
        for (int j = 0; j < d; ++j) r[j] = p[j];
        out.data_points.push_back(std::move(p));
        rats.push_back(std::move(r));
    }
    for (size_t mask = 0; mask < (size_t{1} << d); ++mask) {
        LatticePoint c(d);
        for (int j = 0; j < d; ++j) c[j] = (mask >> j) & 1;
        out.centers.push_back(std::move(c));
    }
    out.dataset = LabeledDataset(std::move(rats), std::vector<int>(d, -1));
    return out;
}

// Corrupted loss patterns of the indicator construction, computed through the
// tabular pipeline over the window [-2,2]^d.
inline std::set<std::vector<int8_t>> indicator_pattern_set(const IndicatorConstruction& cons) {
    LatticeBox window{std::vector<long>(cons.d, -2), std::vector<long>(cons.d, 2)};
    std::vector<LatticePoint> pts = window.enumerate();
    TabulatedClass tab;
    tab.points = pts;
    for (size_t i = 0; i < pts.size(); ++i) tab.point_id.emplace(pts[i], static_cast<int>(i));
    tab.cls.num_points = static_cast<int>(pts.size());
    for (const LatticePoint& center : cons.centers) {
        std::vector<int8_t> row(pts.size(), -1);
        row[tab.id_of(center)] = 1;
        tab.cls.table.push_back(std::move(row));
        tab.centers.push_back(center);
    }
    std::vector<int> ids;
    for (const LatticePoint& p : cons.data_points) ids.push_back(tab.id_of(p));
    TabularRelation rel = linf_lattice_relation(tab, cons.budget, ids);
    IdDataset data(ids, cons.dataset.labels);
    return loss_pattern_set(tab.cls, rel, data);
}

struct IndicatorVcCheck {
    bool pos_pair_free = false;      // no pair of window points gets (+1,+1)
    bool singleton_shattered = false;
    size_t window_points = 0;
    size_t hypotheses = 0;
    int vc() const { return pos_pair_free && singleton_shattered ? 1 : -1; }
};

// Exhaustive VC certificate for the indicator class over [-radius, radius]^d:
// evaluates every (center, point) pair in the window and checks that no pair
// of points ever receives the labeling (+1, +1) while single points receive
// both labels.
inline IndicatorVcCheck point_indicator_vc_check(int d, long radius = 2) {
    LatticeBox window{std::vector<long>(d, -radius), std::vector<long>(d, radius)};
    std::vector<LatticePoint> pts = window.enumerate();
    IndicatorVcCheck out;
    out.window_points = pts.size();
    out.hypotheses = pts.size();   // centers inside the window, plus the shared far behavior
    // pos_sets[p] = centers labeling p positive; the evaluation rule is run
    // for every pair explicitly.
    std::vector<std::vector<int>> pos_sets(pts.size());
    for (size_t c = 0; c < pts.size(); ++c) {
        for (size_t p = 0; p < pts.size(); ++p) {
            if (pts[c] == pts[p]) pos_sets[p].push_back(static_cast<int>(c));
        }
    }
    bool pair_hit = false;
    for (size_t p = 0; p < pts.size() && !pair_hit; ++p) {
        for (size_t q = p + 1; q < pts.size() && !pair_hit; ++q) {
            for (int c : pos_sets[p]) {
                for (int c2 : pos_sets[q]) {
                    if (c == c2) { pair_hit = true; break; }
                }
                if (pair_hit) break;
            }
        }
    }
    out.pos_pair_free = !pair_hit;
    // One point, both labels: its own indicator vs any other center.
    out.singleton_shattered = !pts.empty() && !pos_sets[0].empty() && pts.size() > 1;
    return out;
}

// Shelah-Sauer binomial sum: sum_{i=0}^{d} C(n, i).
inline unsigned long long sauer_bound(unsigned n, unsigned d) {
    if (n > 62) throw CapacityError("sauer_bound: n beyond 62");
    unsigned long long total = 0;
    unsigned long long binom = 1;   // C(n, 0)
    for (unsigned i = 0; i <= std::min(n, d); ++i) {
        total += binom;
        binom = binom * (n - i) / (i + 1);
    }
    return total;
}

// Sound randomized lower-bound search for non-polyhedral bodies: samples
// rational halfspaces, records the exactly-evaluated loss patterns, and
// reports the distinct ones found. Every reported pattern has a concrete
// witness; nothing is claimed about patterns not found.
inline std::set<std::vector<int8_t>> random_pattern_search(const LabeledDataset& data,
                                                           const ConstraintSet& body,
                                                           size_t attempts, uint64_t seed) {
    std::set<std::vector<int8_t>> found;
    uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    const int d = body.dim();
    for (size_t it = 0; it < attempts; ++it) {
        Halfspace h;
        h.a.resize(d);
        for (int j = 0; j < d; ++j)
            h.a[j] = rat(static_cast<long>(next() % 2001) - 1000, 64);
        h.b = rat(static_cast<long>(next() % 20001) - 10000, 64);
        std::vector<int8_t> bits(data.size());
        for (size_t i = 0; i < data.size(); ++i)
            bits[i] = static_cast<int8_t>(zero_one_loss(corrupted_evaluate(h, body, data.points[i]),
                                                        data.labels[i]));
        found.insert(std::move(bits));
    }
    return found;
}

}  // namespace avc
