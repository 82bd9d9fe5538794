#pragma once

#include <vector>

#include "avc/shattering.hpp"

namespace avc {

struct SearchStats {
    uint64_t subsets_tested = 0;
    uint64_t lps_solved = 0;
};

struct ErmResult {
    Halfspace witness;
    Rat risk;                      // exact minimal empirical adversarial risk
    std::vector<int8_t> pattern;   // loss pattern of the witness
    SearchStats stats;
};

struct FiniteErmResult {
    int hypothesis_id = -1;
    Rat risk;
    std::vector<int8_t> pattern;
};

// Exhaustive adversarial ERM over a finite class; ties break to the lowest
// hypothesis id.
inline FiniteErmResult aerm_finite(const FiniteClass& cls, const TabularRelation& rel,
                                   const IdDataset& data) {
    cls.validate();
    rel.validate();
    if (cls.table.empty()) throw InputError("aerm_finite: empty class");
    FiniteErmResult best;
    for (int h = 0; h < cls.num_hypotheses(); ++h) {
        std::vector<Label> corrupted = corrupt_tabular(cls.table[h], rel);
        std::vector<int8_t> bits(data.size());
        Rat total = 0;
        for (size_t i = 0; i < data.size(); ++i) {
            int id = data.point_ids[i];
            if (id < 0 || id >= static_cast<int>(corrupted.size()))
                throw CoverageError("aerm_finite: data point outside relation ground set");
            bits[i] = static_cast<int8_t>(zero_one_loss(corrupted[id], data.labels[i]));
            total += bits[i];
        }
        Rat risk = total / Rat(static_cast<long>(data.size()));
        if (best.hypothesis_id < 0 || risk < best.risk) {
            best.hypothesis_id = h;
            best.risk = risk;
            best.pattern = std::move(bits);
        }
    }
    return best;
}

namespace detail {

// Feasibility of a "robust-correct subset": every index in the mask must be
// robustly correct, the rest are unconstrained. Monotone: feasible S implies
// feasible subsets of S.
inline PatternSearchResult subset_feasible(const LabeledDataset& data, size_t mask,
                                           const ConstraintSet& body, bool best_margin) {
    std::vector<Req> reqs(data.size(), Req::Free);
    for (size_t i = 0; i < data.size(); ++i)
        if ((mask >> i) & 1) reqs[i] = Req::RobustCorrect;
    return pattern_search(data, reqs, body, best_margin);
}

}  // namespace detail

// Exact adversarial ERM for halfspaces against a polyhedral body. Searches
// robust-correct subsets S in decreasing size; the first feasible size k
// gives minimal risk (n-k)/n. Subsets at a fixed size run in ascending
// bitmask order, so the returned witness is deterministic. Subsets containing
// a known-infeasible pair are pruned (monotonicity). The witness maximizes
// the margin slack across facet strata for its subset.
inline ErmResult aerm_halfspace(const LabeledDataset& data, const ConstraintSet& body, int cap = 18) {
    const size_t n = data.size();
    if (static_cast<int>(n) > cap)
        throw CapacityError("aerm_halfspace: n exceeds the configured cap");
    if (!body.is_polyhedral())
        throw UnsupportedBodyError("aerm_halfspace: body is not polyhedral");

    SearchStats stats;
    auto finish = [&](detail::PatternSearchResult res) {
        ErmResult out;
        out.witness = res.witness.h;
        out.pattern.resize(n);
        Rat total = 0;
        for (size_t i = 0; i < n; ++i) {
            out.pattern[i] = static_cast<int8_t>(
                zero_one_loss(corrupted_evaluate(out.witness, body, data.points[i]), data.labels[i]));
            total += out.pattern[i];
        }
        out.risk = total / Rat(static_cast<long>(n));
        out.stats = stats;
        return out;
    };

    // Full subset first: realizable instances need exactly one search step.
    const size_t full = n >= 64 ? ~size_t{0} : (size_t{1} << n) - 1;
    ++stats.subsets_tested;
    detail::PatternSearchResult res = detail::subset_feasible(data, full, body, true);
    stats.lps_solved += res.lps_solved;
    if (res.feasible) {
        ErmResult out = finish(std::move(res));
        if (out.risk != 0) throw InternalError("aerm_halfspace: full subset witness has nonzero risk");
        return out;
    }

    // Infeasible pairs prune all supersets.
    std::vector<std::vector<bool>> bad_pair(n, std::vector<bool>(n, false));
    if (n >= 3) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                ++stats.subsets_tested;
                detail::PatternSearchResult pr =
                    detail::subset_feasible(data, (size_t{1} << i) | (size_t{1} << j), body, false);
                stats.lps_solved += pr.lps_solved;
                if (!pr.feasible) bad_pair[i][j] = true;
            }
        }
    }

    for (size_t k = n - 1; k + 1 > 0; --k) {
        // Gosper-style enumeration of size-k masks in ascending numeric order.
        if (k == 0) {
            ++stats.subsets_tested;
            detail::PatternSearchResult pr = detail::subset_feasible(data, 0, body, true);
            stats.lps_solved += pr.lps_solved;
            if (!pr.feasible) throw InternalError("aerm_halfspace: empty subset must be feasible");
            return finish(std::move(pr));
        }
        size_t mask = (size_t{1} << k) - 1;
        while (mask <= full) {
            bool pruned = false;
            for (size_t i = 0; i < n && !pruned; ++i) {
                if (!((mask >> i) & 1)) continue;
                for (size_t j = i + 1; j < n; ++j) {
                    if (((mask >> j) & 1) && bad_pair[i][j]) { pruned = true; break; }
                }
            }
            if (!pruned) {
                ++stats.subsets_tested;
                detail::PatternSearchResult pr = detail::subset_feasible(data, mask, body, true);
                stats.lps_solved += pr.lps_solved;
                if (pr.feasible) {
                    ErmResult out = finish(std::move(pr));
                    if (out.risk != Rat(static_cast<long>(n - k)) / Rat(static_cast<long>(n)))
                        throw InternalError("aerm_halfspace: witness risk disagrees with subset size");
                    return out;
                }
            }
            // next k-subset (Gosper's hack)
            size_t c = mask & (~mask + 1);
            size_t r = mask + c;
            if (r > full || r < mask) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw InternalError("aerm_halfspace: search exhausted without a feasible subset");
}

// Brute-force minimal loss weight over all 2^n exact patterns, decided by the
// feasibility oracle. Test oracle for aerm_halfspace; iterates weights in
// ascending order and stops at the first feasible one.
inline Rat min_risk_by_pattern_enumeration(const LabeledDataset& data, const ConstraintSet& body) {
    const size_t n = data.size();
    if (n > 16) throw CapacityError("min_risk_by_pattern_enumeration: too many patterns");
    for (size_t w = 0; w <= n; ++w) {
        for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
            LossPattern p = LossPattern::from_mask(mask, n);
            if (p.weight() != w) continue;
            if (halfspace_pattern_feasible(data, p, body).feasible)
                return Rat(static_cast<long>(w)) / Rat(static_cast<long>(n));
        }
    }
    throw InternalError("min_risk_by_pattern_enumeration: no feasible pattern");
}

}  // namespace avc
