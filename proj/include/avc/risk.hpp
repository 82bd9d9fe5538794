#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "avc/corruption.hpp"
#include "avc/parallel.hpp"

namespace avc {

// Deduplicated set of {0,1}^n loss vectors (the set F~(x, c) of achievable
// per-example loss rows).
struct LossVectorSet {
    int n = 0;
    std::vector<std::vector<int8_t>> vectors;

    static LossVectorSet from(int n_in, const std::set<std::vector<int8_t>>& s) {
        LossVectorSet t;
        t.n = n_in;
        t.vectors.assign(s.begin(), s.end());
        return t;
    }

    void validate() const {
        for (const auto& v : vectors) {
            if (static_cast<int>(v.size()) != n) throw InputError("loss vector set: length mismatch");
            for (int8_t b : v)
                if (b != 0 && b != 1) throw InputError("loss vector set: entries must be 0/1");
        }
    }
};

// (1/n) sum_i 1(kappa_R(h)(x_i) != c_i), exact.
inline Rat adversarial_empirical_risk(const Halfspace& h, const ConstraintSet& body,
                                      const LabeledDataset& data) {
    Rat total = 0;
    for (size_t i = 0; i < data.size(); ++i)
        total += zero_one_loss(corrupted_evaluate(h, body, data.points[i]), data.labels[i]);
    return total / Rat(static_cast<long>(data.size()));
}

// Tabular variant over a finite class row.
inline Rat adversarial_empirical_risk(const std::vector<int8_t>& row, const TabularRelation& rel,
                                      const IdDataset& data) {
    std::vector<Label> corrupted = corrupt_tabular(row, rel);
    Rat total = 0;
    for (size_t i = 0; i < data.size(); ++i) {
        int id = data.point_ids[i];
        if (id < 0 || id >= static_cast<int>(corrupted.size()))
            throw CoverageError("adversarial_empirical_risk: data point outside relation ground set");
        total += zero_one_loss(corrupted[id], data.labels[i]);
    }
    return total / Rat(static_cast<long>(data.size()));
}

// Margin form of the corrupted 0-1 loss for scores normalized so that
// ||a||_{B*} = 1: zero exactly when c*s > 1 (loss at the exact margin).
inline int margin_loss(int c, const Rat& s) {
    if (c != -1 && c != 1) throw InputError("margin_loss: label must be -1 or +1");
    return c * s > 1 ? 0 : 1;
}

struct RademacherOptions {
    int exhaustive_cap = 16;
    int threads = 0;
};

// R(T) = (1/(n 2^n)) sum_{s in {-1,1}^n} sup_{t in T} s.t, exact by full
// enumeration of sign vectors.
inline Rat rademacher_complexity(const LossVectorSet& t, const RademacherOptions& opts = {}) {
    t.validate();
    if (t.vectors.empty()) throw PreconditionError("rademacher_complexity: empty vector set");
    if (t.n > opts.exhaustive_cap)
        throw CapacityError("rademacher_complexity: n exceeds the exhaustive cap; use the sampling estimate");
    const size_t total = size_t{1} << t.n;
    const size_t blocks = std::min<size_t>(total, 256);
    const size_t per = (total + blocks - 1) / blocks;
    std::vector<long> partial(blocks, 0);
    parallel_for(blocks, [&](size_t blk) {
        long acc = 0;
        size_t lo = blk * per, hi = std::min(total, lo + per);
        for (size_t mask = lo; mask < hi; ++mask) {
            long best = 0;
            bool first = true;
            for (const auto& vec : t.vectors) {
                long s = 0;
                for (int i = 0; i < t.n; ++i) {
                    if (vec[i]) s += (mask >> i) & 1 ? 1 : -1;
                }
                if (first || s > best) { best = s; first = false; }
            }
            acc += best;
        }
        partial[blk] = acc;
    }, opts.threads);
    long grand = 0;
    for (long v : partial) grand += v;
    Rat denom = Rat(static_cast<long>(t.n)) * Rat(static_cast<long>(total));
    return Rat(grand) / denom;
}

struct RademacherEstimate {
    Rat value;
    bool exact = false;
    size_t samples = 0;
};

// Monte Carlo fallback for n beyond the cap; the result is tagged, never
// silently substituted for the exact value.
inline RademacherEstimate rademacher_estimate(const LossVectorSet& t, size_t samples, uint64_t seed) {
    t.validate();
    if (t.vectors.empty()) throw PreconditionError("rademacher_estimate: empty vector set");
    if (samples == 0) throw InputError("rademacher_estimate: needs at least one sample");
    uint64_t state = seed;
    auto next = [&state]() {
        // splitmix64
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    long acc = 0;
    std::vector<uint64_t> bits((t.n + 63) / 64);
    for (size_t it = 0; it < samples; ++it) {
        for (auto& w : bits) w = next();
        long best = 0;
        bool first = true;
        for (const auto& vec : t.vectors) {
            long s = 0;
            for (int i = 0; i < t.n; ++i)
                if (vec[i]) s += (bits[i / 64] >> (i % 64)) & 1 ? 1 : -1;
            if (first || s > best) { best = s; first = false; }
        }
        acc += best;
    }
    RademacherEstimate est;
    est.value = Rat(acc) / (Rat(static_cast<long>(t.n)) * Rat(static_cast<long>(samples)));
    est.samples = samples;
    return est;
}

// 2 R + sqrt(32 log(4/delta) / n), natural log, double precision.
inline double generalization_bound(const Rat& rademacher, long n, const Rat& delta) {
    if (n < 1) throw InputError("generalization_bound: n must be >= 1");
    if (delta <= 0 || delta >= 1) throw InputError("generalization_bound: delta must be in (0,1)");
    double dd = to_double(delta);
    return 2.0 * to_double(rademacher) + std::sqrt(32.0 * std::log(4.0 / dd) / static_cast<double>(n));
}

// ceil( C (d log(d/eps) + log(1/delta)) / eps^2 ), natural log.
inline unsigned long sample_complexity_bound(long d, const Rat& eps, const Rat& delta, const Rat& c) {
    if (d < 1) throw InputError("sample_complexity_bound: d must be >= 1");
    if (eps <= 0 || eps >= 1) throw InputError("sample_complexity_bound: eps must be in (0,1)");
    if (delta <= 0 || delta >= 1) throw InputError("sample_complexity_bound: delta must be in (0,1)");
    if (c <= 0) throw InputError("sample_complexity_bound: C must be positive");
    long double de = static_cast<long double>(to_double(eps));
    long double dd = static_cast<long double>(to_double(delta));
    long double dc = static_cast<long double>(to_double(c));
    long double val = dc * (static_cast<long double>(d) * std::log(static_cast<long double>(d) / de)
                            + std::log(1.0L / dd)) / (de * de);
    return static_cast<unsigned long>(std::ceil(val));
}

}  // namespace avc
