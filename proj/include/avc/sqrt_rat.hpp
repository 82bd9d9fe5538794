#pragma once

#include <cmath>
#include <optional>

#include "avc/rational.hpp"

namespace avc {

// Exact scalar of the form sign * sqrt(square) with square a nonnegative
// rational, extended with signed infinities. Closed under negation, scaling
// by rationals and division, which is all the seminorm and signed-distance
// computations need. Every value produced by l1/linf/polytope bodies is in
// fact rational; l2 bodies produce genuine square roots. Comparisons are
// exact in all cases.
class SqrtRat {
public:
    SqrtRat() : sign_(0), square_(0), infinite_(false) {}

    static SqrtRat from_rational(const Rat& r) {
        SqrtRat v;
        v.sign_ = sign(r);
        v.square_ = r * r;
        return v;
    }

    // value = sign * sqrt(square); square must be >= 0.
    static SqrtRat from_square(int sgn_in, const Rat& square) {
        if (square < 0) throw InternalError("SqrtRat with negative square");
        SqrtRat v;
        v.sign_ = square == 0 ? 0 : (sgn_in > 0 ? 1 : (sgn_in < 0 ? -1 : 0));
        v.square_ = v.sign_ == 0 ? Rat(0) : square;
        return v;
    }

    static SqrtRat infinity(int sgn_in) {
        if (sgn_in == 0) throw InternalError("infinity needs a sign");
        SqrtRat v;
        v.sign_ = sgn_in > 0 ? 1 : -1;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    int sgn() const { return sign_; }

    // Square of the magnitude. Only meaningful for finite values.
    const Rat& square() const {
        if (infinite_) throw InternalError("square() of infinite value");
        return square_;
    }

    SqrtRat operator-() const {
        SqrtRat v = *this;
        v.sign_ = -v.sign_;
        return v;
    }

    SqrtRat times(const Rat& t) const {
        if (t == 0) {
            if (infinite_) throw InternalError("0 * infinity");
            return SqrtRat();
        }
        SqrtRat v = *this;
        v.sign_ *= sign(t);
        if (!infinite_) v.square_ *= t * t;
        return v;
    }

    // this / d for finite nonzero d; infinities pass through with sign.
    SqrtRat divided_by(const SqrtRat& d) const {
        if (d.infinite_ || d.sign_ == 0) throw InternalError("division by zero or infinite SqrtRat");
        SqrtRat v = *this;
        v.sign_ *= d.sign_;
        if (!infinite_) v.square_ /= d.square_;
        return v;
    }

    // Exact three-way comparison: -1, 0, +1.
    int compare(const SqrtRat& o) const {
        if (infinite_ || o.infinite_) {
            int a = infinite_ ? sign_ * 2 : clamp_finite();
            int b = o.infinite_ ? o.sign_ * 2 : o.clamp_finite();
            return a < b ? -1 : (a > b ? 1 : same_infinite_check(o));
        }
        if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
        if (sign_ == 0) return 0;
        int c = cmp(square_, o.square_);
        return sign_ > 0 ? c : -c;
    }

    int compare(const Rat& r) const { return compare(from_rational(r)); }

    bool operator<(const SqrtRat& o) const { return compare(o) < 0; }
    bool operator<=(const SqrtRat& o) const { return compare(o) <= 0; }
    bool operator>(const SqrtRat& o) const { return compare(o) > 0; }
    bool operator>=(const SqrtRat& o) const { return compare(o) >= 0; }
    bool operator==(const SqrtRat& o) const { return compare(o) == 0; }
    bool operator!=(const SqrtRat& o) const { return compare(o) != 0; }

    double to_double() const {
        if (infinite_) return sign_ > 0 ? HUGE_VAL : -HUGE_VAL;
        return sign_ * std::sqrt(square_.get_d());
    }

    // Exact rational value when the square is a perfect rational square.
    std::optional<Rat> rational_value() const {
        if (infinite_) return std::nullopt;
        if (sign_ == 0) return Rat(0);
        const mpz_class& num = square_.get_num();
        const mpz_class& den = square_.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rat v(rn, rd);
        v.canonicalize();
        return sign_ > 0 ? v : Rat(-v);
    }

private:
    int clamp_finite() const { return sign_; }
    int same_infinite_check(const SqrtRat& o) const {
        // Equal on the coarse scale: either both infinite with the same sign
        // (treated as equal) or impossible by construction.
        (void)o;
        return 0;
    }

    int sign_;       // -1, 0, +1
    Rat square_;     // square of the magnitude (finite case)
    bool infinite_;
};

// Decides a <= b + c exactly for finite nonnegative values (used by the
// triangle-inequality property checks).
inline bool sqrt_leq_sum(const SqrtRat& a, const SqrtRat& b, const SqrtRat& c) {
    if (a.is_infinite() || b.is_infinite() || c.is_infinite())
        throw InternalError("sqrt_leq_sum on infinite values");
    if (a.sgn() < 0 || b.sgn() < 0 || c.sgn() < 0)
        throw InternalError("sqrt_leq_sum on negative values");
    // a <= b + c  <=>  a^2 - b^2 - c^2 <= 2*sqrt(b^2 c^2)
    Rat lhs = a.square() - b.square() - c.square();
    if (lhs <= 0) return true;
    return lhs * lhs <= 4 * b.square() * c.square();
}

}  // namespace avc
