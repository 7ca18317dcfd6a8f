#pragma once

#include <vector>

#include "hardcore/poly.hpp"
#include "hardcore/verdict.hpp"

namespace hardcore {

/// Closed interval [lo, hi] holding exactly one real root; lo == hi means the root is lo.
/// Endpoints of a non-degenerate interval are never roots.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// Sturm sequence of a square-free integer polynomial, built as a primitive
/// pseudo-remainder sequence with signs corrected to match the classical chain.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& square_free);

    const std::vector<IntPoly>& sequence() const { return chain_; }
    int variations_at(const Rational& x) const;
    int variations_at_pos_infinity() const;
    int variations_at_neg_infinity() const;
    /// Number of distinct roots in (a, b].
    int count_roots(const Rational& a, const Rational& b) const;

private:
    std::vector<IntPoly> chain_;
};

/// Sign of p(x) computed in integer arithmetic.
int sign_at(const IntPoly& p, const Rational& x);

/// Integer square-free part of p with positive leading coefficient.
IntPoly square_free_integer(const RatPoly& p);

/// Strict bound: every root z satisfies |z| < root_bound(p).
Rational root_bound(const IntPoly& p);

/// Isolating intervals, increasing, for the distinct roots in (lo, hi].
std::vector<IsolatingInterval> isolate_roots_in(const RatPoly& p, const Rational& lo, const Rational& hi);
std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p);
std::vector<IsolatingInterval> isolate_positive_roots(const RatPoly& p);

/// Bisects until the width is at most `width`. `iv` must come from one of the isolators for p.
IsolatingInterval refine_root(const RatPoly& p, IsolatingInterval iv, const Rational& width);

/// Decides p(x) >= 0 for every x >= 0. A failing verdict carries x0 with p(x0) < 0 and margin p(x0).
Verdict sturm_nonneg_on_halfline(const RatPoly& p);
/// Decides p(x) >= 0 for every x in [lo, hi].
Verdict sturm_nonneg_on_interval(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace hardcore
