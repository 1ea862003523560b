#pragma once

#include <vector>

#include "arr/poly.hpp"

namespace arr {

/// Closed rational interval [lo, hi] isolating a single real root.
/// lo == hi designates an exact rational root.
struct RootInterval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) * Rational(1, 2); }
};

struct SturmResult {
    int count = 0;
    std::vector<RootInterval> intervals;  // ordered left to right
};

/// Number of distinct real roots and isolating intervals, each refined to
/// width <= 2^-40. Requires squarefree nonzero input (throws InvalidInput).
SturmResult sturm_real_roots(const Poly& p);

/// Real-root count on (a, b] by Sturm sign variations; p squarefree.
int sturm_count_interval(const Poly& p, const Rational& a, const Rational& b);

/// B > 0 such that all real roots lie in (-B, B).
Rational cauchy_bound(const Poly& p);

/// Shrinks an isolating interval of squarefree p below `width` by bisection.
RootInterval refine_root(const Poly& p, RootInterval iv, const Rational& width);

}  // namespace arr
