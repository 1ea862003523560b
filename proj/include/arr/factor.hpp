#pragma once

#include <utility>
#include <vector>

#include "arr/poly.hpp"

namespace arr {

/// Factorization over Q. Factors are primitive integer polynomials with
/// positive leading coefficient, ordered by degree then lexicographically by
/// coefficients. unit * prod(factor^mult) == input. When `unresolved` is set,
/// some factor of degree >= 5 could not be certified irreducible; it is still
/// listed and the product identity still holds.
struct Factorization {
    Rational unit{1};
    std::vector<std::pair<Poly, int>> factors;
    bool unresolved = false;
};

/// Complete for inputs whose squarefree factors have degree <= 4: squarefree
/// decomposition, then rational roots, then an integer quadratic-split search
/// for quartics. Throws InvalidInput on the zero polynomial.
Factorization factor_over_q(const Poly& p);

/// True iff p is irreducible over Q (certified; degree <= 4 only).
bool is_irreducible(const Poly& p);

}  // namespace arr
