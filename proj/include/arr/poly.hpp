#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(Rational r);
    static Poly variable();                       // t
    static Poly monomial(Rational coeff, int k);  // coeff * t^k

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of t^k (zero outside the stored range).
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& r, Poly p) { return p.scale(r); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scale(const Rational& r) const;
    Poly shift_up(int k) const;  // multiply by t^k

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly pow(int e) const;

    /// Leading coefficient made 1. Throws InvalidInput on zero.
    Poly monic() const;

    /// Rational c > 0 such that (1/c) * p has coprime integer coefficients.
    Rational content() const;
    /// Integer-coefficient primitive part with positive leading coefficient.
    Poly primitive() const;

    /// Lexicographic order on (degree, coefficient list from highest down).
    static int compare(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder over Q; throws DivisionByZero on zero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Exact division; throws InvalidInput if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0,0) is zero. Throws InvalidInput if both inputs zero when
/// require_nonzero is set.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Extended Euclid: returns (g, s, u) with s*a + u*b = g, g monic.
struct ExtendedGcd {
    Poly g, s, u;
};
ExtendedGcd poly_extended_gcd(const Poly& a, const Poly& b);

/// Product of the distinct irreducible factors, i.e. p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Yun decomposition: list of (factor, multiplicity) with factors squarefree
/// and pairwise coprime; the product of factor^multiplicity times a rational
/// unit reproduces p.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Resultant of two nonzero univariate polynomials (Sylvester determinant).
Rational resultant(const Poly& a, const Poly& b);

/// Parses sparse polynomial text such as "1-2*t+t^2", "t^3-t^2+1" or "3/2".
/// Whitespace is not allowed inside the token. Throws InvalidInput.
Poly parse_poly(const std::string& text, const std::string& var = "t");

}  // namespace arr
