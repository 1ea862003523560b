#include "arr/factor.hpp"

#include <algorithm>

namespace arr {

namespace {

std::vector<BigInt> positive_divisors(const BigInt& n) {
    BigInt a = n < 0 ? BigInt(-n) : n;
    std::vector<BigInt> divs;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// All rational roots of a primitive integer polynomial, with multiplicity 1
/// (caller works on squarefree input). Uses the rational root theorem.
std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> roots;
    Poly q = p;
    if (q.coeff(0).is_zero()) {
        roots.emplace_back(0);
        while (q.coeff(0).is_zero()) q = exact_div(q, Poly::variable());
        if (q.is_constant()) return roots;
    }
    BigInt a0 = q.coeff(0).numerator();
    BigInt an = q.leading().numerator();
    for (const BigInt& num : positive_divisors(a0)) {
        for (const BigInt& den : positive_divisors(an)) {
            Rational cand(num, den);
            if (q.eval(cand).is_zero()) roots.push_back(cand);
            Rational neg = -cand;
            if (q.eval(neg).is_zero()) roots.push_back(neg);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

bool is_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

/// Quadratic split search for a monic integer quartic with no rational roots:
/// x^4+a x^3+b x^2+c x+d = (x^2+p x+q)(x^2+r x+s) over Z, if possible.
bool quartic_split(const Poly& quartic, Poly& f1, Poly& f2) {
    BigInt a = quartic.coeff(3).numerator();
    BigInt b = quartic.coeff(2).numerator();
    BigInt c = quartic.coeff(1).numerator();
    BigInt d = quartic.coeff(0).numerator();
    std::vector<BigInt> qs;
    for (const BigInt& q : positive_divisors(d)) {
        qs.push_back(q);
        qs.push_back(-q);
    }
    for (const BigInt& q : qs) {
        if (d % q != 0) continue;
        BigInt s = d / q;
        // p + r = a, p*r = b - q - s; p, r are roots of X^2 - a X + (b-q-s).
        BigInt pr = b - q - s;
        BigInt disc = a * a - 4 * pr;
        BigInt root;
        if (!is_square(disc, root)) continue;
        if ((a + root) % 2 != 0) continue;
        BigInt p = (a + root) / 2;
        BigInt r = a - p;
        if (p * s + q * r != c) {
            std::swap(p, r);
            if (p * s + q * r != c) continue;
        }
        f1 = Poly({Rational(q), Rational(p), Rational(1)});
        f2 = Poly({Rational(s), Rational(r), Rational(1)});
        return true;
    }
    return false;
}

/// Monicization: for primitive integer p of degree n with leading a, the monic
/// integer polynomial q(y) = a^(n-1) p(y/a) has q irreducible iff p is.
Poly monicize(const Poly& p, Rational& lead) {
    lead = p.leading();
    int n = p.degree();
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    Rational power(1);
    for (int k = n; k >= 0; --k) {
        out[static_cast<size_t>(k)] = p.coeff(k) * power;
        power *= lead;
    }
    return Poly(std::move(out)).monic().primitive();
}

void factor_squarefree(const Poly& sf, int mult, Factorization& result) {
    Poly rem = sf.primitive();
    std::vector<Poly> parts;
    for (const Rational& root : rational_roots(rem)) {
        Poly lin = Poly({-root, Rational(1)}).primitive();
        parts.push_back(lin);
        rem = exact_div(rem, lin).primitive();
    }
    if (rem.degree() >= 1) {
        switch (rem.degree()) {
            case 1:
                parts.push_back(rem);
                break;
            case 2:
            case 3:
                // No rational root, so irreducible over Q.
                parts.push_back(rem);
                break;
            case 4: {
                Rational lead;
                Poly monic4 = monicize(rem, lead);
                Poly f1, f2;
                if (quartic_split(monic4, f1, f2)) {
                    // Undo the y = lead*x substitution on each factor.
                    auto undo = [&](const Poly& f) {
                        std::vector<Rational> cs(static_cast<size_t>(f.degree()) + 1);
                        Rational power(1);
                        for (int k = f.degree(); k >= 0; --k) {
                            cs[static_cast<size_t>(k)] = f.coeff(k) * power;
                            power *= lead;
                        }
                        return Poly(std::move(cs)).primitive();
                    };
                    parts.push_back(undo(f1));
                    parts.push_back(undo(f2));
                } else {
                    parts.push_back(rem);
                }
                break;
            }
            default:
                // Rational roots removed and no quartic machinery applies;
                // cannot certify irreducibility at degree >= 5.
                parts.push_back(rem);
                result.unresolved = true;
                break;
        }
    }
    for (auto& f : parts) result.factors.emplace_back(f, mult);
}

}  // namespace

Factorization factor_over_q(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("factorization of zero polynomial");
    Factorization result;
    if (p.is_constant()) {
        result.unit = p.coeff(0);
        return result;
    }
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        factor_squarefree(sf, mult, result);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return Poly::compare(a.first, b.first) < 0; });
    Poly prod = Poly::constant(Rational(1));
    for (const auto& [f, mult] : result.factors) prod = prod * f.pow(mult);
    result.unit = p.leading() / prod.leading();
    return result;
}

bool is_irreducible(const Poly& p) {
    if (p.is_zero() || p.is_constant()) return false;
    if (p.degree() > 4) throw InvalidInput("irreducibility only certified up to degree 4");
    Factorization f = factor_over_q(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace arr
