#pragma once

#include <memory>
#include <string>

#include "arr/poly.hpp"
#include "arr/sturm.hpp"

namespace arr {

/// Quotient field Q[t]/(minpoly) for a monic irreducible minpoly of degree
/// 2..4. Carries the Sturm data of the generator's real roots so embeddings
/// can be pinned by isolation interval.
class NumberField {
public:
    /// Verifies irreducibility (degree <= 4) and isolates the real roots.
    static std::shared_ptr<const NumberField> create(const Poly& minpoly,
                                                     std::string generator = "t");

    const std::string& generator() const { return gen_; }
    const Poly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    int real_root_count() const { return real_roots_.count; }
    const std::vector<RootInterval>& root_isolations() const { return real_roots_.intervals; }

    /// "Q(t)" display name.
    std::string name() const { return "Q(" + gen_ + ")"; }

private:
    NumberField(Poly minpoly, std::string gen, SturmResult roots)
        : minpoly_(std::move(minpoly)), gen_(std::move(gen)), real_roots_(std::move(roots)) {}

    Poly minpoly_;
    std::string gen_;
    SturmResult real_roots_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, represented by its residue polynomial of degree
/// < deg(minpoly). All arithmetic is exact modulo the minimal polynomial.
class AlgNum {
public:
    AlgNum(FieldPtr field, Poly residue);

    const FieldPtr& field() const { return field_; }
    const Poly& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }
    bool is_rational() const { return residue_.is_constant(); }
    Rational rational_value() const { return residue_.coeff(0); }

    AlgNum operator-() const;
    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    AlgNum inverse() const;

    std::string str() const { return residue_.str(field_->generator()); }

private:
    FieldPtr field_;
    Poly residue_;
};

/// Same field context: shared object or equal minimal polynomial.
bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace arr
