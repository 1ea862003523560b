#include "arr/number_field.hpp"

#include "arr/factor.hpp"

namespace arr {

std::shared_ptr<const NumberField> NumberField::create(const Poly& minpoly, std::string generator) {
    if (minpoly.degree() < 2 || minpoly.degree() > 4)
        throw InvalidInput("number field degree must be 2..4, got degree " +
                           std::to_string(minpoly.degree()));
    Poly monic = minpoly.monic();
    if (!is_irreducible(monic))
        throw InvalidInput("minimal polynomial is reducible: " + minpoly.str());
    SturmResult roots = sturm_real_roots(monic);
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(monic), std::move(generator), std::move(roots)));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minpoly() == b->minpoly();
}

AlgNum::AlgNum(FieldPtr field, Poly residue) : field_(std::move(field)), residue_(std::move(residue)) {
    if (!field_) throw InvalidInput("algebraic number without field context");
    if (residue_.degree() >= field_->degree())
        residue_ = divrem(residue_, field_->minpoly()).second;
}

AlgNum AlgNum::operator-() const { return AlgNum(field_, -residue_); }

namespace {
const FieldPtr& common_field(const AlgNum& a, const AlgNum& b) {
    if (!same_field(a.field(), b.field()))
        throw FieldMismatch("operands from different number fields");
    return a.field();
}
}  // namespace

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    return AlgNum(common_field(a, b), a.residue() + b.residue());
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
    return AlgNum(common_field(a, b), a.residue() - b.residue());
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    return AlgNum(common_field(a, b), a.residue() * b.residue());
}

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    // Extended Euclid against the minimal polynomial: s*residue + u*minpoly = 1.
    ExtendedGcd e = poly_extended_gcd(residue_, field_->minpoly());
    if (e.g.degree() != 0)
        throw InvalidInput("non-invertible residue; minimal polynomial not irreducible?");
    return AlgNum(field_, e.s);
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) {
    common_field(a, b);
    return a * b.inverse();
}

bool operator==(const AlgNum& a, const AlgNum& b) {
    return same_field(a.field(), b.field()) && a.residue() == b.residue();
}

}  // namespace arr
