#include "arr/field_value.hpp"

namespace arr {

bool FieldValue::is_zero() const {
    return is_rational() ? rational().is_zero() : algebraic().is_zero();
}

FieldValue FieldValue::operator-() const {
    return is_rational() ? FieldValue(-rational()) : FieldValue(-algebraic());
}

FieldValue promote(const FieldValue& value, const FieldPtr& field) {
    if (!field || !value.is_rational()) return value;
    return FieldValue(AlgNum(field, Poly::constant(value.rational())));
}

namespace {

template <typename RatOp, typename AlgOp>
FieldValue binop(const FieldValue& a, const FieldValue& b, RatOp rop, AlgOp aop) {
    if (a.is_rational() && b.is_rational()) return FieldValue(rop(a.rational(), b.rational()));
    FieldPtr f = a.field() ? a.field() : b.field();
    FieldValue pa = promote(a, f), pb = promote(b, f);
    return FieldValue(aop(pa.algebraic(), pb.algebraic()));
}

}  // namespace

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    return binop(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                 [](const AlgNum& x, const AlgNum& y) { return x + y; });
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) {
    return binop(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                 [](const AlgNum& x, const AlgNum& y) { return x - y; });
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    return binop(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                 [](const AlgNum& x, const AlgNum& y) { return x * y; });
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) {
    return binop(a, b, [](const Rational& x, const Rational& y) { return x / y; },
                 [](const AlgNum& x, const AlgNum& y) { return x / y; });
}

bool operator==(const FieldValue& a, const FieldValue& b) {
    if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
    FieldPtr f = a.field() ? a.field() : b.field();
    return promote(a, f).algebraic() == promote(b, f).algebraic();
}

FieldValue FieldValue::inverse() const {
    return is_rational() ? FieldValue(rational().inverse()) : FieldValue(algebraic().inverse());
}

Poly FieldValue::residue() const {
    return is_rational() ? Poly::constant(rational()) : algebraic().residue();
}

std::string FieldValue::str() const {
    return is_rational() ? rational().str() : algebraic().str();
}

}  // namespace arr
