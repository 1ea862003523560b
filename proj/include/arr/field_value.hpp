#pragma once

#include <string>
#include <variant>

#include "arr/number_field.hpp"

namespace arr {

/// Exact scalar: a rational or an element of one ambient number field.
/// Mixed arithmetic promotes rationals into the field.
class FieldValue {
public:
    FieldValue() : v_(Rational(0)) {}
    FieldValue(Rational r) : v_(std::move(r)) {}  // NOLINT: implicit by design
    FieldValue(long long n) : v_(Rational(n)) {}  // NOLINT
    FieldValue(AlgNum a) : v_(std::move(a)) {}    // NOLINT

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const AlgNum& algebraic() const { return std::get<AlgNum>(v_); }

    /// Field context, or null for plain rationals.
    FieldPtr field() const { return is_rational() ? nullptr : algebraic().field(); }

    bool is_zero() const;
    FieldValue operator-() const;

    friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
    friend bool operator==(const FieldValue& a, const FieldValue& b);
    friend bool operator!=(const FieldValue& a, const FieldValue& b) { return !(a == b); }

    FieldValue inverse() const;

    /// Residue polynomial view (constant for rationals).
    Poly residue() const;

    std::string str() const;

private:
    std::variant<Rational, AlgNum> v_;
};

/// Promotes a rational into the field of `like` when needed.
FieldValue promote(const FieldValue& value, const FieldPtr& field);

}  // namespace arr
