#include "arr/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arr {

namespace {
const Rational kZero = Rational(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational r) {
    Poly p;
    if (!r.is_zero()) p.c_.push_back(std::move(r));
    return p;
}

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(Rational coeff, int k) {
    Poly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
    p.c_[static_cast<size_t>(k)] = std::move(coeff);
    return p;
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scale(const Rational& r) const {
    if (r.is_zero()) return Poly();
    Poly out = *this;
    for (auto& c : out.c_) c *= r;
    return out;
}

Poly Poly::shift_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i + static_cast<size_t>(k)] = c_[i];
    return Poly(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational((long long)i) * c_[i];
    return Poly(std::move(out));
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw InvalidInput("monic of zero polynomial");
    return scale(leading().inverse());
}

Rational Poly::content() const {
    if (is_zero()) return Rational(1);
    BigInt den_lcm = 1;
    for (const auto& c : c_) {
        BigInt g = boost::multiprecision::gcd(den_lcm, c.denominator());
        den_lcm = den_lcm / g * c.denominator();
    }
    BigInt num_gcd = 0;
    for (const auto& c : c_) {
        BigInt scaled = c.numerator() * (den_lcm / c.denominator());
        num_gcd = boost::multiprecision::gcd(num_gcd, scaled < 0 ? BigInt(-scaled) : scaled);
    }
    Rational content(num_gcd, den_lcm);
    if (leading().sign() < 0) content = -content;
    return content;
}

Poly Poly::primitive() const {
    if (is_zero()) return Poly();
    return scale(content().inverse());
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k) ? -1 : 1;
    }
    return 0;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? "-" : "+");
        }
        bool unit = a.is_one() && k > 0;
        if (!unit) out << a.str();
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q;
    Poly r = a;
    Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational factor = r.leading() * lead_inv;
        Poly term = Poly::monomial(factor, k);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

ExtendedGcd poly_extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Rational(1)), s1;
    Poly u0, u1 = Poly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly s = s0 - q * s1;
        Poly u = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    if (r0.is_zero()) return {r0, s0, u0};
    Rational inv = r0.leading().inverse();
    return {r0.scale(inv), s0.scale(inv), u0.scale(inv)};
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("squarefree part of zero polynomial");
    Poly g = poly_gcd(p, p.derivative());
    if (g.is_constant()) return p;
    return exact_div(p, g);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.is_constant()) return out;
    // Yun's algorithm.
    Poly d = p.derivative();
    Poly a = poly_gcd(p, d);
    Poly b = exact_div(p, a);
    Poly c = exact_div(d, a);
    int mult = 1;
    while (true) {
        Poly delta = c - b.derivative();
        if (delta.is_zero()) {
            if (b.degree() > 0) out.emplace_back(b.monic(), mult);
            break;
        }
        Poly f = poly_gcd(b, delta);
        if (f.degree() > 0) out.emplace_back(f.monic(), mult);
        b = exact_div(b, f);
        c = exact_div(delta, f);
        ++mult;
        if (b.is_constant()) break;
    }
    return out;
}

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw InvalidInput("resultant of zero polynomial");
    int m = a.degree(), n = b.degree();
    if (m == 0) return a.leading() == Rational(1) ? Rational(1) : a.coeff(0);
    if (n == 0) {
        Rational acc(1);
        for (int i = 0; i < m; ++i) acc *= b.coeff(0);
        return acc;
    }
    // Sylvester matrix with rational Gaussian elimination.
    int size = m + n;
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(size),
                                           std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) mat[i][i + (m - k)] = a.coeff(k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) mat[n + i][i + (n - k)] = b.coeff(k);
    Rational det(1);
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int row = col; row < size; ++row) {
            if (!mat[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        Rational inv = mat[col][col].inverse();
        for (int row = col + 1; row < size; ++row) {
            if (mat[row][col].is_zero()) continue;
            Rational f = mat[row][col] * inv;
            for (int k = col; k < size; ++k) mat[row][k] -= f * mat[col][k];
        }
    }
    return det;
}

namespace {

// Recursive-descent parser for compact polynomial expressions.
struct PolyParser {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    explicit PolyParser(const std::string& text, const std::string& v) : s(text), var(v) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidInput(msg + " in polynomial '" + s + "' at offset " + std::to_string(pos));
    }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    bool match_var() {
        if (s.compare(pos, var.size(), var) == 0) {
            size_t end = pos + var.size();
            if (end >= s.size() || !(std::isalnum((unsigned char)s[end]) && !std::isdigit((unsigned char)s[end]))) {
                pos = end;
                return true;
            }
        }
        return false;
    }

    Rational parse_number() {
        size_t start = pos;
        while (!eof() && std::isdigit((unsigned char)peek())) ++pos;
        if (pos == start) fail("expected number");
        std::string num = s.substr(start, pos - start);
        if (!eof() && peek() == '/') {
            ++pos;
            size_t dstart = pos;
            while (!eof() && std::isdigit((unsigned char)peek())) ++pos;
            if (pos == dstart) fail("expected denominator");
            return Rational(BigInt(num), BigInt(s.substr(dstart, pos - dstart)));
        }
        return Rational(BigInt(num));
    }

    int parse_exponent() {
        if (!eof() && peek() == '^') {
            ++pos;
            size_t start = pos;
            while (!eof() && std::isdigit((unsigned char)peek())) ++pos;
            if (pos == start) fail("expected exponent");
            return std::stoi(s.substr(start, pos - start));
        }
        return 1;
    }

    // term := [number ['*']] [var ['^' int]] | var ['^' int]
    Poly parse_term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (!eof() && std::isdigit((unsigned char)peek())) {
            coeff = parse_number();
            have_coeff = true;
        }
        int exp = 0;
        if (!eof() && (peek() == '*' || !have_coeff)) {
            size_t save = pos;
            if (peek() == '*') ++pos;
            if (match_var()) {
                exp = parse_exponent();
            } else {
                pos = save;
                if (!have_coeff) fail("expected term");
            }
        }
        return Poly::monomial(coeff, exp);
    }

    Poly parse() {
        Poly acc;
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Poly term = parse_term();
            acc += sign < 0 ? -term : term;
            first = false;
        }
        if (first) fail("empty polynomial");
        return acc;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::string& var) {
    PolyParser p(text, var);
    return p.parse();
}

}  // namespace arr
