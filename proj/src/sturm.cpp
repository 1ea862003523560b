#include "arr/sturm.hpp"

#include <algorithm>

namespace arr {

namespace {

std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> seq;
    seq.push_back(p.primitive());
    Poly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d.primitive());
    while (true) {
        const Poly& a = seq[seq.size() - 2];
        const Poly& b = seq.back();
        Poly r = divrem(a, b).second;
        if (r.is_zero()) break;
        seq.push_back((-r).primitive());
    }
    return seq;
}

int variations_at(const std::vector<Poly>& seq, const Rational& x) {
    int var = 0, prev = 0;
    for (const Poly& p : seq) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

Rational cauchy_bound(const Poly& p) {
    if (p.is_zero() || p.is_constant()) return Rational(1);
    Rational lead = p.leading().abs();
    Rational mx(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational a = p.coeff(k).abs() / lead;
        if (a > mx) mx = a;
    }
    return mx + Rational(1);
}

int sturm_count_interval(const Poly& p, const Rational& a, const Rational& b) {
    auto seq = sturm_sequence(p);
    return variations_at(seq, a) - variations_at(seq, b);
}

RootInterval refine_root(const Poly& p, RootInterval iv, const Rational& width) {
    if (iv.lo == iv.hi) return iv;
    int lo_sign = p.eval(iv.lo).sign();
    while (iv.width() > width) {
        Rational mid = iv.mid();
        int ms = p.eval(mid).sign();
        if (ms == 0) return {mid, mid};
        if (ms == lo_sign) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

SturmResult sturm_real_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("sturm_real_roots of zero polynomial");
    if (!poly_gcd(p, p.derivative()).is_constant())
        throw InvalidInput("sturm_real_roots requires a squarefree polynomial");
    SturmResult result;
    if (p.is_constant()) return result;

    auto seq = sturm_sequence(p);
    auto count = [&seq](const Rational& a, const Rational& b) {
        return variations_at(seq, a) - variations_at(seq, b);
    };

    Rational bound = cauchy_bound(p);
    result.count = count(-bound, bound);
    if (result.count == 0) return result;

    // Split until each interval isolates exactly one root. Endpoints chosen by
    // bisection are checked against exact roots.
    std::vector<std::pair<RootInterval, int>> work{{{-bound, bound}, result.count}};
    std::vector<RootInterval> isolated;
    while (!work.empty()) {
        auto [iv, n] = work.back();
        work.pop_back();
        if (n == 0) continue;
        if (n == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid = iv.mid();
        if (p.eval(mid).is_zero()) {
            isolated.push_back({mid, mid});
            // Step slightly inside to keep the exact root out of both halves.
            Rational eps = iv.width() * Rational(1, 1024);
            while (p.eval(mid - eps).is_zero() || p.eval(mid + eps).is_zero())
                eps = eps * Rational(1, 2);
            Rational left_hi = mid - eps, right_lo = mid + eps;
            int left = count(iv.lo, left_hi);
            int right = count(right_lo, iv.hi);
            work.push_back({{iv.lo, left_hi}, left});
            work.push_back({{right_lo, iv.hi}, right});
        } else {
            int left = count(iv.lo, mid);
            work.push_back({{iv.lo, mid}, left});
            work.push_back({{mid, iv.hi}, n - left});
        }
    }
    // 2^-40 target width for downstream numeric consumers.
    Rational target(BigInt(1), BigInt(1) << 40);
    for (auto& iv : isolated) result.intervals.push_back(refine_root(p, iv, target));
    std::sort(result.intervals.begin(), result.intervals.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return result;
}

}  // namespace arr
