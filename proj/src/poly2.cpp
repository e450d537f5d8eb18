#include "shrinker/poly2.hpp"
#include "shrinker/polytext.hpp"
#include "shrinker/radical.hpp"

#include <cmath>

namespace shrinker {

std::optional<BivarPoly> divide_exact(const BivarPoly& p, const BivarPoly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    auto [lq, cq] = q.leading();
    BivarPoly rest = p, quot;
    while (!rest.is_zero()) {
        auto [lr, cr] = rest.leading();
        if (lr.first < lq.first || lr.second < lq.second) return std::nullopt;
        BivarPoly t = BivarPoly::monomial(lr.first - lq.first, lr.second - lq.second, cr / cq);
        quot += t;
        rest -= t * q;
    }
    return quot;
}

RadicalScalar radical_eval(const BivarPoly& p, int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    // r_b^e = (2k_b)^{floor(e/2)} r_b^{e mod 2}
    BigRat c[2][2];
    for (const auto& [e, coef] : p.terms()) {
        BigRat v = coef * pow(f.two_k1, e.first / 2) * pow(f.two_k2, e.second / 2);
        c[e.first % 2][e.second % 2] += v;
    }
    return RadicalScalar(f, c[0][0], c[1][0], c[0][1], c[1][1]);
}

double eval_double(const BivarPoly& p, double r1, double r2) {
    double out = 0;
    for (const auto& [e, c] : p.terms()) out += c.get_d() * std::pow(r1, e.first) * std::pow(r2, e.second);
    return out;
}

double eval_double(const ShiftedPoly& p, double s1, double s2) {
    double out = 0;
    for (const auto& [e, c] : p.terms()) out += c.to_double() * std::pow(s1, e.first) * std::pow(s2, e.second);
    return out;
}

BigRat eval_rational(const BivarPoly& p, const BigRat& r1, const BigRat& r2) {
    BigRat out = 0;
    for (const auto& [e, c] : p.terms()) out += c * pow(r1, e.first) * pow(r2, e.second);
    return out;
}

namespace {

// (t + shift)^e as coefficient list in t
std::vector<Sqrt2Scalar> binomial_shift(int e, const Sqrt2Scalar& shift) {
    std::vector<Sqrt2Scalar> out(e + 1);
    Sqrt2Scalar sp(1);
    BigInt binom = 1;
    for (int j = 0; j <= e; ++j) {
        // coefficient of t^{e-j} is C(e, j) shift^j
        out[e - j] = Sqrt2Scalar(BigRat(binom)) * sp;
        sp *= shift;
        binom = binom * (e - j) / (j + 1);
    }
    return out;
}

template <class C>
Poly2<Sqrt2Scalar> substitute_shift(const Poly2<C>& p, const Sqrt2Scalar& shift) {
    Poly2<Sqrt2Scalar> out;
    for (const auto& [e, c] : p.terms()) {
        auto bx = binomial_shift(e.first, shift);
        auto by = binomial_shift(e.second, shift);
        Sqrt2Scalar cc(c);
        for (int i = 0; i <= e.first; ++i)
            for (int j = 0; j <= e.second; ++j) out.add_term({i, j}, cc * bx[i] * by[j]);
    }
    return out;
}

}  // namespace

ShiftedPoly shift_sqrt2(const BivarPoly& p) { return substitute_shift(p, Sqrt2Scalar::sqrt2()); }

Poly2<Sqrt2Scalar> unshift_sqrt2(const ShiftedPoly& p) {
    Poly2<Sqrt2Scalar> out;
    for (const auto& [e, c] : p.terms()) {
        auto bx = binomial_shift(e.first, -Sqrt2Scalar::sqrt2());
        auto by = binomial_shift(e.second, -Sqrt2Scalar::sqrt2());
        for (int i = 0; i <= e.first; ++i)
            for (int j = 0; j <= e.second; ++j) out.add_term({i, j}, c * bx[i] * by[j]);
    }
    return out;
}

std::optional<BivarPoly> rational_part_if_exact(const Poly2<Sqrt2Scalar>& p) {
    BivarPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (c.sqrt2_coeff() != 0) return std::nullopt;
        out.add_term(e, c.rational());
    }
    return out;
}

BivarPoly parse_bivar(std::string_view text) {
    PolyReader<BivarPoly> reader(
        text,
        [](std::string_view name) -> std::optional<BivarPoly> {
            if (name == "r1") return BivarPoly::var(1);
            if (name == "r2") return BivarPoly::var(2);
            return std::nullopt;
        },
        [](const BigRat& q) { return BivarPoly(q); });
    return reader.parse();
}

ShiftedPoly parse_shifted(std::string_view text) {
    PolyReader<ShiftedPoly> reader(
        text,
        [](std::string_view name) -> std::optional<ShiftedPoly> {
            if (name == "s1") return ShiftedPoly::var(1);
            if (name == "s2") return ShiftedPoly::var(2);
            if (name == "sqrt2") return ShiftedPoly(Sqrt2Scalar::sqrt2());
            return std::nullopt;
        },
        [](const BigRat& q) { return ShiftedPoly(Sqrt2Scalar(q)); });
    return reader.parse();
}

}  // namespace shrinker
