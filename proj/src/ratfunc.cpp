#include "shrinker/ratfunc.hpp"

#include <stdexcept>

namespace shrinker {

const BivarPoly& RadialRational::factor_poly(int f) {
    static const std::array<BivarPoly, kFactors> table = [] {
        auto m = [](int a, int b, long c = 1) { return BivarPoly::monomial(a, b, BigRat(c)); };
        return std::array<BivarPoly, kFactors>{
            m(1, 0),
            m(0, 1),
            m(2, 0) + m(0, 0, 2),
            m(2, 0) + m(0, 0, 6),
            m(0, 2) + m(0, 0, 2),
            m(0, 2) + m(0, 0, 6),
            m(2, 2) + m(2, 0, 2) + m(0, 2, 2),
            m(2, 0, 2) + m(0, 0, 1),
            m(0, 2, 2) + m(0, 0, 1),
        };
    }();
    return table.at(f);
}

const char* RadialRational::factor_text(int f) {
    static const char* names[kFactors] = {"r1",          "r2",          "(r1^2 + 2)",
                                          "(r1^2 + 6)",  "(r2^2 + 2)",  "(r2^2 + 6)",
                                          "(r1^2 * r2^2 + 2 * r1^2 + 2 * r2^2)", "(2 * r1^2 + 1)",
                                          "(2 * r2^2 + 1)"};
    return names[f];
}

RadialRational RadialRational::monomial(int a, int b, const BigRat& c) {
    RadialRational out(BivarPoly::monomial(std::max(a, 0), std::max(b, 0), c));
    out.mult_[R1] = std::max(-a, 0);
    out.mult_[R2] = std::max(-b, 0);
    return out;
}

BivarPoly RadialRational::denominator() const {
    BivarPoly d(den_const_);
    for (int f = 0; f < kFactors; ++f) d *= factor_poly(f).pow(mult_[f]);
    return d;
}

void RadialRational::reduce() {
    if (num_.is_zero()) {
        mult_.fill(0);
        den_const_ = 1;
        return;
    }
    for (int f = 0; f < kFactors; ++f) {
        while (mult_[f] > 0) {
            auto q = divide_exact(num_, factor_poly(f));
            if (!q) break;
            num_ = std::move(*q);
            --mult_[f];
        }
    }
    if (den_const_ != 1) {
        num_ *= BigRat(1 / den_const_);
        den_const_ = 1;
    }
}

RadialRational& RadialRational::operator+=(const RadialRational& o) {
    // common denominator = max multiplicity per factor
    BivarPoly a = num_ * BigRat(1 / den_const_), b = o.num_ * BigRat(1 / o.den_const_);
    for (int f = 0; f < kFactors; ++f) {
        int m = std::max(mult_[f], o.mult_[f]);
        if (m > mult_[f]) a *= factor_poly(f).pow(m - mult_[f]);
        if (m > o.mult_[f]) b *= factor_poly(f).pow(m - o.mult_[f]);
        mult_[f] = m;
    }
    num_ = a + b;
    den_const_ = 1;
    reduce();
    return *this;
}

RadialRational& RadialRational::operator*=(const RadialRational& o) {
    num_ *= o.num_;
    den_const_ *= o.den_const_;
    for (int f = 0; f < kFactors; ++f) mult_[f] += o.mult_[f];
    reduce();
    return *this;
}

RadialRational RadialRational::inverse() const {
    if (num_.is_zero()) throw std::domain_error("RadialRational: division by zero");
    RadialRational out;
    BivarPoly rest = num_;
    for (int f = 0; f < kFactors; ++f) {
        for (;;) {
            auto q = divide_exact(rest, factor_poly(f));
            if (!q) break;
            rest = std::move(*q);
            ++out.mult_[f];
        }
    }
    if (rest.total_degree() != 0)
        throw std::domain_error("RadialRational: numerator does not factor over the known denominators: " +
                                num_.to_string());
    out.den_const_ = rest.leading().second;
    out.num_ = denominator();
    out.reduce();
    return out;
}

RadialRational RadialRational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RadialRational out(1), base = *this;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::optional<BivarPoly> RadialRational::times_to_polynomial(const RadialRational& target_den) const {
    RadialRational prod = *this * target_den;
    for (int f = 0; f < kFactors; ++f)
        if (prod.mult_[f] != 0) return std::nullopt;
    return prod.num_ * BigRat(1 / prod.den_const_);
}

RadicalScalar RadialRational::eval(int k1, int k2) const {
    RadicalScalar den(k1, k2, den_const_);
    for (int f = 0; f < kFactors; ++f)
        if (mult_[f]) den *= radical_eval(factor_poly(f), k1, k2).pow(mult_[f]);
    return radical_eval(num_, k1, k2) / den;
}

double RadialRational::eval_double(double r1, double r2) const {
    return shrinker::eval_double(num_, r1, r2) / shrinker::eval_double(denominator(), r1, r2);
}

BigRat RadialRational::eval_rational(const BigRat& r1, const BigRat& r2) const {
    return shrinker::eval_rational(num_, r1, r2) / shrinker::eval_rational(denominator(), r1, r2);
}

std::string RadialRational::to_string() const {
    std::string den;
    if (den_const_ != 1) den = den_const_.get_str();
    for (int f = 0; f < kFactors; ++f) {
        if (!mult_[f]) continue;
        if (!den.empty()) den += " * ";
        den += factor_text(f);
        if (mult_[f] > 1) den += "^" + std::to_string(mult_[f]);
    }
    std::string num = num_.to_string();
    if (den.empty()) return num;
    return "(" + num + ") / (" + den + ")";
}

}  // namespace shrinker
