#pragma once

#include "shrinker/poly2.hpp"
#include "shrinker/radical.hpp"

#include <array>
#include <string>

namespace shrinker {

// Rational function in (r1, r2) whose denominator factors over a fixed set of
// irreducible polynomials that occur for sphere products. Kept reduced: no
// denominator factor divides the numerator.
class RadialRational {
public:
    enum Factor { R1, R2, R1sqPlus2, R1sqPlus6, R2sqPlus2, R2sqPlus6, Mixed, TwoR1sqPlus1, TwoR2sqPlus1, kFactors };
    static const BivarPoly& factor_poly(int f);
    static const char* factor_text(int f);

    RadialRational() = default;
    RadialRational(BivarPoly num) : num_(std::move(num)) {}
    RadialRational(long c) : num_(BigRat(c)) {}
    RadialRational(const BigRat& c) : num_(c) {}

    // r1^a r2^b with possibly negative exponents
    static RadialRational monomial(int a, int b, const BigRat& c = 1);
    static RadialRational r(int b) { return monomial(b == 1 ? 1 : 0, b == 2 ? 1 : 0); }

    const BivarPoly& numerator() const { return num_; }
    const BigRat& denominator_constant() const { return den_const_; }
    int multiplicity(int f) const { return mult_[f]; }
    BivarPoly denominator() const;

    bool is_zero() const { return num_.is_zero(); }
    RadialRational inverse() const;
    RadialRational pow(int e) const;
    // (num, den) cleared against a prescribed denominator: returns num * (target / den)
    // when that is a polynomial.
    std::optional<BivarPoly> times_to_polynomial(const RadialRational& target_den) const;

    RadicalScalar eval(int k1, int k2) const;
    double eval_double(double r1, double r2) const;
    BigRat eval_rational(const BigRat& r1, const BigRat& r2) const;
    std::string to_string() const;

    RadialRational& operator+=(const RadialRational& o);
    RadialRational& operator-=(const RadialRational& o) { return *this += -o; }
    RadialRational& operator*=(const RadialRational& o);
    RadialRational& operator/=(const RadialRational& o) { return *this *= o.inverse(); }
    friend RadialRational operator+(RadialRational a, const RadialRational& b) { return a += b; }
    friend RadialRational operator-(RadialRational a, const RadialRational& b) { return a -= b; }
    friend RadialRational operator*(RadialRational a, const RadialRational& b) { return a *= b; }
    friend RadialRational operator/(RadialRational a, const RadialRational& b) { return a /= b; }
    friend RadialRational operator-(RadialRational a) {
        a.num_ *= BigRat(-1);
        return a;
    }
    friend bool operator==(const RadialRational& a, const RadialRational& b) { return (a - b).is_zero(); }

private:
    void reduce();

    BivarPoly num_;
    BigRat den_const_ = 1;
    std::array<int, kFactors> mult_{};
};

}  // namespace shrinker
