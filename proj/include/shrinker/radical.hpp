#pragma once

#include "shrinker/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shrinker {

// Q(r1, r2) with r_b = sqrt(2 k_b). Interned per (k1, k2); pointers stay valid.
struct RadicalField {
    int k1, k2;
    long m1, m2;     // squarefree parts of 2k1, 2k2
    BigInt c1, c2;   // 2k_b = c_b^2 m_b
    BigRat two_k1, two_k2;

    static const RadicalField& get(int k1, int k2);
};

// c00 + c10 r1 + c01 r2 + c11 r1 r2, kept canonical: components that are
// rationally dependent on the others are folded away, so equality is
// coefficientwise.
class RadicalScalar {
public:
    RadicalScalar(int k1, int k2, BigRat rational = 0);
    RadicalScalar(const RadicalField& f, BigRat rational = 0) : f_(&f), c_{std::move(rational), 0, 0, 0} {}
    RadicalScalar(const RadicalField& f, BigRat c00, BigRat c10, BigRat c01, BigRat c11);

    static RadicalScalar r1(const RadicalField& f) { return {f, 0, 1, 0, 0}; }
    static RadicalScalar r2(const RadicalField& f) { return {f, 0, 0, 1, 0}; }
    static RadicalScalar r(const RadicalField& f, int b) { return b == 1 ? r1(f) : r2(f); }

    const RadicalField& field() const { return *f_; }
    int k1() const { return f_->k1; }
    int k2() const { return f_->k2; }
    const BigRat& c00() const { return c_[0]; }
    const BigRat& c10() const { return c_[1]; }
    const BigRat& c01() const { return c_[2]; }
    const BigRat& c11() const { return c_[3]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    int sign() const;
    double to_double() const;
    RadicalScalar inverse() const;
    RadicalScalar pow(int e) const;

    // "a + b*r1 + c*r2 + d*r1*r2" in the fixed basis
    std::string to_string() const;
    // same value written with explicit square roots, e.g. "5/3*sqrt(2)"
    std::string to_surd_string() const;
    std::vector<std::pair<BigRat, long>> surd_terms() const;

    RadicalScalar& operator+=(const RadicalScalar& o);
    RadicalScalar& operator-=(const RadicalScalar& o);
    RadicalScalar& operator*=(const RadicalScalar& o);
    RadicalScalar& operator*=(const BigRat& q);
    RadicalScalar& operator+=(const BigRat& q) { c_[0] += q; return *this; }

    friend RadicalScalar operator+(RadicalScalar x, const RadicalScalar& y) { return x += y; }
    friend RadicalScalar operator-(RadicalScalar x, const RadicalScalar& y) { return x -= y; }
    friend RadicalScalar operator*(RadicalScalar x, const RadicalScalar& y) { return x *= y; }
    friend RadicalScalar operator/(const RadicalScalar& x, const RadicalScalar& y) { return x * y.inverse(); }
    friend RadicalScalar operator*(RadicalScalar x, const BigRat& q) { return x *= q; }
    friend RadicalScalar operator*(const BigRat& q, RadicalScalar x) { return x *= q; }
    friend RadicalScalar operator+(RadicalScalar x, const BigRat& q) { return x += q; }
    friend RadicalScalar operator-(RadicalScalar x, const BigRat& q) { return x += BigRat(-q); }
    friend RadicalScalar operator/(RadicalScalar x, const BigRat& q) { return x *= BigRat(1 / q); }
    friend RadicalScalar operator-(RadicalScalar x) {
        for (auto& c : x.c_) c = -c;
        return x;
    }
    friend bool operator==(const RadicalScalar& x, const RadicalScalar& y) {
        return x.f_ == y.f_ && x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] && x.c_[2] == y.c_[2] &&
               x.c_[3] == y.c_[3];
    }
    friend bool operator<(const RadicalScalar& x, const RadicalScalar& y) { return (x - y).sign() < 0; }

private:
    void check_same(const RadicalScalar& o) const;
    void canonicalize();

    const RadicalField* f_;
    BigRat c_[4];
};

}  // namespace shrinker
