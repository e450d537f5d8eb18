#pragma once

#include "shrinker/rational.hpp"

#include <string>

namespace shrinker {

// a + b*sqrt(2)
class Sqrt2Scalar {
public:
    Sqrt2Scalar() = default;
    Sqrt2Scalar(BigRat a, BigRat b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    Sqrt2Scalar(long a) : a_(a) {}

    static Sqrt2Scalar sqrt2() { return {0, 1}; }

    const BigRat& rational() const { return a_; }
    const BigRat& sqrt2_coeff() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    int sign() const;
    double to_double() const;
    std::string to_string() const;
    Sqrt2Scalar inverse() const;

    Sqrt2Scalar& operator+=(const Sqrt2Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Sqrt2Scalar& operator-=(const Sqrt2Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Sqrt2Scalar& operator*=(const Sqrt2Scalar& o);

    friend Sqrt2Scalar operator+(Sqrt2Scalar x, const Sqrt2Scalar& y) { return x += y; }
    friend Sqrt2Scalar operator-(Sqrt2Scalar x, const Sqrt2Scalar& y) { return x -= y; }
    friend Sqrt2Scalar operator*(Sqrt2Scalar x, const Sqrt2Scalar& y) { return x *= y; }
    friend Sqrt2Scalar operator/(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return x * y.inverse(); }
    friend Sqrt2Scalar operator-(const Sqrt2Scalar& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const Sqrt2Scalar&, const Sqrt2Scalar&) = default;
    friend bool operator<(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return (x - y).sign() <= 0; }

private:
    BigRat a_, b_;
};

// sign(a + b*sqrt(n)) for rationals a, b and n >= 0, exactly.
int sign_plus_root(const BigRat& a, const BigRat& b, const BigRat& n);

}  // namespace shrinker
