#include "shrinker/sqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace shrinker {

int sign_plus_root(const BigRat& a, const BigRat& b, const BigRat& n) {
    int sa = sgn(a), sb = n == 0 ? 0 : sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: the larger magnitude wins
    int cmp = ::cmp(a * a, b * b * n);
    return cmp > 0 ? sa : cmp < 0 ? sb : 0;
}

int Sqrt2Scalar::sign() const { return sign_plus_root(a_, b_, 2); }

double Sqrt2Scalar::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

Sqrt2Scalar& Sqrt2Scalar::operator*=(const Sqrt2Scalar& o) {
    BigRat a = a_ * o.a_ + 2 * b_ * o.b_;
    BigRat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Sqrt2Scalar Sqrt2Scalar::inverse() const {
    BigRat norm = a_ * a_ - 2 * b_ * b_;
    if (norm == 0) throw std::domain_error("Sqrt2Scalar: division by zero");
    return {a_ / norm, -b_ / norm};
}

std::string Sqrt2Scalar::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string root = b_ == 1 ? "sqrt2" : b_ == -1 ? "-sqrt2" : b_.get_str() + "*sqrt2";
    if (a_ == 0) return root;
    return "(" + a_.get_str() + (b_ > 0 ? " + " : " - ") +
           (abs(b_) == 1 ? std::string("sqrt2") : BigRat(abs(b_)).get_str() + "*sqrt2") + ")";
}

}  // namespace shrinker
