#include "shrinker/radical.hpp"
#include "shrinker/sqrt2.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shrinker {

namespace {

void squarefree_split(long n, long& m, BigInt& c) {
    m = 1;
    c = 1;
    for (long p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            c *= p;
        }
    }
    m = n;
}

}  // namespace

const RadicalField& RadicalField::get(int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("RadicalField: k1, k2 must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<RadicalField>> table;
    std::lock_guard lock(mu);
    auto& slot = table[{k1, k2}];
    if (!slot) {
        slot = std::make_unique<RadicalField>();
        slot->k1 = k1;
        slot->k2 = k2;
        squarefree_split(2L * k1, slot->m1, slot->c1);
        squarefree_split(2L * k2, slot->m2, slot->c2);
        slot->two_k1 = 2 * k1;
        slot->two_k2 = 2 * k2;
    }
    return *slot;
}

RadicalScalar::RadicalScalar(int k1, int k2, BigRat rational)
    : RadicalScalar(RadicalField::get(k1, k2), std::move(rational)) {}

RadicalScalar::RadicalScalar(const RadicalField& f, BigRat c00, BigRat c10, BigRat c01, BigRat c11)
    : f_(&f), c_{std::move(c00), std::move(c10), std::move(c01), std::move(c11)} {
    canonicalize();
}

void RadicalScalar::canonicalize() {
    const auto& f = *f_;
    if (f.m1 == 1) {  // r1 = c1
        c_[0] += c_[1] * f.c1;
        c_[2] += c_[3] * f.c1;
        c_[1] = 0;
        c_[3] = 0;
    }
    if (f.m2 == 1) {  // r2 = c2
        c_[0] += c_[2] * f.c2;
        c_[1] += c_[3] * f.c2;
        c_[2] = 0;
        c_[3] = 0;
    }
    if (f.m1 != 1 && f.m1 == f.m2) {  // r2 = (c2/c1) r1, r1 r2 = c1 c2 m
        c_[1] += c_[2] * rat(f.c2, f.c1);
        c_[0] += c_[3] * BigRat(f.c1 * f.c2 * f.m1);
        c_[2] = 0;
        c_[3] = 0;
    }
}

void RadicalScalar::check_same(const RadicalScalar& o) const {
    if (f_ != o.f_) throw std::invalid_argument("RadicalScalar: mixing fields with different (k1, k2)");
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
    check_same(o);
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
    check_same(o);
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

RadicalScalar& RadicalScalar::operator*=(const BigRat& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
    check_same(o);
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        BigRat q = c_[0];
        *this = o;
        return *this *= q;
    }
    const BigRat& s1 = f_->two_k1;
    const BigRat& s2 = f_->two_k2;
    const auto& [a0, a1, a2, a3] = c_;
    const auto& [b0, b1, b2, b3] = o.c_;
    // r1^2 = s1, r2^2 = s2
    BigRat n0 = a0 * b0 + s1 * a1 * b1 + s2 * a2 * b2 + s1 * s2 * a3 * b3;
    BigRat n1 = a0 * b1 + a1 * b0 + s2 * (a2 * b3 + a3 * b2);
    BigRat n2 = a0 * b2 + a2 * b0 + s1 * (a1 * b3 + a3 * b1);
    BigRat n3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    c_[0] = std::move(n0);
    c_[1] = std::move(n1);
    c_[2] = std::move(n2);
    c_[3] = std::move(n3);
    canonicalize();
    return *this;
}

int RadicalScalar::sign() const {
    // x = P + Q r2 with P = c00 + c10 r1, Q = c01 + c11 r1
    const BigRat& s1 = f_->two_k1;
    const BigRat& s2 = f_->two_k2;
    int sp = sign_plus_root(c_[0], c_[1], s1);
    int sq = sign_plus_root(c_[2], c_[3], s1);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // compare P^2 with s2 Q^2 inside Q(r1)
    BigRat d0 = c_[0] * c_[0] + s1 * c_[1] * c_[1] - s2 * (c_[2] * c_[2] + s1 * c_[3] * c_[3]);
    BigRat d1 = 2 * c_[0] * c_[1] - 2 * s2 * c_[2] * c_[3];
    int sd = sign_plus_root(d0, d1, s1);
    return sd > 0 ? sp : sd < 0 ? sq : 0;
}

double RadicalScalar::to_double() const {
    double r1 = std::sqrt(2.0 * f_->k1), r2 = std::sqrt(2.0 * f_->k2);
    return c_[0].get_d() + c_[1].get_d() * r1 + c_[2].get_d() * r2 + c_[3].get_d() * r1 * r2;
}

RadicalScalar RadicalScalar::inverse() const {
    if (is_zero()) throw std::domain_error("RadicalScalar: division by zero");
    const BigRat& s1 = f_->two_k1;
    const BigRat& s2 = f_->two_k2;
    auto invert_r1_part = [&](const BigRat& a, const BigRat& b) {
        BigRat norm = a * a - s1 * b * b;
        if (norm == 0) throw std::domain_error("RadicalScalar: non-invertible element");
        return RadicalScalar(*f_, a / norm, -b / norm, 0, 0);
    };
    if (c_[2] == 0 && c_[3] == 0) return invert_r1_part(c_[0], c_[1]);
    // 1/(P + Q r2) = (P - Q r2) / (P^2 - s2 Q^2)
    BigRat d0 = c_[0] * c_[0] + s1 * c_[1] * c_[1] - s2 * (c_[2] * c_[2] + s1 * c_[3] * c_[3]);
    BigRat d1 = 2 * c_[0] * c_[1] - 2 * s2 * c_[2] * c_[3];
    RadicalScalar conj(*f_, c_[0], c_[1], -c_[2], -c_[3]);
    return conj * invert_r1_part(d0, d1);
}

RadicalScalar RadicalScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RadicalScalar out(*f_, 1), base = *this;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string RadicalScalar::to_string() const {
    static const char* names[4] = {"", "r1", "r2", "r1*r2"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        BigRat mag = abs(c_[i]);
        os << (c_[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << names[i];
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<std::pair<BigRat, long>> RadicalScalar::surd_terms() const {
    const auto& f = *f_;
    std::map<long, BigRat> acc;
    auto add = [&](const BigRat& coeff, BigInt scale, long m) {
        if (coeff == 0) return;
        acc[m] += coeff * BigRat(scale);
    };
    add(c_[0], 1, 1);
    add(c_[1], f.c1, f.m1);
    add(c_[2], f.c2, f.m2);
    if (c_[3] != 0) {
        long g = std::gcd(f.m1, f.m2);
        add(c_[3], f.c1 * f.c2 * g, f.m1 / g * (f.m2 / g));
    }
    std::vector<std::pair<BigRat, long>> out;
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(c, m);
    return out;
}

std::string RadicalScalar::to_surd_string() const {
    auto terms = surd_terms();
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [c, m] : terms) {
        BigRat mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (m == 1) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "sqrt(" << m << ")";
        }
        first = false;
    }
    return os.str();
}

}  // namespace shrinker
