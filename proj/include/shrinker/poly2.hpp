#pragma once

#include "shrinker/rational.hpp"
#include "shrinker/sqrt2.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shrinker {

using Exp2 = std::pair<int, int>;

// Graded order: higher total degree first, then higher first exponent.
struct GradedDesc {
    bool operator()(const Exp2& a, const Exp2& b) const {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    }
};

inline int sign_of(const BigRat& q) { return sgn(q); }
inline int sign_of(const Sqrt2Scalar& x) { return x.sign(); }
inline bool is_zero_coeff(const BigRat& q) { return q == 0; }
inline bool is_zero_coeff(const Sqrt2Scalar& x) { return x.is_zero(); }
inline std::string coeff_text(const BigRat& q) { return q.get_str(); }
inline std::string coeff_text(const Sqrt2Scalar& x) { return x.to_string(); }

// Sparse polynomial in two variables; no zero coefficients are stored.
template <class C>
class Poly2 {
public:
    using Terms = std::map<Exp2, C, GradedDesc>;

    Poly2() = default;
    Poly2(C c) { add_term({0, 0}, std::move(c)); }
    Poly2(long c) : Poly2(C(c)) {}

    static Poly2 monomial(int a, int b, C c = C(1)) {
        Poly2 p;
        p.add_term({a, b}, std::move(c));
        return p;
    }
    static Poly2 var(int which) { return which == 1 ? monomial(1, 0) : monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    C coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? C(0) : it->second;
    }
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.first + terms_.begin()->first.second; }
    std::pair<Exp2, C> leading() const { return *terms_.begin(); }

    void add_term(Exp2 e, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly2& operator*=(const C& s) {
        if (is_zero_coeff(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(Poly2 a) { return a *= C(-1); }
    friend Poly2 operator*(Poly2 a, const C& s) { return a *= s; }
    friend Poly2 operator*(const C& s, Poly2 a) { return a *= s; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return out;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

    Poly2 pow(unsigned e) const {
        Poly2 out(C(1)), base = *this;
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    // p(r2, r1)
    Poly2 swapped() const {
        Poly2 out;
        for (const auto& [e, c] : terms_) out.add_term({e.second, e.first}, c);
        return out;
    }

    // Evaluate with caller-provided power tables, e.g. at radicals or doubles.
    template <class V>
    V evaluate(const V& x, const V& y, const V& one) const {
        V out = one - one;
        for (const auto& [e, c] : terms_) {
            V t = one;
            for (int i = 0; i < e.first; ++i) t = t * x;
            for (int i = 0; i < e.second; ++i) t = t * y;
            out = out + t * c;
        }
        return out;
    }

    std::string to_string(const char* x = "r1", const char* y = "r2") const;

private:
    Terms terms_;
};

using BivarPoly = Poly2<BigRat>;
using ShiftedPoly = Poly2<Sqrt2Scalar>;

template <class C>
std::string Poly2<C>::to_string(const char* x, const char* y) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string ct = coeff_text(c);
        bool neg = !ct.empty() && ct[0] == '-';
        if (neg) ct.erase(0, 1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = ct == "1" && (e.first || e.second);
        std::string body = unit ? "" : ct;
        auto factor = [&](const char* name, int p) {
            if (!p) return;
            if (!body.empty()) body += " * ";
            body += name;
            if (p > 1) body += "^" + std::to_string(p);
        };
        factor(x, e.first);
        factor(y, e.second);
        out += body;
        first = false;
    }
    return out;
}

// Exact quotient p / q if q divides p, else nullopt.
std::optional<BivarPoly> divide_exact(const BivarPoly& p, const BivarPoly& q);

// Exact p(r1, r2) at r_b = sqrt(2 k_b).
class RadicalScalar;
RadicalScalar radical_eval(const BivarPoly& p, int k1, int k2);
double eval_double(const BivarPoly& p, double r1, double r2);
double eval_double(const ShiftedPoly& p, double s1, double s2);
BigRat eval_rational(const BivarPoly& p, const BigRat& r1, const BigRat& r2);

// p(s1 + sqrt2, s2 + sqrt2) and its inverse substitution.
ShiftedPoly shift_sqrt2(const BivarPoly& p);
Poly2<Sqrt2Scalar> unshift_sqrt2(const ShiftedPoly& p);
std::optional<BivarPoly> rational_part_if_exact(const Poly2<Sqrt2Scalar>& p);

template <class C>
struct SignReport {
    std::vector<std::pair<Exp2, C>> negatives;
    C min_coefficient{};
    bool nonnegative() const { return negatives.empty(); }
};

template <class C>
SignReport<C> sign_report(const Poly2<C>& p) {
    SignReport<C> rep;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (sign_of(c) < 0) rep.negatives.emplace_back(e, c);
        if (first || sign_of(c - rep.min_coefficient) < 0) rep.min_coefficient = c;
        first = false;
    }
    return rep;
}

BivarPoly parse_bivar(std::string_view text);
ShiftedPoly parse_shifted(std::string_view text);

}  // namespace shrinker
