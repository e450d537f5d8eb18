#pragma once

#include "shrinker/radical.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shrinker {

inline constexpr int kMaxVars = 24;
using Mono = std::array<std::uint8_t, kMaxVars>;

// Polynomial in x_1..x_{k1+1}, y_1..y_{k2+1} restricted to
// S^{k1}(r1) x S^{k2}(r2), r_b = sqrt(2 k_b). Arithmetic works on ambient
// representatives; equality and zero tests go through normal_form(), which
// eliminates x_{k1+1}^2 and y_{k2+1}^2 with the sphere relations.
class SpherePoly {
public:
    using Terms = std::map<Mono, RadicalScalar>;

    SpherePoly(int k1, int k2);
    explicit SpherePoly(const RadicalField& f) : f_(&f) {}
    SpherePoly(const RadicalField& f, const RadicalScalar& c);

    // factor 1 -> x_{i+1}, factor 2 -> y_{i+1}; i is zero based
    static SpherePoly coord(const RadicalField& f, int factor, int i);
    static SpherePoly constant(const RadicalField& f, const BigRat& c) { return SpherePoly(f, RadicalScalar(f, c)); }

    const RadicalField& field() const { return *f_; }
    int k1() const { return f_->k1; }
    int k2() const { return f_->k2; }
    int nvars() const { return f_->k1 + f_->k2 + 2; }
    // variable index range [first, last) of a factor
    int var_begin(int factor) const { return factor == 1 ? 0 : f_->k1 + 1; }
    int var_end(int factor) const { return factor == 1 ? f_->k1 + 1 : nvars(); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool has_zero_representative() const { return terms_.empty(); }

    void add_term(const Mono& m, const RadicalScalar& c);

    SpherePoly& operator+=(const SpherePoly& o);
    SpherePoly& operator-=(const SpherePoly& o);
    SpherePoly& operator*=(const RadicalScalar& c);
    SpherePoly& operator*=(const BigRat& c);
    friend SpherePoly operator+(SpherePoly a, const SpherePoly& b) { return a += b; }
    friend SpherePoly operator-(SpherePoly a, const SpherePoly& b) { return a -= b; }
    friend SpherePoly operator-(SpherePoly a) { return a *= BigRat(-1); }
    friend SpherePoly operator*(SpherePoly a, const RadicalScalar& c) { return a *= c; }
    friend SpherePoly operator*(const RadicalScalar& c, SpherePoly a) { return a *= c; }
    friend SpherePoly operator*(SpherePoly a, const BigRat& c) { return a *= c; }
    friend SpherePoly operator*(const BigRat& c, SpherePoly a) { return a *= c; }
    friend SpherePoly operator*(const SpherePoly& a, const SpherePoly& b);
    SpherePoly& operator*=(const SpherePoly& o) { return *this = *this * o; }

    SpherePoly normal_form() const;
    bool is_zero() const { return normal_form().terms_.empty(); }
    friend bool operator==(const SpherePoly& a, const SpherePoly& b) { return (a - b).is_zero(); }

    SpherePoly partial(int var) const;
    // E_b p = sum over factor-b variables of x_i d_i p
    SpherePoly euler(int factor) const;
    int max_degree() const;

    // normalized integral over the product (measure of the product = 1)
    RadicalScalar integrate() const;
    double evaluate(const std::vector<double>& point) const;

    std::string to_string() const;
    static SpherePoly parse(const RadicalField& f, std::string_view text);

private:
    const RadicalField* f_;
    Terms terms_;
};

struct NormalField {
    SpherePoly u1, u2;
    std::vector<SpherePoly> z;

    NormalField(const RadicalField& f, int n_flat = 0) : u1(f), u2(f), z(n_flat, SpherePoly(f)) {}
    NormalField(SpherePoly a, SpherePoly b, std::vector<SpherePoly> flat = {})
        : u1(std::move(a)), u2(std::move(b)), z(std::move(flat)) {}

    const RadicalField& field() const { return u1.field(); }
    const SpherePoly& u(int b) const { return b == 1 ? u1 : u2; }
    SpherePoly& u(int b) { return b == 1 ? u1 : u2; }
    // ambient dimension N = k1 + k2 + 2 + (number of flat normals)
    int ambient_dim() const { return u1.nvars() + static_cast<int>(z.size()); }
    bool has_flat_part() const;
    bool is_zero() const;

    NormalField& operator+=(const NormalField& o);
    NormalField& operator-=(const NormalField& o);
    NormalField& operator*=(const RadicalScalar& c);
    friend NormalField operator+(NormalField a, const NormalField& b) { return a += b; }
    friend NormalField operator-(NormalField a, const NormalField& b) { return a -= b; }
    friend NormalField operator*(NormalField a, const RadicalScalar& c) { return a *= c; }
    friend NormalField operator*(const RadicalScalar& c, NormalField a) { return a *= c; }
    friend bool operator==(const NormalField& a, const NormalField& b) { return (a - b).is_zero(); }
};

}  // namespace shrinker
