#pragma once

#include "shrinker/poly2.hpp"
#include "shrinker/radical.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shrinker {

struct MonomialExp {
    std::vector<int> b1, b2;
};

// (1/|S^k(r)|) * integral of prod x_i^{b_i} over S^k(r) = coefficient * r^{|b|}
BigRat factor_moment_coeff(int k, const std::vector<int>& b);
// same, as a polynomial in r_factor
BivarPoly factor_moment(int k, const std::vector<int>& b, int factor = 1);
BivarPoly product_moment(const MonomialExp& m, int k1, int k2);
// value of product_moment at r_b = sqrt(2 k_b); always rational
BigRat product_moment_value(const MonomialExp& m, int k1, int k2);

struct SphintRow {
    std::string name;
    RadicalScalar printed;
    RadicalScalar computed;
    bool pass;
};
// The nine integrals of u = sum a_i x_i y_i, v_1 = sum a_i^2 x_i^2, v_2 = sum a_i^2 y_i^2.
std::vector<SphintRow> verify_sphint_table(int k1, int k2, const std::vector<BigRat>& a);

struct McEstimate {
    double mean;
    double std_error;
    double exact;  // product_moment at the shrinker radii, for convenience
};
class ThreadPool;
McEstimate mc_moment(const MonomialExp& m, int k1, int k2, long n_samples, std::uint64_t seed,
                     ThreadPool* pool = nullptr);

}  // namespace shrinker
