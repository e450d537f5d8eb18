#include "shrinker/moments.hpp"
#include "shrinker/parallel.hpp"
#include "shrinker/simd.hpp"
#include "shrinker/sphere_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace shrinker {

BigRat factor_moment_coeff(int k, const std::vector<int>& b) {
    if (k < 1) throw std::invalid_argument("factor_moment: k must be >= 1");
    if (static_cast<int>(b.size()) > k + 1) throw std::invalid_argument("factor_moment: too many exponents");
    int total = 0;
    for (int e : b) {
        if (e < 0) throw std::invalid_argument("factor_moment: negative exponent");
        if (e & 1) return 0;
        total += e;
    }
    BigInt num = 1, den = 1;
    for (int e : b) num *= double_factorial(e - 1);
    for (int j = 0; j < total / 2; ++j) den *= k + 1 + 2 * j;
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BivarPoly factor_moment(int k, const std::vector<int>& b, int factor) {
    int total = 0;
    for (int e : b) total += std::max(e, 0);
    BigRat c = factor_moment_coeff(k, b);
    return factor == 1 ? BivarPoly::monomial(total, 0, c) : BivarPoly::monomial(0, total, c);
}

namespace {

void check_dims(const MonomialExp& m, int k1, int k2) {
    if (static_cast<int>(m.b1.size()) != k1 + 1 || static_cast<int>(m.b2.size()) != k2 + 1)
        throw std::invalid_argument("product_moment: exponent lists must have lengths k1+1 and k2+1");
}

}  // namespace

BivarPoly product_moment(const MonomialExp& m, int k1, int k2) {
    check_dims(m, k1, k2);
    return factor_moment(k1, m.b1, 1) * factor_moment(k2, m.b2, 2);
}

BigRat product_moment_value(const MonomialExp& m, int k1, int k2) {
    check_dims(m, k1, k2);
    // cache on sorted exponents; moments are permutation invariant
    thread_local std::map<std::pair<int, std::vector<int>>, BigRat> cache;
    auto one = [&](int k, std::vector<int> b) -> BigRat {
        int total = 0;
        for (int e : b) {
            if (e & 1) return 0;
            total += e;
        }
        std::sort(b.begin(), b.end());
        auto key = std::make_pair(k, std::move(b));
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        BigRat v = factor_moment_coeff(k, key.second) * pow(BigRat(2 * k), total / 2);
        cache.emplace(std::move(key), v);
        return v;
    };
    BigRat a = one(k1, m.b1);
    if (a == 0) return 0;
    return a * one(k2, m.b2);
}

std::vector<SphintRow> verify_sphint_table(int k1, int k2, const std::vector<BigRat>& a) {
    if (static_cast<int>(a.size()) > std::min(k1, k2) + 1)
        throw std::invalid_argument("verify_sphint_table: a has more than min(k1,k2)+1 entries");
    const auto& f = RadicalField::get(k1, k2);
    SpherePoly u(f), v1(f), v2(f);
    BigRat S = 0, S4 = 0, P = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        SpherePoly x = SpherePoly::coord(f, 1, i), y = SpherePoly::coord(f, 2, i);
        u += x * y * a[i];
        v1 += x * x * BigRat(a[i] * a[i]);
        v2 += y * y * BigRat(a[i] * a[i]);
        S += a[i] * a[i];
        S4 += a[i] * a[i] * a[i] * a[i];
        for (std::size_t j = i + 1; j < a.size(); ++j) P += a[i] * a[i] * a[j] * a[j];
    }
    // printed closed forms, r_b^2 = 2 k_b
    BigRat R1 = 2 * k1, R2 = 2 * k2;
    BigRat p1 = k1 + 1, p2 = k2 + 1, q1 = k1 + 3, q2 = k2 + 3;
    BigRat quart = 3 * S4 + 2 * P;
    std::vector<std::pair<std::string, std::pair<BigRat, SpherePoly>>> rows = {
        {"v1", {R1 / p1 * S, v1}},
        {"v2", {R2 / p2 * S, v2}},
        {"v1^2", {R1 * R1 / (p1 * q1) * quart, v1 * v1}},
        {"v2^2", {R2 * R2 / (p2 * q2) * quart, v2 * v2}},
        {"v1*v2", {R1 * R2 / (p1 * p2) * S * S, v1 * v2}},
        {"u^2", {R1 * R2 / (p1 * p2) * S, u * u}},
        {"u^2*v1", {R1 * R1 * R2 / (p1 * q1 * p2) * quart, u * u * v1}},
        {"u^2*v2", {R1 * R2 * R2 / (p1 * p2 * q2) * quart, u * u * v2}},
        {"u^4", {R1 * R1 * R2 * R2 / (p1 * q1 * p2 * q2) * (9 * S4 + 6 * P), u * u * u * u}},
    };
    std::vector<SphintRow> out;
    for (auto& [name, pc] : rows) {
        RadicalScalar printed(f, pc.first);
        RadicalScalar computed = pc.second.integrate();
        out.push_back({name, printed, computed, printed == computed});
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

McEstimate mc_moment(const MonomialExp& m, int k1, int k2, long n_samples, std::uint64_t seed, ThreadPool* pool) {
    check_dims(m, k1, k2);
    if (n_samples < 1) throw std::invalid_argument("mc_moment: n_samples must be >= 1");
    constexpr long kBlock = 1 << 14;
    const long blocks = (n_samples + kBlock - 1) / kBlock;
    const std::size_t d1 = k1 + 1, d2 = k2 + 1;
    const double r1 = std::sqrt(2.0 * k1), r2 = std::sqrt(2.0 * k2);
    std::vector<int> exps(m.b1);
    exps.insert(exps.end(), m.b2.begin(), m.b2.end());
    std::vector<double> sums(blocks), sumsqs(blocks);
    const auto& kern = simd::active_kernels();

    parallel_for(pool, blocks, [&](std::size_t blk) {
        const long n = std::min<long>(kBlock, n_samples - static_cast<long>(blk) * kBlock);
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(blk + 1)));
        std::normal_distribution<double> gauss;
        std::vector<double> data((d1 + d2) * n);
        for (auto& x : data) x = gauss(rng);
        kern.normalize_rows(data.data(), n, d1, r1);
        kern.normalize_rows(data.data() + d1 * n, n, d2, r2);
        double s = 0, q = 0;
        kern.monomial_moments(data.data(), n, exps.data(), d1 + d2, &s, &q);
        sums[blk] = s;
        sumsqs[blk] = q;
    });
    double s = pairwise_sum(sums.data(), sums.size());
    double q = pairwise_sum(sumsqs.data(), sumsqs.size());
    double mean = s / n_samples;
    double var = n_samples > 1 ? std::max(0.0, (q - n_samples * mean * mean) / (n_samples - 1)) : 0.0;
    return {mean, std::sqrt(var / n_samples), product_moment_value(m, k1, k2).get_d()};
}

}  // namespace shrinker
