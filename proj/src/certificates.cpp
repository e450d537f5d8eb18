#include "shrinker/certificates.hpp"
#include "shrinker/obstruction.hpp"

#include <stdexcept>

namespace shrinker {

namespace {

template <class C>
C power(const C& x, long e) {
    C out(1);
    for (long i = 0; i < e; ++i) out = C(out * x);
    return out;
}

template <class C>
AmGmCheck check_generic(const Certificate<C>& cert) {
    AmGmCheck chk;
    BigRat lam_sum = 0, ea = 0, eb = 0;
    bool nonneg = true;
    BigInt q = 1;
    for (const auto& t : cert.rhs) {
        if (t.lambda < 0 || sign_of(t.weight) < 0) nonneg = false;
        lam_sum += t.lambda;
        ea += t.lambda * t.mono.first;
        eb += t.lambda * t.mono.second;
        BigInt d = t.lambda.get_den();
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    }
    chk.exponents_ok = nonneg && lam_sum == 1 && ea == cert.lhs.first && eb == cert.lhs.second;
    if (!chk.exponents_ok) return chk;
    if (sign_of(cert.coeff) <= 0) {
        chk.weights_ok = true;
        return chk;
    }
    // c^q <= prod (w_i / lambda_i)^(lambda_i q)
    long qq = q.get_si();
    C rhs(1);
    for (const auto& t : cert.rhs) {
        if (t.lambda == 0) continue;
        BigRat p = t.lambda * BigRat(q);
        rhs = rhs * power<C>(C(t.weight * C(BigRat(1) / t.lambda)), mpz_class(p.get_num()).get_si());
    }
    chk.weights_ok = sign_of(C(rhs - power<C>(cert.coeff, qq))) >= 0;
    return chk;
}

RadialRational q_prefactor(long c, bool q0) {
    using R = RadialRational;
    R den = R(R::factor_poly(R::R1sqPlus2)) * R(R::factor_poly(R::R2sqPlus2)) * R(R::factor_poly(R::R2sqPlus6)) *
            R(R::factor_poly(R::Mixed));
    den = den * R(R::factor_poly(q0 ? R::R1sqPlus2 : R::R1sqPlus6));
    return R::monomial(2, 2, c) / den;
}

BivarPoly clear_prefactor(const RadialRational& q, const RadialRational& pre) {
    RadialRational p = q / pre;
    BivarPoly den = p.denominator();
    if (den.total_degree() != 0) throw std::logic_error("prefactor does not clear the denominator");
    return p.numerator() * (BigRat(1) / den.coeff(0, 0));
}

using C1 = Certificate<BigRat>;
using C2 = Certificate<Sqrt2Scalar>;

}  // namespace

AmGmCheck check_am_gm(const Certificate<BigRat>& c) { return check_generic(c); }
AmGmCheck check_am_gm(const Certificate<Sqrt2Scalar>& c) { return check_generic(c); }

const BivarPoly& printed_P4() {
    static const BivarPoly p = parse_bivar(
        "r1^9*r2^3 + r2^3*r1^9 + 4/3*(r1^8*r2^4 + r1^4*r2^8) - 1/3*(r1^7*r2^5 + r1^5*r2^7) + 4/3*r1^6*r2^6"
        " + 6*(r1^9*r2 + r1*r2^9) + 10*(r1^8*r2^2 + r1^2*r2^8) + 2/3*(r1^7*r2^3 + r1^3*r2^7)"
        " + 28/3*(r1^6*r2^4 + r1^4*r2^6) + 12*r1^5*r2^5"
        " + 4*(r1^8 + r2^8) + 32/3*(r1^7*r2 + r1*r2^7) - 4*(r1^6*r2^2 + r1^2*r2^6)"
        " + 112/3*(r1^5*r2^3 + r1^3*r2^5) - 32*r1^4*r2^4"
        " + 16*(r1^5*r2 + r1*r2^5) - 32*(r1^4*r2^2 + r1^2*r2^4) + 32*r1^3*r2^3");
    return p;
}

const BivarPoly& printed_P2() {
    static const BivarPoly p = parse_bivar(
        "r1^8*r2^2 + r1^2*r2^8 - 7/3*(r1^7*r2^3 + r1^3*r2^7) - 2*(r1^6*r2^4 + r1^4*r2^6) + 20/3*r1^5*r2^5"
        " + 2*(r1^8 + r2^8) - 50/3*(r1^7*r2 + r1*r2^7) - 18*(r1^6*r2^2 + r1^2*r2^6)"
        " + 38/3*(r1^5*r2^3 + r1^3*r2^5) - 24*r1^4*r2^4"
        " - 16*(r1^5*r2 + r1*r2^5) + 32*(r1^4*r2^2 + r1^2*r2^4) - 32*r1^3*r2^3");
    return p;
}

const BivarPoly& printed_P0() {
    static const BivarPoly p = parse_bivar(
        "3*r1^8*r2^2 + 11*r1^2*r2^8 - r1^7*r2^3 - 9*r1^3*r2^7 + 2*r1^6*r2^4 + 2*r1^4*r2^6 + 18*r1^5*r2^5"
        " + 6*r1*r2^9 + 6*r1^8 - 14*r1^7*r2 - 6*r1*r2^7 - 6*r1^6*r2^2 - 22*r1^2*r2^6 + 34*r1^5*r2^3"
        " + 42*r1^3*r2^5 - 40*r1^4*r2^4");
    return p;
}

// Index slips such as s1^3*s1^7 are kept as printed.
const ShiftedPoly& printed_P0_shifted() {
    static const ShiftedPoly p = parse_shifted(
        "1024 + 3*s1^8*s2^2 - s1^7*s2^3 + 2*s1^6*s2^4 + 18*s1^5*s2^5 + 2*s1^4*s2^6 - 9*s1^3*s1^7"
        " + 11*s1^2*s2^8 + 6*s1*s2^9"
        " + 6*sqrt2*s1^8*s2 + 21*sqrt2*s1^7*s2^2 + sqrt2*s1^6*s2^3 + 102*sqrt2*s2^5*s2^4 + 102*sqrt2*s1^4*s2^5"
        " - 55*sqrt2*s2^3*s2^6 + 61*sqrt2*s1^2*s2^7 + 76*sqrt2*s1*s2^8 + 6*sqrt2*s2^9"
        " + 12*s1^8 + 76*s1^7*s2 + 144*s1^6*s2^2 + 448*s1^5*s2^3 + 908*s1^4*s2^4 + 120*s1^3*s2^5"
        " + 240*s1^2*s2^6 + 724*s1*s2^7 + 136*s2^8"
        " + 80*sqrt2*s1^7 + 200*sqrt2*s1^6*s2 + 780*sqrt2*s1^5*s2^2 + 2060*sqrt2*s1^4*s2^3"
        " + 1540*sqrt2*s1^3*s2^4 + 596*sqrt2*s1^2*s2^5"
        " + 1792*sqrt2*s1*s2^6 + 632*sqrt2*s2^7 + 444*s1^6 + 1116*s1^5*s2 + 5220*s1^4*s2^2 + 7320*s1^3*s2^3"
        " + 3860*s1^2*s2^4 + 5708*s1*s2^5 + 3212*s2^6 + 788*sqrt2*s1^5 + 2948*sqrt2*s1^4*s2"
        " + 8856*sqrt2*s1^3*s2^2"
        " + 7640*sqrt2*s1^2*s2^3 + 6932*sqrt2*s1*s2^4 + 5092*sqrt2*s2^5 + 2256*s1^4 + 9648*s1^3*s2"
        " + 17056*s1^2*s2^2"
        " + 13936*s1*s2^3 + 10864*s2^4 + 2608*sqrt2*s1^3 + 9104*sqrt2*s1^2*s2 + 10832*sqrt2*s1*s2^2"
        " + 8176*sqrt2*s2^3"
        " + 4208*s1^2 + 10016*s1*s2 + 8816*s2^2 + 2048*sqrt2*s1 + 3072*sqrt2*s2");
    return p;
}

AppendixPolys rebuild_appendix_polys(D2Variant variant) {
    auto [Q4, Q2] = q4_q2_symbolic(variant);
    using R = RadialRational;
    R Q0 = Q4 * R(2) / R(R::factor_poly(R::R1sqPlus2)) + Q2;
    AppendixPolys out;
    // the printed P4, P2 carry a factor 1/3 relative to 144 = 48 * 3
    out.P4 = clear_prefactor(Q4, q_prefactor(144, false));
    out.P2 = clear_prefactor(Q2, q_prefactor(144, false));
    out.P0 = clear_prefactor(Q0, q_prefactor(48, true));
    out.P0_shifted = shift_sqrt2(out.P0);
    out.diff_P4 = diff_polys(printed_P4(), out.P4);
    out.diff_P2 = diff_polys(printed_P2(), out.P2);
    out.diff_P0 = diff_polys(printed_P0(), out.P0);
    out.diff_P0_shifted = diff_polys(printed_P0_shifted(), out.P0_shifted);
    return out;
}

std::vector<Certificate<BigRat>> claim1_printed_certificates() {
    const BigRat h(1, 2);
    std::vector<C1> v = {
        {"1/3 r1^7 r2^5 <= 1/6 r1^6 r2^6 + 1/6 r1^8 r2^4", BigRat(1, 3), {7, 5},
         {{BigRat(1, 6), {6, 6}, h}, {BigRat(1, 6), {8, 4}, h}}},
        {"4 r1^6 r2^2 <= 2 r1^4 r2^4 + 2 r1^8", 4, {6, 2}, {{2, {4, 4}, h}, {2, {8, 0}, h}}},
        {"32 r1^4 r2^2 <= 16 r1^3 r2^3 + 16 r1^5 r2", 32, {4, 2}, {{16, {3, 3}, h}, {16, {5, 1}, h}}},
    };
    for (int i = 0; i < 3; ++i) v.push_back(v[i].swapped());
    return v;
}

std::vector<Certificate<BigRat>> claim1_repaired_certificates() {
    const BigRat h(1, 2);
    std::vector<C1> v = {
        {"1/3 r1^7 r2^5 <= 1/6 r1^6 r2^6 + 1/6 r1^8 r2^4", BigRat(1, 3), {7, 5},
         {{BigRat(1, 6), {6, 6}, h}, {BigRat(1, 6), {8, 4}, h}}},
        {"4 r1^6 r2^2 <= 2 r1^7 r2 + 2 r1^5 r2^3", 4, {6, 2}, {{2, {7, 1}, h}, {2, {5, 3}, h}}},
        {"32 r1^4 r2^2 <= 16 r1^3 r2^3 + 16 r1^5 r2", 32, {4, 2}, {{16, {3, 3}, h}, {16, {5, 1}, h}}},
    };
    for (int i = 0; i < 3; ++i) v.push_back(v[i].swapped());
    v.push_back({"32 r1^4 r2^4 <= 16 r1^5 r2^3 + 16 r1^3 r2^5", 32, {4, 4}, {{16, {5, 3}, h}, {16, {3, 5}, h}}});
    return v;
}

namespace {
std::vector<C2> claim2_set(const BigRat& w_s2_8) {
    const BigRat h(1, 2);
    const Sqrt2Scalar half55(0, BigRat(55, 2));
    return {
        {"s1^7 s2^3 <= 1/2 s1^8 s2^2 + 1/2 s1^6 s2^4", Sqrt2Scalar(1), {7, 3},
         {{Sqrt2Scalar(h), {8, 2}, h}, {Sqrt2Scalar(h), {6, 4}, h}}},
        {"9 s1^3 s2^7 <= 2 s1^4 s2^6 + " + w_s2_8.get_str() + " s1^2 s2^8", Sqrt2Scalar(9), {3, 7},
         {{Sqrt2Scalar(2), {4, 6}, h}, {Sqrt2Scalar(w_s2_8), {2, 8}, h}}},
        {"55 sqrt2 s1^3 s2^6 <= 55 sqrt2/2 (s1^4 s2^5 + s1^2 s2^7)", Sqrt2Scalar(0, 55), {3, 6},
         {{half55, {4, 5}, h}, {half55, {2, 7}, h}}},
    };
}
}  // namespace

std::vector<Certificate<Sqrt2Scalar>> claim2_printed_certificates() { return claim2_set(BigRat(9, 4)); }
std::vector<Certificate<Sqrt2Scalar>> claim2_repaired_certificates() { return claim2_set(BigRat(81, 8)); }

Claim1Report verify_claim1(const AppendixPolys& polys) {
    Claim1Report r;
    r.direct = apply_certificates(polys.P4, "none", {});
    r.printed = apply_certificates(polys.P4, "printed", claim1_printed_certificates());
    r.repaired = apply_certificates(polys.P4, "repaired", claim1_repaired_certificates());
    return r;
}

Claim2Report verify_claim2(const AppendixPolys& polys) {
    // P0 >= 1024 on s >= 0: certify P0_shifted - 1024 >= 0 and report the constant separately
    const ShiftedPoly& p = polys.P0_shifted;
    Claim2Report r;
    r.direct = apply_certificates(p, "none", {});
    r.printed = apply_certificates(p, "printed", claim2_printed_certificates());
    r.repaired = apply_certificates(p, "repaired", claim2_repaired_certificates());
    r.constant_term = p.coeff(0, 0);
    r.coeff_s1_8_s2_2 = p.coeff(8, 2);
    return r;
}

GridReport grid_positivity(const BivarPoly& p, const BigRat& lo, const BigRat& hi, int resolution, ThreadPool* pool) {
    if (resolution < 2) throw std::invalid_argument("grid_positivity: resolution must be >= 2");
    const std::size_t n = static_cast<std::size_t>(resolution);
    std::vector<BigRat> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * BigRat(i) / BigRat(resolution - 1);
    std::vector<BigRat> row_min(n);
    std::vector<std::size_t> row_arg(n);
    parallel_for(pool, n, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            BigRat v = eval_rational(p, xs[i], xs[j]);
            if (j == 0 || v < row_min[i]) {
                row_min[i] = v;
                row_arg[i] = j;
            }
        }
    });
    GridReport rep{row_min[0], xs[0], xs[row_arg[0]], resolution * resolution};
    for (std::size_t i = 1; i < n; ++i)
        if (row_min[i] < rep.min_value) rep = {row_min[i], xs[i], xs[row_arg[i]], rep.points};
    return rep;
}

}  // namespace shrinker
