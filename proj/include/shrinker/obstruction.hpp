#pragma once

#include "shrinker/calculus.hpp"
#include "shrinker/ratfunc.hpp"

#include <array>
#include <string>
#include <vector>

namespace shrinker {

// M_d = r1^d + r2^d for d in {-3..2}
template <class S>
struct MSumsT {
    S r1, r2;
    S m(int d) const { return r1.pow(d) + r2.pow(d); }
    S r(int b) const { return b == 1 ? r1 : r2; }
};
using MSums = MSumsT<RadicalScalar>;
MSums msums(int k1, int k2);

// w^b = A^b u^2 + B^b v1 + C^b v2 + D^b sum a_i^2
template <class S>
struct WCoefficients {
    std::array<S, 2> A, B, C, D;
};

template <class S>
WCoefficients<S> closed_form_w(const MSumsT<S>& M, D2Variant variant = D2Variant::Corrected) {
    const S& r1 = M.r1;
    const S& r2 = M.r2;
    S M2 = M.m(2), M1 = M.m(1), Mm2 = M.m(-2);
    S one = r1 * r1.pow(-1);
    S denom = one + Mm2 * BigRat(2);
    auto A = [&](const S& rb) {
        if (variant == D2Variant::Printed)
            return (rb.pow(-3) * M2 * BigRat(-2) + M1 * BigRat(2) + (Mm2 * BigRat(4) - one) * rb) / denom;
        return (rb.pow(-3) * M2 * BigRat(-2) + (Mm2 * BigRat(4) + one * BigRat(3)) * rb) / denom;
    };
    S A1 = A(r1), A2 = A(r2);
    S two_r1 = r1 * BigRat(2), two_r2 = r2 * BigRat(2);
    S B1 = r1 * r1 * (A1 - two_r1);
    S B2 = r1 * r1 * (A2 + M2 / r2 - two_r2);
    S C1 = r2 * r2 * (A1 + M2 / r1 - two_r1);
    S C2 = r2 * r2 * (A2 - two_r2);
    S D1 = (B1 + C1) * BigRat(-2);
    S D2 = (B2 + C2) * BigRat(-2);
    return {{A1, A2}, {B1, B2}, {C1, C2}, {D1, D2}};
}

// The quartic integrals the pairing closed forms need; sq_* carry the extra
// factor sum a_i^2 contributed by the constant term of w.
template <class S>
struct QuarticIntegrals {
    S u4, u2v1, u2v2, v1v1, v2v2, v1v2, sq_u2, sq_v1, sq_v2;
};

// Closed form of <D2phi(U,W), U> for U = u (r1 N1 + r2 N2).
template <class S>
S cross_closed_form(const MSumsT<S>& M, const WCoefficients<S>& w, const QuarticIntegrals<S>& I,
                    D2Variant variant = D2Variant::Corrected) {
    auto w_u2 = [&](int b) { return w.A[b] * I.u4 + w.B[b] * I.u2v1 + w.C[b] * I.u2v2 + w.D[b] * I.sq_u2; };
    auto w_v = [&](int b, int c) {  // integral of w^b v_c
        return c == 1 ? w.A[b] * I.u2v1 + w.B[b] * I.v1v1 + w.C[b] * I.v1v2 + w.D[b] * I.sq_v1
                      : w.A[b] * I.u2v2 + w.B[b] * I.v1v2 + w.C[b] * I.v2v2 + w.D[b] * I.sq_v2;
    };
    S M1 = M.m(1), M2 = M.m(2), Mm1 = M.m(-1), Mm2 = M.m(-2);
    S out = M1 - M1;
    for (int b = 1; b <= 2; ++b) {
        const S& rb = M.r(b);
        if (variant == D2Variant::Printed) {
            S lead = M1 * BigRat(3) + Mm1 * BigRat(4) - M2 / rb - M2 * rb.pow(-3) * BigRat(2) - rb;
            out = out + lead * w_u2(b - 1);
            for (int a = 1; a <= 2; ++a) out = out - M.r(a) * BigRat(4) * w_v(b - 1, 3 - a);
        } else {
            S lead = rb * BigRat(3) + rb * Mm2 * BigRat(4) - M2 * rb.pow(-3) * BigRat(2);
            out = out + lead * w_u2(b - 1);
            out = out - rb * BigRat(4) * (w_v(b - 1, 1) + w_v(b - 1, 2));
        }
        out = out + M2 / rb * BigRat(2) * w_v(b - 1, 3 - b);
    }
    return out;
}

// Printed closed form (-9 M2 - M2^2) int u^4 + 3 M2^2 int |grad u|^4, with
// |grad u|^4 = (v1 + v2 - (r1^-2 + r2^-2) u^2)^2.
template <class S>
S cubic_closed_form(const MSumsT<S>& M, const QuarticIntegrals<S>& I) {
    S M2 = M.m(2);
    S rho = M.m(-2);
    S g4 = I.v1v1 + I.v2v2 + I.v1v2 * BigRat(2) - rho * BigRat(2) * (I.u2v1 + I.u2v2) + rho * rho * I.u4;
    return (M2 * BigRat(-9) - M2 * M2) * I.u4 + M2 * M2 * BigRat(3) * g4;
}

struct WSolution {
    WCoefficients<RadicalScalar> coeffs;
    NormalField W;
    bool degenerate = false;  // ansatz functions linearly dependent for this a
};

// inputs: diagonal coefficients a_i of u = sum a_i x_i y_i
WSolution solve_w_closed(const std::vector<BigRat>& a, int k1, int k2, D2Variant variant = D2Variant::Corrected);
WSolution solve_w_linear(const std::vector<BigRat>& a, int k1, int k2);
// right-hand side D2phi(U, U) of the corrector equation
NormalField corrector_rhs(const std::vector<BigRat>& a, int k1, int k2);
NormalField assemble_w(const RadicalField& f, const std::vector<BigRat>& a, const WCoefficients<RadicalScalar>& c);

struct DualValue {
    RadicalScalar closed_form;
    RadicalScalar direct;
    bool agree() const { return closed_form == direct; }
};
DualValue cross_term(const std::vector<BigRat>& a, int k1, int k2, const WSolution& w,
                     D2Variant variant = D2Variant::Corrected);
DualValue cubic_term(const std::vector<BigRat>& a, int k1, int k2);
// <D3phi(U,U,U) + 3 D2phi(U,W), U>, normalized by |Sigma|
RadicalScalar obstruction_pairing(const std::vector<BigRat>& a, int k1, int k2,
                                  D2Variant variant = D2Variant::Corrected);

QuarticIntegrals<RadicalScalar> quartic_integrals(const std::vector<BigRat>& a, int k1, int k2);

struct QTriple {
    int k1, k2;
    // symbolic in (r1, r2)
    RadialRational Q4, Q2, Q0_proof, Q0_printed;
    // evaluated at r_b = sqrt(2 k_b)
    RadicalScalar q4, q2, q0_proof, q0_printed;
    // from the two-probe extraction of the direct pairing
    RadicalScalar probe_q4, probe_q2;
    bool probe_agrees() const { return probe_q4 == q4 && probe_q2 == q2; }
};

// symbolic Q4, Q2 as rational functions of (r1, r2)
std::pair<RadialRational, RadialRational> q4_q2_symbolic(D2Variant variant = D2Variant::Corrected);
QTriple q_functions(int k1, int k2, bool with_probe = true);

// Q4/(1 + min(k1,k2)) + Q2 at the shrinker radii (k1 <= k2 after swapping)
RadicalScalar delta_bound(int k1, int k2);

}  // namespace shrinker
