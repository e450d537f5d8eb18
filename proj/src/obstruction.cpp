#include "shrinker/obstruction.hpp"
#include "shrinker/linsolve.hpp"

#include <stdexcept>

namespace shrinker {

MSums msums(int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    return {RadicalScalar::r1(f), RadicalScalar::r2(f)};
}

namespace {

struct Ansatz {
    SpherePoly u, v1, v2;
    BigRat S;
};

Ansatz make_ansatz(const RadicalField& f, const std::vector<BigRat>& a) {
    Ansatz z{diagonal_u(f, a), SpherePoly(f), SpherePoly(f), 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        SpherePoly x = SpherePoly::coord(f, 1, i), y = SpherePoly::coord(f, 2, i);
        z.v1 += x * x * BigRat(a[i] * a[i]);
        z.v2 += y * y * BigRat(a[i] * a[i]);
        z.S += a[i] * a[i];
    }
    return z;
}

}  // namespace

NormalField assemble_w(const RadicalField& f, const std::vector<BigRat>& a, const WCoefficients<RadicalScalar>& c) {
    Ansatz z = make_ansatz(f, a);
    SpherePoly u2 = z.u * z.u;
    NormalField W(f);
    for (int b = 0; b < 2; ++b)
        W.u(b + 1) = u2 * c.A[b] + z.v1 * c.B[b] + z.v2 * c.C[b] + SpherePoly(f, c.D[b] * z.S);
    return W;
}

NormalField corrector_rhs(const std::vector<BigRat>& a, int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    NormalField U = k1_field_diagonal(f, a);
    return d2phi_normal(U, U);
}

WSolution solve_w_closed(const std::vector<BigRat>& a, int k1, int k2, D2Variant variant) {
    const auto& f = RadicalField::get(k1, k2);
    WCoefficients<RadicalScalar> c = closed_form_w(msums(k1, k2), variant);
    return {c, assemble_w(f, a, c), false};
}

WSolution solve_w_linear(const std::vector<BigRat>& a, int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    Ansatz z = make_ansatz(f, a);
    NormalField rhs = corrector_rhs(a, k1, k2);
    std::vector<SpherePoly> phi = {z.u * z.u, z.v1, z.v2, SpherePoly::constant(f, 1)};

    // keep a linearly independent subset of the ansatz functions
    std::vector<int> keep;
    for (int c = 0; c < 4; ++c) {
        std::vector<int> trial = keep;
        trial.push_back(c);
        std::vector<std::vector<RadicalScalar>> G(trial.size(), std::vector<RadicalScalar>(trial.size(), RadicalScalar(f)));
        for (std::size_t i = 0; i < trial.size(); ++i)
            for (std::size_t j = 0; j < trial.size(); ++j) G[i][j] = (phi[trial[i]] * phi[trial[j]]).integrate();
        std::vector<RadicalScalar> zero(trial.size(), RadicalScalar(f));
        if (solve_linear(G, zero)) keep = trial;
    }

    std::vector<SpherePoly> Lphi;
    for (int c : keep) Lphi.push_back(laplace_beltrami(phi[c]) + phi[c]);
    const std::size_t n = keep.size();
    std::vector<std::vector<RadicalScalar>> M(n, std::vector<RadicalScalar>(n, RadicalScalar(f)));
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t c = 0; c < n; ++c) M[d][c] = (Lphi[c] * phi[keep[d]]).integrate();

    const RadicalScalar zero(f);
    WSolution out{{{zero, zero}, {zero, zero}, {zero, zero}, {zero, zero}}, NormalField(f), n < 4};
    for (int b = 1; b <= 2; ++b) {
        std::vector<RadicalScalar> g;
        for (std::size_t d = 0; d < n; ++d) g.push_back(-(rhs.u(b) * phi[keep[d]]).integrate());
        auto x = solve_linear(M, g);
        if (!x) throw std::runtime_error("solve_w_linear: singular Galerkin system");
        RadicalScalar coef[4] = {RadicalScalar(f), RadicalScalar(f), RadicalScalar(f), RadicalScalar(f)};
        for (std::size_t c = 0; c < n; ++c) coef[keep[c]] = (*x)[c];
        out.coeffs.A[b - 1] = coef[0];
        out.coeffs.B[b - 1] = coef[1];
        out.coeffs.C[b - 1] = coef[2];
        // the constant ansatz function is 1, the closed form multiplies D by sum a_i^2
        out.coeffs.D[b - 1] = z.S == 0 ? coef[3] : coef[3] / RadicalScalar(f, z.S);
        SpherePoly w(f);
        for (std::size_t c = 0; c < n; ++c) w += phi[keep[c]] * (*x)[c];
        out.W.u(b) = std::move(w);
    }
    if (!(apply_L(out.W) + rhs).is_zero())
        throw std::runtime_error("solve_w_linear: ansatz span does not contain the solution");
    return out;
}

QuarticIntegrals<RadicalScalar> quartic_integrals(const std::vector<BigRat>& a, int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    Ansatz z = make_ansatz(f, a);
    SpherePoly u2 = z.u * z.u;
    return {(u2 * u2).integrate(),          (u2 * z.v1).integrate(),
            (u2 * z.v2).integrate(),        (z.v1 * z.v1).integrate(),
            (z.v2 * z.v2).integrate(),      (z.v1 * z.v2).integrate(),
            u2.integrate() * z.S,           z.v1.integrate() * z.S,
            z.v2.integrate() * z.S};
}

DualValue cross_term(const std::vector<BigRat>& a, int k1, int k2, const WSolution& w, D2Variant variant) {
    const auto& f = RadicalField::get(k1, k2);
    NormalField U = k1_field_diagonal(f, a);
    RadicalScalar closed = cross_closed_form(msums(k1, k2), w.coeffs, quartic_integrals(a, k1, k2), variant);
    RadicalScalar direct = l2_inner(d2phi_normal(U, w.W, variant), U);
    return {closed, direct};
}

DualValue cubic_term(const std::vector<BigRat>& a, int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    NormalField U = k1_field_diagonal(f, a);
    RadicalScalar closed = cubic_closed_form(msums(k1, k2), quartic_integrals(a, k1, k2));
    RadicalScalar direct = l2_inner(d3phi_normal(U), U);
    return {closed, direct};
}

RadicalScalar obstruction_pairing(const std::vector<BigRat>& a, int k1, int k2, D2Variant variant) {
    const auto& f = RadicalField::get(k1, k2);
    NormalField U = k1_field_diagonal(f, a);
    WSolution w = solve_w_closed(a, k1, k2, variant);
    NormalField lhs = d3phi_normal(U) + d2phi_normal(U, w.W, variant) * RadicalScalar(f, 3);
    return l2_inner(lhs, U);
}

std::pair<RadialRational, RadialRational> q4_q2_symbolic(D2Variant variant) {
    using R = RadialRational;
    const R r1 = R::r(1), r2 = R::r(2);
    // 1/(k+1) = 2/(r^2+2), 1/(k+3) = 2/(r^2+6)
    const R p1 = R(R::factor_poly(R::R1sqPlus2)).inverse() * R(2);
    const R p2 = R(R::factor_poly(R::R2sqPlus2)).inverse() * R(2);
    const R q1 = R(R::factor_poly(R::R1sqPlus6)).inverse() * R(2);
    const R q2 = R(R::factor_poly(R::R2sqPlus6)).inverse() * R(2);
    const R r1s = r1 * r1, r2s = r2 * r2;
    MSumsT<R> M{r1, r2};
    WCoefficients<R> w = closed_form_w(M, variant);
    auto total = [&](const BigRat& S4, const BigRat& S22) {
        BigRat P = (S22 - S4) / 2;
        R quart(3 * S4 + 2 * P);
        QuarticIntegrals<R> I{
            r1s * r1s * r2s * r2s * p1 * q1 * p2 * q2 * R(9 * S4 + 6 * P),
            r1s * r1s * r2s * p1 * q1 * p2 * quart,
            r1s * r2s * r2s * p1 * p2 * q2 * quart,
            r1s * r1s * p1 * q1 * quart,
            r2s * r2s * p2 * q2 * quart,
            r1s * r2s * p1 * p2 * R(S22),
            r1s * r2s * p1 * p2 * R(S22),
            r1s * p1 * R(S22),
            r2s * p2 * R(S22),
        };
        return cubic_closed_form(M, I) + cross_closed_form(M, w, I, variant) * R(3);
    };
    return {total(1, 0), total(0, 1)};
}

QTriple q_functions(int k1, int k2, bool with_probe) {
    static const auto sym = q4_q2_symbolic();
    using R = RadialRational;
    const auto& f = RadicalField::get(k1, k2);
    QTriple t{k1, k2, sym.first, sym.second, {}, {}, RadicalScalar(f), RadicalScalar(f), RadicalScalar(f),
              RadicalScalar(f), RadicalScalar(f), RadicalScalar(f)};
    t.Q0_proof = sym.first * R(2) / R(R::factor_poly(R::R1sqPlus2)) + sym.second;
    t.Q0_printed = sym.first / R(R::factor_poly(R::TwoR1sqPlus1)) + sym.second;
    t.q4 = t.Q4.eval(k1, k2);
    t.q2 = t.Q2.eval(k1, k2);
    t.q0_proof = t.q4 / BigRat(1 + k1) + t.q2;
    t.q0_printed = t.q4 / RadicalScalar(f, 1 + 4 * k1) + t.q2;
    if (with_probe) {
        RadicalScalar p1 = obstruction_pairing({1}, k1, k2);
        RadicalScalar p2 = obstruction_pairing({1, 1}, k1, k2);
        t.probe_q2 = (p2 - p1 * BigRat(2)) / BigRat(2);
        t.probe_q4 = p1 - t.probe_q2;
    }
    return t;
}

RadicalScalar delta_bound(int k1, int k2) {
    if (k1 > k2) std::swap(k1, k2);
    QTriple t = q_functions(k1, k2, false);
    return t.q0_proof;
}

}  // namespace shrinker
