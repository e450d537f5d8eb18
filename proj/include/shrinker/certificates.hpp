#pragma once

#include "shrinker/calculus.hpp"
#include "shrinker/parallel.hpp"
#include "shrinker/poly2.hpp"

#include <string>
#include <vector>

namespace shrinker {

// One weighted AM-GM instance  c * lhs <= sum_i w_i * rhs_i.  lambda_i are
// the exponent weights: lhs = sum lambda_i rhs_i, sum lambda_i = 1.
template <class C>
struct Certificate {
    struct Term {
        C weight;
        Exp2 mono;
        BigRat lambda;
    };
    std::string label;
    C coeff;
    Exp2 lhs;
    std::vector<Term> rhs;

    Certificate swapped() const {
        Certificate s{label + " (swapped)", coeff, {lhs.second, lhs.first}, rhs};
        for (auto& t : s.rhs) t.mono = {t.mono.second, t.mono.first};
        return s;
    }
    // sum w_i rhs_i - c lhs, nonnegative on the orthant iff the instance is valid
    Poly2<C> gap() const {
        Poly2<C> p = Poly2<C>::monomial(lhs.first, lhs.second, -coeff);
        for (const auto& t : rhs) p.add_term(t.mono, t.weight);
        return p;
    }
};

struct AmGmCheck {
    bool exponents_ok = false;  // lhs is the lambda-mean of the rhs exponents
    bool weights_ok = false;    // c <= prod (w_i / lambda_i)^lambda_i
    bool valid() const { return exponents_ok && weights_ok; }
};
AmGmCheck check_am_gm(const Certificate<BigRat>& c);
AmGmCheck check_am_gm(const Certificate<Sqrt2Scalar>& c);

template <class C>
struct ClaimResult {
    std::string set_name;
    std::vector<Certificate<C>> certificates;
    std::vector<AmGmCheck> checks;
    Poly2<C> residual;  // p + sum (c lhs - sum w rhs)
    SignReport<C> sign;
    bool certificates_valid() const {
        for (const auto& c : checks)
            if (!c.valid()) return false;
        return true;
    }
    bool pass() const { return certificates_valid() && sign.nonnegative(); }
};

template <class C>
ClaimResult<C> apply_certificates(const Poly2<C>& p, std::string name, std::vector<Certificate<C>> certs) {
    ClaimResult<C> r{std::move(name), std::move(certs), {}, p, {}};
    for (const auto& c : r.certificates) {
        r.checks.push_back(check_am_gm(c));
        r.residual -= c.gap();
    }
    r.sign = sign_report(r.residual);
    return r;
}

struct DiffEntry {
    Exp2 mono;
    std::string printed, recomputed;
};
using DiffReport = std::vector<DiffEntry>;

template <class C>
DiffReport diff_polys(const Poly2<C>& printed, const Poly2<C>& recomputed) {
    DiffReport out;
    Poly2<C> d = recomputed - printed;
    for (const auto& [e, c] : d.terms())
        out.push_back({e, coeff_text(printed.coeff(e.first, e.second)), coeff_text(recomputed.coeff(e.first, e.second))});
    return out;
}

struct AppendixPolys {
    BivarPoly P4, P2, P0;
    ShiftedPoly P0_shifted;
    DiffReport diff_P4, diff_P2, diff_P0, diff_P0_shifted;
};

// Transcriptions of the printed displays (typos included).
const BivarPoly& printed_P4();
const BivarPoly& printed_P2();
const BivarPoly& printed_P0();
const ShiftedPoly& printed_P0_shifted();

// Clear the printed prefactors from the symbolic Q4, Q2 and proof-form Q0.
// The Printed variant rebuilds from the printed second-variation formula and
// reproduces the printed displays up to typos.
AppendixPolys rebuild_appendix_polys(D2Variant variant = D2Variant::Corrected);

// Each claim is tried with no certificates, the printed set and the repaired
// set; the first set that is valid and leaves a nonnegative residual proves it.
template <class C>
struct ClaimReport {
    ClaimResult<C> direct, printed, repaired;
    const ClaimResult<C>* proof() const {
        for (const auto* r : {&direct, &printed, &repaired})
            if (r->pass()) return r;
        return nullptr;
    }
};
struct Claim1Report : ClaimReport<BigRat> {
    bool pass() const { return proof() != nullptr; }
};
struct Claim2Report : ClaimReport<Sqrt2Scalar> {
    Sqrt2Scalar constant_term, coeff_s1_8_s2_2;
    bool constant_ok() const { return constant_term == Sqrt2Scalar(1024); }
    bool pass() const { return proof() != nullptr && constant_ok(); }
};
std::vector<Certificate<BigRat>> claim1_printed_certificates();
std::vector<Certificate<BigRat>> claim1_repaired_certificates();
std::vector<Certificate<Sqrt2Scalar>> claim2_printed_certificates();
std::vector<Certificate<Sqrt2Scalar>> claim2_repaired_certificates();
Claim1Report verify_claim1(const AppendixPolys& polys);
Claim2Report verify_claim2(const AppendixPolys& polys);

struct GridReport {
    BigRat min_value;
    BigRat arg_r1, arg_r2;
    int points = 0;
};
// Exact evaluation on a resolution x resolution rational grid over [lo, hi]^2.
GridReport grid_positivity(const BivarPoly& p, const BigRat& lo, const BigRat& hi, int resolution,
                           ThreadPool* pool = nullptr);

// rational upper bracket of sqrt(2) used for grids starting at sqrt(2)
inline BigRat sqrt2_upper() { return BigRat(99, 70); }

}  // namespace shrinker
