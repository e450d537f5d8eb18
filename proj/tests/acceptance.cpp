// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals kKnownFailures, so a
// regression and an unexpected fix both break the test. The known failures are
// explained in the README under "Known discrepancies".

#include "shrinker/certificates.hpp"
#include "shrinker/moments.hpp"
#include "shrinker/numeric.hpp"
#include "shrinker/obstruction.hpp"
#include "shrinker/parallel.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace shrinker;
using namespace shrinker::numeric;

namespace {

const std::set<int> kKnownFailures = {9, 12};

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::mt19937_64 stream(std::uint64_t id) { return std::mt19937_64(0x5eed0000ULL + id); }

std::vector<BigRat> random_a(std::mt19937_64& g, int max_len) {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 7);
    std::uniform_int_distribution<int> len(1, max_len);
    std::vector<BigRat> a(len(g));
    for (auto& x : a) x = rat(n(g), d(g));
    return a;
}

BigRat sum_sq(const std::vector<BigRat>& a) {
    BigRat s = 0;
    for (const auto& x : a) s += x * x;
    return s;
}

Verdict moment_table() {
    auto g = stream(1);
    int rows = 0, bad = 0;
    for (int k1 = 1; k1 <= 4; ++k1)
        for (int k2 = 1; k2 <= 4; ++k2)
            for (int t = 0; t < 5; ++t)
                for (const auto& r : verify_sphint_table(k1, k2, random_a(g, std::min(k1, k2) + 1))) {
                    ++rows;
                    bad += !r.pass;
                }
    return {bad == 0, std::to_string(rows - bad) + "/" + std::to_string(rows) + " exact rows"};
}

Verdict jacobi_kernel() {
    bool ok = true;
    int fields = 0;
    for (int k1 = 1; k1 <= 4; ++k1)
        for (int k2 = 1; k2 <= 4; ++k2) {
            JacobiBasis B = jacobi_basis(k1, k2, k1 + k2 + 2);
            for (const auto& V : B.K) ok = ok && apply_L(V).is_zero();
            ok = ok && B.K1.size() == static_cast<std::size_t>((k1 + 1) * (k2 + 1));
            fields += static_cast<int>(B.K.size());
        }
    return {ok, std::to_string(fields) + " basis fields, LV = 0 and dim K1 = (k1+1)(k2+1)"};
}

// criteria 3-5 share one sweep definition; each criterion is timed on its own
struct SweepCase {
    int k1, k2;
    std::vector<BigRat> a;
};
std::vector<SweepCase> sweep() {
    auto g = stream(3);
    std::vector<SweepCase> out;
    for (int k1 = 1; k1 <= 5; ++k1)
        for (int k2 = 1; k2 <= 5; ++k2)
            for (int t = 0; t < 10; ++t) out.push_back({k1, k2, random_a(g, std::min(k1, k2) + 1)});
    return out;
}

bool same_coeffs(const WCoefficients<RadicalScalar>& x, const WCoefficients<RadicalScalar>& y) {
    for (int b = 0; b < 2; ++b)
        if (!(x.A[b] == y.A[b] && x.B[b] == y.B[b] && x.C[b] == y.C[b] && x.D[b] == y.D[b])) return false;
    return true;
}

Verdict corrector_identity() {
    int bad = 0, degenerate = 0;
    const auto cases = sweep();
    for (const auto& c : cases) {
        WSolution closed = solve_w_closed(c.a, c.k1, c.k2);
        WSolution linear = solve_w_linear(c.a, c.k1, c.k2);
        const bool identity = (apply_L(closed.W) + corrector_rhs(c.a, c.k1, c.k2)).is_zero();
        // a single nonzero a_i makes u^2, v1, v2 linearly dependent; only W is then unique
        const bool agree = linear.degenerate ? closed.W == linear.W : same_coeffs(closed.coeffs, linear.coeffs);
        degenerate += linear.degenerate;
        bad += !(identity && agree);
    }
    return {bad == 0, std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) +
                          " cases (" + std::to_string(degenerate) + " with dependent ansatz, compared as fields)"};
}

Verdict orthogonality() {
    int bad = 0;
    const auto cases = sweep();
    std::vector<JacobiBasis> bases;
    for (int k1 = 1; k1 <= 5; ++k1)
        for (int k2 = 1; k2 <= 5; ++k2) bases.push_back(jacobi_basis(k1, k2, k1 + k2 + 2));
    for (const auto& c : cases) {
        const auto& B = bases[(c.k1 - 1) * 5 + (c.k2 - 1)];
        bad += !project_K(corrector_rhs(c.a, c.k1, c.k2), B, Subspace::K).is_zero();
    }
    return {bad == 0, std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) + " projections vanish"};
}

Verdict pairings() {
    int bad = 0;
    const auto cases = sweep();
    for (const auto& c : cases) {
        bad += !cross_term(c.a, c.k1, c.k2, solve_w_closed(c.a, c.k1, c.k2)).agree();
        bad += !cubic_term(c.a, c.k1, c.k2).agree();
    }
    return {bad == 0, std::to_string(2 * cases.size() - bad) + "/" + std::to_string(2 * cases.size()) + " dual pairs agree"};
}

Verdict appendix_claims() {
    AppendixPolys p = rebuild_appendix_polys();
    Claim1Report c1 = verify_claim1(p);
    Claim2Report c2 = verify_claim2(p);
    std::ostringstream os;
    os << "claim1 by " << (c1.proof() ? c1.proof()->set_name : "-") << ", claim2 by "
       << (c2.proof() ? c2.proof()->set_name : "-") << ", constant " << c2.constant_term.to_string()
       << ", diff entries P4/P2/P0/shifted " << p.diff_P4.size() << "/" << p.diff_P2.size() << "/"
       << p.diff_P0.size() << "/" << p.diff_P0_shifted.size();
    return {c1.pass() && c2.pass() && c2.constant_ok(), os.str()};
}

Verdict obstruction_positivity() {
    auto g = stream(7);
    std::uniform_int_distribution<long> n(-9, 9), d(1, 7);
    int pairs = 0, bad_delta = 0, bad_probe = 0, bad_random = 0, direct_checks = 0, bad_direct = 0;
    for (int k1 = 1; k1 <= 8; ++k1)
        for (int k2 = k1; k2 <= 8; ++k2) {
            ++pairs;
            RadicalScalar delta = delta_bound(k1, k2);
            bad_delta += delta.sign() <= 0;
            // the pairing is invariant under permutations and sign changes of a, so
            // it is the quartic form q4 sum a^4 + q2 (sum a^2)^2 fixed by two probes
            QTriple q = q_functions(k1, k2, true);
            bad_probe += !q.probe_agrees();
            for (int t = 0; t < 100; ++t) {
                std::vector<BigRat> a(k1 + 1);
                for (auto& x : a) x = rat(n(g), d(g));
                BigRat s2 = sum_sq(a), s4 = 0;
                for (const auto& x : a) s4 += x * x * x * x;
                RadicalScalar form = q.probe_q4 * s4 + q.probe_q2 * s2 * s2;
                bad_random += form < delta * (s2 * s2);
                // full symbolic pairing on the smallest cases, as a check of the quartic form
                if (k2 <= 2 && t < 3) {
                    ++direct_checks;
                    bad_direct += !(obstruction_pairing(a, k1, k2) == form);
                }
            }
        }
    std::ostringstream os;
    os << pairs << " pairs: delta>0 fails " << bad_delta << ", probe mismatches " << bad_probe
       << ", random a below bound " << bad_random << ", direct-vs-form mismatches " << bad_direct << "/"
       << direct_checks << "; delta(1,1) = " << delta_bound(1, 1).to_string();
    return {bad_delta + bad_probe + bad_random + bad_direct == 0, os.str()};
}

Verdict clifford_value() {
    AppendixPolys p = rebuild_appendix_polys();
    RadicalScalar P0 = radical_eval(p.P0, 1, 1);
    // 48 r1^2 r2^2 / ((r1^2+2)^2 (r2^2+2)(r2^2+6)(2r1^2 + r1^2 r2^2 + 2r2^2)) at r1^2 = r2^2 = 2
    const BigRat R = 2;
    BigRat pre = 48 * R * R / ((R + 2) * (R + 2) * (R + 2) * (R + 6) * (2 * R + R * R + 2 * R));
    RadicalScalar value = P0 * pre;
    RadicalScalar q0 = q_functions(1, 1, false).q0_proof;
    std::ostringstream os;
    os << "prefactor " << to_string(pre) << " * P0 " << P0.to_string() << " = " << value.to_string()
       << ", Q0 at (1,1) = " << q0.to_string();
    return {value == RadicalScalar(1, 1, 32) && q0 == value && pre == rat(1, 32), os.str()};
}

Verdict variation_agreement() {
    Product P(1, 1, 4);
    const auto& f = RadicalField::get(1, 1);
    auto g = stream(9);
    std::uniform_int_distribution<long> n(-6, 6);
    std::vector<std::vector<BigRat>> c(2, std::vector<BigRat>(2));
    for (auto& row : c)
        for (auto& x : row) x = rat(n(g), 6);
    c[0][0] = 1;
    NormalField U = k1_field(f, c);
    Deformation D(U);
    CompiledField d2(d2phi_normal(U, U)), d3(d3phi_normal(U)), cu(U);
    double err_two = 0, err_one = 0, scale = 0, err3 = 0, scale3 = 0, num = 0, den = 0;
    for (const auto& pt : random_points(P, 20, 20240611)) {
        PhiTaylor t = phi_taylor(P, D, pt);
        auto x = sphere_coords(P, pt);
        const double a[2] = {d2.u1(x.data()), d2.u2(x.data())};
        for (int b = 0; b < 2; ++b) {
            err_two = std::max(err_two, std::abs(t.comp[b][2] - 2 * a[b]));
            err_one = std::max(err_one, std::abs(t.comp[b][2] - a[b]));
            scale = std::max(scale, std::abs(a[b]));
            num += t.comp[b][2] * a[b];
            den += a[b] * a[b];
        }
        const double u1 = cu.u1(x.data()), u2 = cu.u2(x.data());
        const double p3 = t.comp[0][3] * u1 + t.comp[1][3] * u2, s3 = d3.u1(x.data()) * u1 + d3.u2(x.data()) * u2;
        err3 = std::max(err3, std::abs(p3 - s3));
        scale3 = std::max(scale3, std::abs(s3));
    }
    const double rel_two = err_two / (2 * scale), rel3 = err3 / scale3;
    std::ostringstream os;
    os << "phi_ss vs 2*d2phi rel err " << fmt("%.3g", rel_two) << ", phi_ss/d2phi ratio " << fmt("%.10f", num / den)
       << " (rel err vs d2phi " << fmt("%.2g", err_one / scale) << "), U.phi_sss vs U.d3phi rel err " << fmt("%.2g", rel3);
    return {rel_two <= 1e-4 && rel3 <= 1e-4, os.str()};
}

OracleOptions oracle(ThreadPool* pool) {
    OracleOptions opt;
    opt.resolution = 16;
    opt.pool = pool;
    return opt;
}

Deformation corrected_direction(int k1, int k2) {
    const auto& f = RadicalField::get(k1, k2);
    return Deformation(k1_field_diagonal(f, {1}), solve_w_closed({1}, k1, k2).W);
}

Verdict distance_loja(ThreadPool* pool, double& worst_seconds) {
    bool ok = true;
    std::ostringstream os;
    const auto grid = log_grid(5e-4, 2e-2, 8);
    for (auto [k1, k2, N] : {std::tuple{1, 1, 4}, {1, 2, 5}, {2, 2, 6}}) {
        auto t0 = std::chrono::steady_clock::now();
        FitResult r = loja_exponent(Product(k1, k2, N), corrected_direction(k1, k2), grid, oracle(pool));
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst_seconds = std::max(worst_seconds, sec);
        ok = ok && std::abs(r.fit.slope - 3.0) <= 0.15 && sec < 300;
        os << "(" << k1 << "," << k2 << "," << N << ") slope " << fmt("%.4f", r.fit.slope) << "; ";
    }
    os << "window [5e-4, 2e-2], 8 points";
    return {ok, os.str()};
}

Verdict gradient_loja(ThreadPool* pool) {
    bool ok = true;
    std::ostringstream os;
    const auto grid = log_grid(1e-3, 3e-2, 8);
    for (int k = 1; k <= 2; ++k) {
        FitResult r = gradient_loja_fit(Product(k, k, 2 * k + 2), corrected_direction(k, k), grid, oracle(pool));
        ok = ok && std::abs(r.fit.slope - 4.0 / 3.0) <= 0.07;
        os << "(" << k << "," << k << ") slope " << fmt("%.4f", r.fit.slope) << "; ";
    }
    os << "window [1e-3, 3e-2], 8 points";
    return {ok, os.str()};
}

Verdict flow_rate(ThreadPool* pool) {
    Product P(1, 1, 4);
    Deformation D = corrected_direction(1, 1);
    FlowResult fwd = reduced_flow(P, D, 0.1, 10, 1e3, 12, oracle(pool));
    const double s_end = fwd.trajectory.back().second;
    // diagnostic only: the time-reversed flow does converge
    FlowResult rev = reduced_flow(P, D, 0.1, 1e3, 1e5, 12, oracle(pool), true);
    std::ostringstream os;
    os << "forward flow from s0=0.1 on tau in [10, 1e3]: exponent " << fmt("%.4f", fwd.fit.slope) << ", s_end "
       << fmt("%.4f", s_end) << (std::abs(s_end) > 0.1 ? " (escapes)" : "")
       << "; reversed flow on [1e3, 1e5]: exponent " << fmt("%.4f", rev.fit.slope);
    return {std::abs(fwd.fit.slope + 0.5) <= 0.05, os.str()};
}

Verdict monte_carlo(ThreadPool* pool) {
    auto g = stream(13);
    std::uniform_int_distribution<int> k(1, 3), e(0, 2);
    double worst = 0;
    int bad = 0;
    for (int t = 0; t < 20; ++t) {
        const int k1 = k(g), k2 = k(g);
        MonomialExp m{std::vector<int>(k1 + 1), std::vector<int>(k2 + 1)};
        for (auto& x : m.b1) x = 2 * e(g);
        for (auto& x : m.b2) x = 2 * e(g);
        McEstimate est = mc_moment(m, k1, k2, 1000000, 777 + t, pool);
        const double z = est.std_error > 0 ? std::abs(est.mean - est.exact) / est.std_error
                                           : (est.mean == est.exact ? 0.0 : INFINITY);
        worst = std::max(worst, z);
        bad += !(z <= 4);
    }
    return {bad == 0, "20 monomials, n = 1e6, max |z| = " + fmt("%.2f", worst)};
}

}  // namespace

int main() {
    ThreadPool pool;
    std::set<int> failed;
    int passed = 0;
    auto run = [&](int id, const char* name, double budget_s, const std::function<Verdict()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = body();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string budget;
        if (sec >= budget_s) {
            v.pass = false;
            budget = " over budget";
        }
        if (v.pass)
            ++passed;
        else
            failed.insert(id);
        const bool known = !v.pass && kKnownFailures.count(id);
        std::printf("%-4s %2d  %-34s %7.2fs / %gs%s  %s%s\n", v.pass ? "PASS" : "FAIL", id, name, sec, budget_s,
                    budget.c_str(), v.detail.c_str(), known ? "  [known failure]" : "");
        std::fflush(stdout);
    };

    run(1, "moment table", 10, moment_table);
    run(2, "Jacobi kernel", 5, jacobi_kernel);
    run(3, "corrector identity", 30, corrector_identity);
    run(4, "orthogonality to K", 30, orthogonality);
    run(5, "closed-form pairings", 60, pairings);
    run(6, "appendix claims", 5, appendix_claims);
    run(7, "obstruction positivity", 60, obstruction_positivity);
    run(8, "Clifford torus value", 1, clifford_value);
    run(9, "symbolic-numeric variations", 120, variation_agreement);
    double worst = 0;
    run(10, "distance Lojasiewicz exponent", 900, [&] { return distance_loja(&pool, worst); });
    run(11, "gradient Lojasiewicz exponent", 300, [&] { return gradient_loja(&pool); });
    run(12, "flow rate", 120, [&] { return flow_rate(&pool); });
    run(13, "Monte-Carlo moments", 60, [&] { return monte_carlo(&pool); });

    std::printf("%d/13 criteria pass", passed);
    if (!failed.empty()) {
        std::printf("; failing:");
        for (int id : failed) std::printf(" %d", id);
    }
    std::printf("\n");
    if (failed != kKnownFailures) {
        std::printf("failing set differs from the documented known failures\n");
        return 1;
    }
    return 0;
}
