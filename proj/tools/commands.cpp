#include "report.hpp"

#include "shrinker/certificates.hpp"
#include "shrinker/moments.hpp"
#include "shrinker/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace shrinker::cli {

using namespace shrinker::numeric;

void RunConfig::validate() const {
    if (k1 < 1 || k2 < 1) throw ConfigError("k1 and k2 must be >= 1");
    if (k1 > 12 || k2 > 12) throw ConfigError("k1 and k2 are limited to 12");
    if (N != 0 && N < k1 + k2 + 2) throw ConfigError("bigN must be >= k1 + k2 + 2");
    if (static_cast<int>(a.size()) > std::min(k1, k2) + 1)
        throw ConfigError("a has more than min(k1,k2)+1 entries");
    if (!(h >= 1e-6 && h <= 1e-2)) throw ConfigError("h must lie in [1e-6, 1e-2]");
    if (s_min && !(*s_min > 0)) throw ConfigError("s-min must be positive");
    if (s_min && s_max && !(*s_max > *s_min)) throw ConfigError("s-max must exceed s-min");
    if (points < 0) throw ConfigError("points must be nonnegative");
    if (tol && !(*tol > 0)) throw ConfigError("tol must be positive");
    if (!(tau_min > 0 && tau_max > tau_min)) throw ConfigError("need 0 < tau-min < tau-max");
    if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
}

std::vector<BigRat> parse_coefficients(const std::string& text) {
    std::vector<BigRat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad rational in --a: '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError("--a needs at least one coefficient");
    return out;
}

json rational_json(const BigRat& q) { return to_string(q); }

json radical_json(const RadicalScalar& x) {
    return {{"rational", to_string(x.c00())},
            {"coeff_r1", to_string(x.c10())},
            {"coeff_r2", to_string(x.c01())},
            {"coeff_r1r2", to_string(x.c11())},
            {"approx", x.to_double()}};
}

json fit_json(const FitReport& fit, double s_min, double s_max) {
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"max_residual", fit.max_residual},
            {"window", {s_min, s_max}},
            {"n_points", fit.n_points}};
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

namespace {

json coefficients_json(const std::vector<BigRat>& a) {
    json j = json::array();
    for (const auto& x : a) j.push_back(rational_json(x));
    return j;
}

json w_json(const WCoefficients<RadicalScalar>& c) {
    auto pair = [](const std::array<RadicalScalar, 2>& v) { return json::array({radical_json(v[0]), radical_json(v[1])}); };
    return {{"A", pair(c.A)}, {"B", pair(c.B)}, {"C", pair(c.C)}, {"D", pair(c.D)}};
}

bool same_coefficients(const WCoefficients<RadicalScalar>& x, const WCoefficients<RadicalScalar>& y) {
    for (int b = 0; b < 2; ++b)
        if (!(x.A[b] == y.A[b] && x.B[b] == y.B[b] && x.C[b] == y.C[b] && x.D[b] == y.D[b])) return false;
    return true;
}

json base_report(const RunConfig& cfg) {
    return {{"schema", 1}, {"command", cfg.command}, {"k1", cfg.k1}, {"k2", cfg.k2}};
}

void summary_csv(Outcome& o) {
    o.csv_header = {"check", "pass"};
    for (const auto& [k, v] : o.report["checks"].items()) o.csv_rows.push_back({k, v.get<bool>() ? "pass" : "fail"});
}

void set_checks(Outcome& o, const std::map<std::string, bool>& checks) {
    json j = json::object();
    for (const auto& [k, v] : checks) {
        j[k] = v;
        o.pass = o.pass && v;
    }
    o.report["checks"] = j;
    o.report["pass"] = o.pass;
}

std::mt19937_64 rng_for(const RunConfig& cfg, std::uint64_t stream) {
    // splitmix64 step to derive independent substreams from one seed
    std::uint64_t z = cfg.seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return std::mt19937_64(z ^ (z >> 31));
}

BigRat random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 7);
    return rat(n(g), d(g));
}

std::vector<double> s_grid(const RunConfig& cfg, double lo, double hi) {
    return log_grid(cfg.s_min.value_or(lo), cfg.s_max.value_or(hi), cfg.points ? cfg.points : 8);
}

OracleOptions oracle(const RunConfig& cfg) {
    OracleOptions opt;
    opt.h = cfg.h;
    opt.resolution = 16;
    opt.pool = cfg.pool;
    return opt;
}

void curve_csv(Outcome& o, const std::vector<CurveRow>& curve) {
    o.csv_header = {"s", "norm_phi", "norm_V", "F_minus_F0"};
    for (const auto& r : curve) o.csv_rows.push_back({num(r.s), num(r.norm_phi), num(r.norm_V), num(r.F_minus_F0)});
}

json curve_json(const std::vector<CurveRow>& curve) {
    json j = json::array();
    for (const auto& r : curve)
        j.push_back({{"s", r.s}, {"norm_phi", r.norm_phi}, {"norm_V", r.norm_V}, {"F_minus_F0", r.F_minus_F0}});
    return j;
}

Outcome cmd_moments(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    o.report["a"] = coefficients_json(cfg.a);
    auto rows = verify_sphint_table(cfg.k1, cfg.k2, cfg.a);
    json jr = json::array();
    bool exact = true;
    o.csv_header = {"integral", "printed", "computed", "status"};
    for (const auto& r : rows) {
        jr.push_back({{"integral", r.name}, {"printed", radical_json(r.printed)}, {"computed", radical_json(r.computed)},
                      {"pass", r.pass}});
        o.csv_rows.push_back({r.name, r.printed.to_string(), r.computed.to_string(), r.pass ? "pass" : "fail"});
        exact = exact && r.pass;
    }
    o.report["rows"] = jr;

    // Monte-Carlo cross-check on a few random monomials
    const long n = cfg.points ? cfg.points : 200000;
    const double tol = cfg.tol.value_or(4.0);
    auto g = rng_for(cfg, 1);
    std::uniform_int_distribution<int> e(0, 2);
    json mc = json::array();
    bool mc_ok = true;
    for (int t = 0; t < 5; ++t) {
        MonomialExp m{std::vector<int>(cfg.k1 + 1), std::vector<int>(cfg.k2 + 1)};
        for (auto& x : m.b1) x = 2 * e(g);
        for (auto& x : m.b2) x = e(g);
        McEstimate est = mc_moment(m, cfg.k1, cfg.k2, n, cfg.seed + t, cfg.pool);
        const double z = est.std_error > 0 ? std::abs(est.mean - est.exact) / est.std_error
                                           : (est.mean == est.exact ? 0.0 : INFINITY);
        mc_ok = mc_ok && z <= tol;
        mc.push_back({{"b1", m.b1}, {"b2", m.b2}, {"mean", est.mean}, {"std_error", est.std_error},
                      {"exact", est.exact}, {"z", z}});
    }
    o.report["monte_carlo"] = {{"samples", n}, {"max_z", tol}, {"rows", mc}};
    set_checks(o, {{"exact_table", exact}, {"monte_carlo", mc_ok}});
    return o;
}

Outcome cmd_jacobi(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    const int N = cfg.ambient();
    o.report["N"] = N;
    JacobiBasis B = jacobi_basis(cfg.k1, cfg.k2, N);
    bool lv = true;
    for (const auto& V : B.K) lv = lv && apply_L(V).is_zero();
    bool orth = true;
    for (const auto& V : B.K0)
        for (const auto& W : B.K1) orth = orth && l2_inner(V, W).is_zero();
    const std::size_t expected = static_cast<std::size_t>((cfg.k1 + 1) * (cfg.k2 + 1));
    o.report["dim"] = {{"K", B.K.size()}, {"K0", B.K0.size()}, {"K1", B.K1.size()}, {"K1_expected", expected}};
    json k1 = json::array();
    for (const auto& V : B.K1) k1.push_back({{"u1", V.u1.to_string()}, {"u2", V.u2.to_string()}});
    o.report["K1"] = k1;
    set_checks(o, {{"LV_zero", lv}, {"dim_K1", B.K1.size() == expected}, {"K0_perp_K1", orth}});
    summary_csv(o);
    return o;
}

Outcome cmd_solve_w(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    o.report["a"] = coefficients_json(cfg.a);
    WSolution closed = solve_w_closed(cfg.a, cfg.k1, cfg.k2);
    WSolution linear = solve_w_linear(cfg.a, cfg.k1, cfg.k2);
    NormalField rhs = corrector_rhs(cfg.a, cfg.k1, cfg.k2);
    JacobiBasis B = jacobi_basis(cfg.k1, cfg.k2, cfg.k1 + cfg.k2 + 2);
    o.report["closed"] = w_json(closed.coeffs);
    o.report["linear"] = w_json(linear.coeffs);
    o.report["linear_degenerate"] = linear.degenerate;
    o.report["W"] = {{"u1", closed.W.u1.to_string()}, {"u2", closed.W.u2.to_string()}};

    // the printed coefficients, checked against the true second variation
    WSolution printed = solve_w_closed(cfg.a, cfg.k1, cfg.k2, D2Variant::Printed);
    const bool printed_ok = (apply_L(printed.W) + rhs).is_zero();
    o.report["printed_formula"] = {{"coefficients", w_json(printed.coeffs)}, {"solves_corrector", printed_ok}};

    const bool agree = linear.degenerate ? (closed.W - linear.W).is_zero() : same_coefficients(closed.coeffs, linear.coeffs);
    set_checks(o, {{"LW_plus_D2phi_zero", (apply_L(closed.W) + rhs).is_zero()},
                   {"closed_equals_linear", agree},
                   {"D2phi_perp_K", project_K(rhs, B, Subspace::K).is_zero()}});
    summary_csv(o);
    return o;
}

Outcome cmd_obstruction(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    o.report["a"] = coefficients_json(cfg.a);
    WSolution w = solve_w_closed(cfg.a, cfg.k1, cfg.k2);
    DualValue cross = cross_term(cfg.a, cfg.k1, cfg.k2, w);
    DualValue cubic = cubic_term(cfg.a, cfg.k1, cfg.k2);
    RadicalScalar pairing = obstruction_pairing(cfg.a, cfg.k1, cfg.k2);
    QTriple q = q_functions(cfg.k1, cfg.k2, true);
    RadicalScalar delta = delta_bound(cfg.k1, cfg.k2);
    BigRat s2 = 0;
    for (const auto& x : cfg.a) s2 += x * x;

    o.report["W"] = w_json(w.coeffs);
    auto dual = [](const DualValue& d) {
        return json{{"closed_form", radical_json(d.closed_form)}, {"direct", radical_json(d.direct)}, {"agree", d.agree()}};
    };
    o.report["cross_term"] = dual(cross);
    o.report["cubic_term"] = dual(cubic);
    o.report["pairing"] = radical_json(pairing);
    o.report["Q4"] = radical_json(q.q4);
    o.report["Q2"] = radical_json(q.q2);
    o.report["Q0"] = radical_json(q.q0_proof);
    o.report["Q0_printed_definition"] = radical_json(q.q0_printed);
    o.report["delta"] = radical_json(delta);

    // random coefficient vectors, pairing from the two-probe quartic form
    const int samples = cfg.points ? cfg.points : 100;
    auto g = rng_for(cfg, 2);
    bool bound_ok = true;
    const int len = std::min(cfg.k1, cfg.k2) + 1;
    for (int t = 0; t < samples; ++t) {
        BigRat r2 = 0, r4 = 0;
        for (int i = 0; i < len; ++i) {
            BigRat x = random_rational(g);
            r2 += x * x;
            r4 += x * x * x * x;
        }
        RadicalScalar p = q.probe_q4 * r4 + q.probe_q2 * r2 * r2;
        bound_ok = bound_ok && !(p < delta * (r2 * r2));
    }
    o.report["random_samples"] = samples;
    set_checks(o, {{"cross_term_dual", cross.agree()},
                   {"cubic_term_dual", cubic.agree()},
                   {"probe_matches_Q", q.probe_agrees()},
                   {"delta_positive", delta.sign() > 0},
                   {"pairing_ge_delta", !(pairing < delta * (s2 * s2))},
                   {"random_pairing_ge_delta", bound_ok}});
    summary_csv(o);
    return o;
}

template <class C>
json claim_json(const ClaimResult<C>& r) {
    json negs = json::array();
    for (const auto& [e, c] : r.sign.negatives) negs.push_back({{"r1", e.first}, {"r2", e.second}, {"coeff", coeff_text(c)}});
    json certs = json::array();
    for (std::size_t i = 0; i < r.certificates.size(); ++i)
        certs.push_back({{"inequality", r.certificates[i].label}, {"valid", r.checks[i].valid()}});
    return {{"set", r.set_name},
            {"certificates", certs},
            {"certificates_valid", r.certificates_valid()},
            {"residual_min_coefficient", coeff_text(r.sign.min_coefficient)},
            {"negative_residual_terms", negs},
            {"pass", r.pass()}};
}

template <class R>
json claim_report_json(const R& rep) {
    const auto* proof = rep.proof();
    return {{"none", claim_json(rep.direct)},
            {"printed", claim_json(rep.printed)},
            {"repaired", claim_json(rep.repaired)},
            {"proved_by", proof ? json(proof->set_name) : json(nullptr)}};
}

json diff_json(const DiffReport& d) {
    json j = json::array();
    for (const auto& e : d)
        j.push_back({{"r1", e.mono.first}, {"r2", e.mono.second}, {"printed", e.printed}, {"recomputed", e.recomputed}});
    return j;
}

json diffs_json(const AppendixPolys& p) {
    return {{"P4", diff_json(p.diff_P4)},
            {"P2", diff_json(p.diff_P2)},
            {"P0", diff_json(p.diff_P0)},
            {"P0_shifted", diff_json(p.diff_P0_shifted)}};
}

Outcome cmd_claims(const RunConfig& cfg) {
    Outcome o;
    o.report = json{{"schema", 1}, {"command", cfg.command}};
    AppendixPolys polys = rebuild_appendix_polys();
    AppendixPolys printed = rebuild_appendix_polys(D2Variant::Printed);
    Claim1Report c1 = verify_claim1(polys);
    Claim2Report c2 = verify_claim2(polys);
    o.report["polynomials"] = {{"P4", polys.P4.to_string()}, {"P2", polys.P2.to_string()}, {"P0", polys.P0.to_string()},
                               {"P0_shifted", polys.P0_shifted.to_string("s1", "s2")}};
    o.report["claim1"] = claim_report_json(c1);
    o.report["claim2"] = claim_report_json(c2);
    o.report["claim2"]["constant_term"] = c2.constant_term.to_string();
    o.report["diff_vs_printed"] = diffs_json(polys);
    o.report["printed_formula_rebuild"] = {{"diff_vs_printed", diffs_json(printed)},
                                           {"claim1", claim_report_json(verify_claim1(printed))},
                                           {"claim2", claim_report_json(verify_claim2(printed))}};

    const int res = cfg.points ? cfg.points : 50;
    GridReport g4 = grid_positivity(polys.P4, 0, 5, res, cfg.pool);
    GridReport g0 = grid_positivity(polys.P0, sqrt2_upper(), 5, res, cfg.pool);
    o.report["grid"] = {{"P4_min", to_string(g4.min_value)}, {"P0_min", to_string(g0.min_value)}, {"resolution", res}};
    set_checks(o, {{"claim1", c1.pass()},
                   {"claim2", c2.pass()},
                   {"constant_1024", c2.constant_ok()},
                   {"grid_P4_nonnegative", g4.min_value >= 0},
                   {"grid_P0_ge_1024", g0.min_value >= 1024}});
    summary_csv(o);
    return o;
}

// U in K1 with random rational c_ij in [-1, 1]
NormalField random_k1(const RunConfig& cfg, std::mt19937_64& g) {
    std::uniform_int_distribution<long> n(-6, 6);
    std::vector<std::vector<BigRat>> c(cfg.k1 + 1, std::vector<BigRat>(cfg.k2 + 1));
    for (auto& row : c)
        for (auto& x : row) x = rat(n(g), 6);
    c[0][0] = 1;
    return k1_field(RadicalField::get(cfg.k1, cfg.k2), c);
}

Outcome cmd_taylor(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    const int N = cfg.ambient();
    o.report["N"] = N;
    Product P(cfg.k1, cfg.k2, N);
    auto g = rng_for(cfg, 3);
    NormalField U = random_k1(cfg, g);
    Deformation D(U);
    CompiledField d2(d2phi_normal(U, U)), d3(d3phi_normal(U)), cu(U);
    const int count = cfg.points ? cfg.points : 20;
    auto pts = random_points(P, count, cfg.seed);

    double err2 = 0, scale2 = 0, err3 = 0, scale3 = 0, ratio_num = 0, ratio_den = 0;
    o.csv_header = {"point", "phi_ss_N1", "d2phi_N1", "phi_ss_N2", "d2phi_N2", "phi_sss_dot_U", "d3phi_dot_U"};
    for (int i = 0; i < count; ++i) {
        PhiTaylor t = phi_taylor(P, D, pts[i], cfg.h);
        auto x = sphere_coords(P, pts[i]);
        const double a1 = d2.u1(x.data()), a2 = d2.u2(x.data());
        const double u1 = cu.u1(x.data()), u2 = cu.u2(x.data());
        const double p3 = t.comp[0][3] * u1 + t.comp[1][3] * u2;
        const double s3 = d3.u1(x.data()) * u1 + d3.u2(x.data()) * u2;
        err2 = std::max({err2, std::abs(t.comp[0][2] - a1), std::abs(t.comp[1][2] - a2)});
        scale2 = std::max({scale2, std::abs(a1), std::abs(a2)});
        err3 = std::max(err3, std::abs(p3 - s3));
        scale3 = std::max(scale3, std::abs(s3));
        ratio_num += t.comp[0][2] * a1 + t.comp[1][2] * a2;
        ratio_den += a1 * a1 + a2 * a2;
        o.csv_rows.push_back({std::to_string(i), num(t.comp[0][2]), num(a1), num(t.comp[1][2]), num(a2), num(p3), num(s3)});
    }
    const double tol = cfg.tol.value_or(1e-4);
    const double rel2 = err2 / scale2, rel3 = err3 / scale3;
    o.report["points"] = count;
    o.report["second"] = {{"relative_error", rel2}, {"ratio_phi_ss_to_d2phi", ratio_num / ratio_den}};
    o.report["third"] = {{"relative_error", rel3}};

    // order of vanishing of |phi| along sU and along sU + s^2/2 W
    OracleOptions opt = oracle(cfg);
    auto grid = s_grid(cfg, 3e-3, 1e-1);
    const auto& f = RadicalField::get(cfg.k1, cfg.k2);
    NormalField Ud = k1_field_diagonal(f, cfg.a);
    FitResult plain = taylor_order_fit(P, Deformation(Ud), grid, opt);
    FitResult corr = taylor_order_fit(P, Deformation(Ud, solve_w_closed(cfg.a, cfg.k1, cfg.k2).W), grid, opt);
    o.report["order_without_W"] = fit_json(plain.fit, grid.front(), grid.back());
    o.report["order_with_W"] = fit_json(corr.fit, grid.front(), grid.back());
    set_checks(o, {{"phi_ss_matches_d2phi", rel2 <= tol},
                   {"phi_sss_matches_d3phi", rel3 <= tol},
                   {"order_2_without_W", std::abs(plain.fit.slope - 2) <= 0.1},
                   {"order_3_with_W", std::abs(corr.fit.slope - 3) <= 0.1}});
    return o;
}

Outcome cmd_loja(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    const int N = cfg.ambient();
    o.report["N"] = N;
    Product P(cfg.k1, cfg.k2, N);
    auto grid = s_grid(cfg, 5e-4, 2e-2);
    const auto& f = RadicalField::get(cfg.k1, cfg.k2);
    Deformation D(k1_field_diagonal(f, cfg.a), solve_w_closed(cfg.a, cfg.k1, cfg.k2).W);
    FitResult r = loja_exponent(P, D, grid, oracle(cfg));
    o.report["fit"] = fit_json(r.fit, grid.front(), grid.back());
    o.report["expected_slope"] = 3.0;
    o.report["curve"] = curve_json(r.curve);
    set_checks(o, {{"slope", std::abs(r.fit.slope - 3.0) <= cfg.tol.value_or(0.15)}});
    curve_csv(o, r.curve);
    return o;
}

Outcome cmd_gradient_loja(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    const int N = cfg.ambient();
    o.report["N"] = N;
    Product P(cfg.k1, cfg.k2, N);
    auto grid = s_grid(cfg, 1e-3, 3e-2);
    const auto& f = RadicalField::get(cfg.k1, cfg.k2);
    Deformation D(k1_field_diagonal(f, cfg.a), solve_w_closed(cfg.a, cfg.k1, cfg.k2).W);
    FitResult r = gradient_loja_fit(P, D, grid, oracle(cfg));
    o.report["fit"] = fit_json(r.fit, grid.front(), grid.back());
    o.report["expected_slope"] = 4.0 / 3.0;
    o.report["curve"] = curve_json(r.curve);
    set_checks(o, {{"slope", std::abs(r.fit.slope - 4.0 / 3.0) <= cfg.tol.value_or(0.07)}});
    curve_csv(o, r.curve);
    return o;
}

Outcome cmd_flow(const RunConfig& cfg) {
    Outcome o;
    o.report = base_report(cfg);
    const int N = cfg.ambient();
    o.report["N"] = N;
    Product P(cfg.k1, cfg.k2, N);
    const auto& f = RadicalField::get(cfg.k1, cfg.k2);
    Deformation D(k1_field_diagonal(f, cfg.a), solve_w_closed(cfg.a, cfg.k1, cfg.k2).W);
    const int samples = cfg.points ? cfg.points : 12;
    FlowResult r = reduced_flow(P, D, cfg.s0, cfg.tau_min, cfg.tau_max, samples, oracle(cfg), cfg.reverse);
    const double s_end = r.trajectory.back().second;
    o.report["direction"] = cfg.reverse ? "reversed" : "forward";
    o.report["s0"] = cfg.s0;
    o.report["fit"] = fit_json(r.fit, cfg.tau_min, cfg.tau_max);
    o.report["expected_exponent"] = -0.5;
    o.report["steps"] = r.steps;
    o.report["s_end"] = s_end;
    o.report["escaped"] = std::abs(s_end) > std::abs(cfg.s0);
    json traj = json::array();
    o.csv_header = {"tau", "s"};
    for (const auto& [t, s] : r.trajectory) {
        traj.push_back({t, s});
        o.csv_rows.push_back({num(t), num(s)});
    }
    o.report["trajectory"] = traj;
    set_checks(o, {{"exponent", std::abs(r.fit.slope + 0.5) <= cfg.tol.value_or(0.05)}});
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome(const RunConfig&)>>>& table() {
    static const std::vector<std::pair<std::string, std::function<Outcome(const RunConfig&)>>> t = {
        {"moments", cmd_moments},       {"jacobi-basis", cmd_jacobi},        {"solve-w", cmd_solve_w},
        {"obstruction", cmd_obstruction}, {"verify-claims", cmd_claims},     {"taylor-check", cmd_taylor},
        {"loja-exponent", cmd_loja},    {"gradient-loja", cmd_gradient_loja}, {"reduced-flow", cmd_flow},
    };
    return t;
}

Outcome cmd_all(const RunConfig& cfg) {
    Outcome o;
    o.report = json{{"schema", 1}, {"command", "all"}};
    json parts = json::object();
    std::map<std::string, bool> checks;
    for (const auto& [name, fn] : table()) {
        RunConfig sub = cfg;
        sub.command = name;
        Outcome r = fn(sub);
        checks[name] = r.pass;
        parts[name] = r.report;
    }
    o.report["reports"] = parts;
    set_checks(o, checks);
    summary_csv(o);
    return o;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, fn] : table()) v.push_back(n);
        v.push_back("all");
        return v;
    }();
    return names;
}

Outcome run_command(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.command == "all") return cmd_all(cfg);
    for (const auto& [name, fn] : table())
        if (name == cfg.command) return fn(cfg);
    throw ConfigError("unknown subcommand: " + cfg.command);
}

}  // namespace shrinker::cli
