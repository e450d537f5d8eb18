#include "shrinker/numeric.hpp"
#include "shrinker/obstruction.hpp"

#include <doctest.h>

#include <cmath>

using namespace shrinker;
using namespace shrinker::numeric;

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("phi vanishes on the undeformed product") {
    for (auto [k1, k2] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
        Product P(k1, k2, k1 + k2 + 2);
        Deformation D = clifford_direction(k1, k2, true);
        for (const auto& p : random_points(P, 5, 1)) CHECK(norm2(phi_pointwise(P, D, 0.0, p)) < 1e-8);
    }
}

TEST_CASE("phi is normal to the deformed immersion") {
    Product P(1, 2, 5);
    Deformation D = clifford_direction(1, 2, true);
    const double s = 0.2;
    for (const auto& p : random_points(P, 6, 2)) {
        PointDerivs d = point_derivs(P, D, p, 1e-3, 4);
        Geometry<double> g = geometry(d, s);
        const double nphi = norm2(g.phi);
        REQUIRE(nphi > 0);
        for (int i = 0; i < d.n; ++i) {
            double dot = 0, nt = 0;
            for (int c = 0; c < d.N; ++c) {
                double t = d.base[1][i * d.N + c] + s * d.dU[1][i * d.N + c] + s * s / 2 * d.dW[1][i * d.N + c];
                dot += t * g.phi[c];
                nt += t * t;
            }
            CHECK(std::abs(dot) <= 1e-8 * nphi * std::sqrt(nt));
        }
    }
}

TEST_CASE("Gaussian area of the product matches the closed form") {
    const double pi = std::acos(-1.0);
    for (auto [k1, k2] : {std::pair{1, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 3}}) {
        Product P(k1, k2, k1 + k2 + 2);
        Deformation D = clifford_direction(k1, k2, false);
        Quadrature Q = product_quadrature(P, 8);
        const int n = k1 + k2;
        const double closed = std::pow(4 * pi, -n / 2.0) * std::exp(-n / 2.0) * P.area();
        CHECK(gaussian_area(P, D, 0.0, Q) == doctest::Approx(closed).epsilon(1e-6));
        if (k1 == 1 && k2 == 1) CHECK(closed == doctest::Approx(2 * pi / std::exp(1.0)).epsilon(1e-12));
    }
}

TEST_CASE("quadrature weights and sampling are reproducible") {
    for (auto [k1, k2] : {std::pair{1, 1}, {2, 4}}) {
        Product P(k1, k2, k1 + k2 + 2);
        Quadrature Q = product_quadrature(P, 6);
        double w = 0;
        for (double x : Q.weights) w += x;
        CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
        auto a = random_points(P, 4, 99), b = random_points(P, 4, 99);
        for (int i = 0; i < 4; ++i) {
            CHECK(a[i].w1 == b[i].w1);
            CHECK(norm2(a[i].w2) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("finite differences converge at fourth order") {
    Product P(1, 1, 4);
    Deformation D = clifford_direction(1, 1, true);
    auto p = random_points(P, 1, 5)[0];
    const double s = 0.1;
    auto diff = [&](double h) {
        auto a = phi_pointwise(P, D, s, p, h), b = phi_pointwise(P, D, s, p, h / 2);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return norm2(a);
    };
    CHECK(diff(1e-2) / diff(5e-3) >= 3.5);
}

TEST_CASE("s-derivatives of phi match the exact variations for k1 != k2") {
    const int k1 = 1, k2 = 2;
    Product P(k1, k2, k1 + k2 + 2);
    const auto& f = RadicalField::get(k1, k2);
    NormalField U = k1_field(f, {{1, rat(1, 2), 0}, {rat(-1, 3), 0, 2}});
    Deformation D(U);
    CompiledField d2(d2phi_normal(U, U)), d3(d3phi_normal(U)), cu(U);
    for (const auto& p : random_points(P, 4, 8)) {
        PhiTaylor t = phi_taylor(P, D, p);
        auto x = sphere_coords(P, p);
        const double scale = std::abs(d2.u1(x.data())) + std::abs(d2.u2(x.data()));
        CHECK(std::abs(t.comp[0][2] - d2.u1(x.data())) <= 1e-4 * scale);
        CHECK(std::abs(t.comp[1][2] - d2.u2(x.data())) <= 1e-4 * scale);
        const double u1 = cu.u1(x.data()), u2 = cu.u2(x.data());
        const double p3 = t.comp[0][3] * u1 + t.comp[1][3] * u2, s3 = d3.u1(x.data()) * u1 + d3.u2(x.data()) * u2;
        CHECK(std::abs(p3 - s3) <= 1e-4 * (std::abs(s3) + 1));
        CHECK(std::abs(t.comp[0][0]) < 1e-8);
    }
}

TEST_CASE("compiled polynomials agree with exact evaluation") {
    const auto& f = RadicalField::get(2, 1);
    SpherePoly p = SpherePoly::parse(f, "3*x1^2*y2 - r1*x2*x3/5 + 7");
    CompiledPoly c(p);
    std::vector<double> pt{0.3, -1.1, 0.7, 0.4, -0.9};
    CHECK(c(pt.data()) == doctest::Approx(p.evaluate(pt)).epsilon(1e-14));
}

TEST_CASE("reduced flow from the critical point stays put") {
    Product P(1, 1, 4);
    FlowResult r = reduced_flow(P, clifford_direction(1, 1, true), 0.0, 10, 100, 5);
    for (const auto& [tau, s] : r.trajectory) CHECK(s == 0.0);
    CHECK_THROWS_AS(reduced_flow(P, clifford_direction(1, 1, true), 0.1, 10, 5, 5), std::invalid_argument);
}

TEST_CASE("log-log fit") {
    auto x = log_grid(1e-3, 1e-1, 9);
    CHECK(x.front() == doctest::Approx(1e-3));
    CHECK(x.back() == doctest::Approx(1e-1));
    std::vector<double> y;
    for (double t : x) y.push_back(3 * std::pow(t, 2.5));
    FitReport r = loglog_fit(x, y);
    CHECK(r.slope == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(r.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK(r.max_residual < 1e-10);
    CHECK(r.n_points == 9);
    CHECK_THROWS_AS(loglog_fit({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(loglog_fit({1, 2, 3, 4}, {1, 2, 3, 4}), std::invalid_argument);
    y[2] = 0;
    CHECK_THROWS_AS(loglog_fit(x, y), std::invalid_argument);
}
