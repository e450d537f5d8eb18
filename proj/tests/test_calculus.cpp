#include "shrinker/calculus.hpp"

#include <doctest.h>

#include <random>

using namespace shrinker;

namespace {

struct Diag {
    const RadicalField& f;
    std::vector<BigRat> a;
    SpherePoly u, v1, v2;
    BigRat S = 0;
    Diag(int k1, int k2, std::vector<BigRat> coeffs)
        : f(RadicalField::get(k1, k2)), a(std::move(coeffs)), u(diagonal_u(f, a)), v1(f), v2(f) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            SpherePoly x = SpherePoly::coord(f, 1, static_cast<int>(i)), y = SpherePoly::coord(f, 2, static_cast<int>(i));
            v1 += x * x * a[i] * a[i];
            v2 += y * y * a[i] * a[i];
            S += a[i] * a[i];
        }
    }
    RadicalScalar r(int b) const { return RadicalScalar::r(f, b); }
};

BigRat small_rat(std::mt19937_64& g) {
    std::uniform_int_distribution<long> n(-5, 5), d(1, 4);
    return rat(n(g), d(g));
}

// random polynomial of degree <= 2 in each factor
SpherePoly random_poly(const RadicalField& f, std::mt19937_64& g) {
    SpherePoly p = SpherePoly::constant(f, small_rat(g));
    std::uniform_int_distribution<int> i1(0, f.k1), i2(0, f.k2);
    for (int t = 0; t < 4; ++t) {
        SpherePoly m = SpherePoly::constant(f, small_rat(g));
        m *= SpherePoly::coord(f, 1, i1(g)) * SpherePoly::coord(f, 2, i2(g));
        if (t & 1) m *= SpherePoly::coord(f, 1, i1(g));
        p += m;
    }
    return p;
}

NormalField random_field(const RadicalField& f, std::mt19937_64& g) {
    return NormalField(random_poly(f, g), random_poly(f, g));
}

}  // namespace

TEST_CASE("gradient identities") {
    Diag d(2, 3, {1, rat(-2, 3), 3});
    auto r1 = d.r(1);
    CHECK(tangential_gradient_pair(d.u, d.u, 1) == d.v2 - d.u * d.u * r1.pow(-2));
    CHECK(tangential_gradient_pair(d.u, d.u, 2) == d.v1 - d.u * d.u * d.r(2).pow(-2));
    auto x1 = SpherePoly::coord(d.f, 1, 0), x2 = SpherePoly::coord(d.f, 1, 1);
    CHECK(tangential_gradient_pair(x1, x2, 1) == -(x1 * x2 * r1.pow(-2)));
    CHECK(tangential_gradient_pair(SpherePoly::constant(d.f, 5), d.u, 1).is_zero());
}

TEST_CASE("Laplacian eigenfunctions") {
    for (int k1 = 1; k1 <= 6; ++k1)
        for (int k2 = 1; k2 <= 6; ++k2) {
            const auto& f = RadicalField::get(k1, k2);
            auto x = SpherePoly::coord(f, 1, k1), y = SpherePoly::coord(f, 2, 0);
            CHECK(laplace_beltrami(x) == x * rat(-1, 2));
            CHECK(laplace_beltrami(y) == y * rat(-1, 2));
            CHECK(laplace_beltrami(x * y) == -(x * y));
        }
}

TEST_CASE("Laplacian of the quadratic building blocks") {
    for (auto [k1, k2] : {std::pair{1, 1}, {1, 2}, {3, 2}}) {
        Diag d(k1, k2, {rat(1, 2), -2});
        auto one = RadicalScalar(d.f, 1);
        auto c = (one + d.r(1).pow(-2) + d.r(2).pow(-2)) * BigRat(-2);
        CHECK(laplace_beltrami(d.u * d.u) == d.u * d.u * c + d.v1 * BigRat(2) + d.v2 * BigRat(2));
        CHECK(laplace_beltrami(d.v1) == -(d.v1 * (one + d.r(1).pow(-2) * BigRat(2))) + SpherePoly::constant(d.f, 2 * d.S));
        CHECK(laplace_beltrami(d.v2) == -(d.v2 * (one + d.r(2).pow(-2) * BigRat(2))) + SpherePoly::constant(d.f, 2 * d.S));
    }
}

TEST_CASE("Hessian contraction") {
    const auto& f = RadicalField::get(1, 1);
    CHECK(hessian_contract(SpherePoly::constant(f, 3), SpherePoly::coord(f, 1, 0), SpherePoly::coord(f, 2, 1)).is_zero());

    // int u Hess u(grad u, grad u) = -1/2 int |grad u|^4 + 1/6 int u^4
    for (auto [k1, k2] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
        Diag d(k1, k2, {1, rat(3, 2)});
        SpherePoly g2 = gradient_pair(d.u, d.u);
        RadicalScalar lhs = (d.u * hessian_contract(d.u, d.u, d.u)).integrate();
        RadicalScalar rhs = (g2 * g2).integrate() * rat(-1, 2) + (d.u * d.u * d.u * d.u).integrate() * rat(1, 6);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("integration by parts and Green's identity for L") {
    std::mt19937_64 g(23);
    for (auto [k1, k2] : {std::pair{1, 1}, {2, 1}, {2, 3}}) {
        const auto& f = RadicalField::get(k1, k2);
        for (int t = 0; t < 4; ++t) {
            SpherePoly p = random_poly(f, g), q = random_poly(f, g);
            CHECK(gradient_pair(p, q).integrate() == -(q * laplace_beltrami(p)).integrate());
            NormalField V = random_field(f, g), W = random_field(f, g);
            CHECK(l2_inner(apply_L(V), W) == l2_inner(V, apply_L(W)));
            CHECK(l2_inner(V, W) == l2_inner(W, V));
        }
    }
}

TEST_CASE("apply_L examples") {
    const auto& f = RadicalField::get(1, 2);
    auto x = SpherePoly::coord(f, 1, 0), y = SpherePoly::coord(f, 2, 2);
    CHECK(apply_L(NormalField(x * y, SpherePoly(f))).is_zero());
    NormalField c(SpherePoly::constant(f, 7), SpherePoly(f));
    CHECK(apply_L(c) == c);
    NormalField flat{SpherePoly(f), SpherePoly(f), {x}};
    CHECK(apply_L(flat).is_zero());
}

TEST_CASE("norm of a diagonal K1 field") {
    for (auto [k1, k2] : {std::pair{1, 1}, {2, 3}, {4, 1}}) {
        Diag d(k1, k2, {2, rat(-1, 3)});
        NormalField U = k1_field_diagonal(d.f, d.a);
        auto R1 = d.r(1) * d.r(1), R2 = d.r(2) * d.r(2);
        CHECK(l2_inner(U, U) == (R1 + R2) * R1 * R2 * d.S / BigRat((k1 + 1) * (k2 + 1)));
        CHECK(l2_inner(U, NormalField(d.f)).is_zero());
    }
}

TEST_CASE("second and third variation basics") {
    std::mt19937_64 g(31);
    const auto& f = RadicalField::get(1, 2);
    NormalField V = random_field(f, g), W = random_field(f, g);
    CHECK(d2phi_normal(V, W) == d2phi_normal(W, V));
    CHECK(d2phi_normal(NormalField(f), W).is_zero());
    CHECK(d3phi_normal(NormalField(f)).is_zero());
    BigRat t = rat(-3, 2);
    RadicalScalar tr(f, t);
    CHECK(d3phi_normal(V * tr) == d3phi_normal(V) * (tr * tr * tr));
    NormalField flat{SpherePoly(f), SpherePoly(f), {SpherePoly::coord(f, 1, 0)}};
    CHECK_THROWS(d2phi_normal(flat, W));
    CHECK_THROWS(d3phi_normal(flat));
}

TEST_CASE("the two second-variation variants agree only when k1 == k2") {
    const auto& f11 = RadicalField::get(2, 2);
    NormalField U = k1_field_diagonal(f11, {1, 2});
    CHECK(d2phi_normal(U, U, D2Variant::Printed) == d2phi_normal(U, U));
    const auto& f12 = RadicalField::get(1, 2);
    NormalField V = k1_field_diagonal(f12, {1, 2});
    CHECK_FALSE(d2phi_normal(V, V, D2Variant::Printed) == d2phi_normal(V, V));
}

TEST_CASE("Jacobi basis") {
    for (int k1 = 1; k1 <= 3; ++k1)
        for (int k2 = 1; k2 <= 3; ++k2) {
            JacobiBasis B = jacobi_basis(k1, k2, k1 + k2 + 3);
            CHECK(B.K1.size() == static_cast<std::size_t>((k1 + 1) * (k2 + 1)));
            for (const auto& V : B.K) CHECK(apply_L(V).is_zero());
            for (const auto& V : B.K0)
                for (const auto& W : B.K1) CHECK(l2_inner(V, W).is_zero());
        }
    CHECK_THROWS(jacobi_basis(2, 2, 5));
}

TEST_CASE("projections") {
    std::mt19937_64 g(37);
    JacobiBasis B = jacobi_basis(1, 2, 5);
    const auto& f = RadicalField::get(1, 2);
    for (int t = 0; t < 3; ++t) {
        std::vector<std::vector<BigRat>> c(2, std::vector<BigRat>(3));
        for (auto& row : c)
            for (auto& x : row) x = small_rat(g);
        NormalField U = k1_field(f, c);
        CHECK(project_K(U, B, Subspace::K1) == U);
        CHECK(project_K(U, B, Subspace::K0).is_zero());
        CHECK(project_K(d2phi_normal(U, U), B, Subspace::K).is_zero());

        NormalField V = random_field(f, g);
        CHECK(project_K(V, B, Subspace::K0) + project_K(V, B, Subspace::K1) == project_K(V, B, Subspace::K));
    }
}

TEST_CASE("SVD normal form") {
    auto diag = svd_diagonalize({{3, 0, 0}, {0, 2, 0}});
    CHECK(diag.a_rational == std::vector<BigRat>{3, 2});
    CHECK(diag.residual < 1e-12);
    CHECK(std::abs(std::abs(diag.R1(0, 0)) - 1) < 1e-12);

    auto rank1 = svd_diagonalize({{0, 1}, {0, 0}});
    CHECK(rank1.a_rational[0] == 1);
    CHECK(rank1.a_rational[1] == 0);

    std::mt19937_64 g(41);
    std::vector<std::vector<BigRat>> c(3, std::vector<BigRat>(4));
    for (auto& row : c)
        for (auto& x : row) x = small_rat(g);
    auto r = svd_diagonalize(c);
    CHECK(r.residual < 1e-12);
    CHECK(std::is_sorted(r.a.rbegin(), r.a.rend()));
}
