#include "shrinker/poly2.hpp"
#include "shrinker/radical.hpp"
#include "shrinker/sqrt2.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace shrinker;

TEST_CASE("rat canonicalises and parse_rational round-trips") {
    BigRat q = rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(parse_rational("-3/2") == q);
    CHECK(parse_rational("12/8") == rat(3, 2));
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("double factorial and snapping") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(snap_to_rational(0.3333333333, 100) == rat(1, 3));
    CHECK(snap_to_rational(-2.5, 10) == rat(-5, 2));
}

TEST_CASE("radical scalars at the shrinker radii") {
    const auto& f = RadicalField::get(1, 1);
    auto r1 = RadicalScalar::r1(f);
    CHECK(r1 * r1 == RadicalScalar(f, 2));
    CHECK(std::abs(r1.to_double() - std::sqrt(2.0)) < 1e-15);
    CHECK((r1 - RadicalScalar(f, rat(3, 2))).sign() < 0);
    CHECK((r1 - RadicalScalar(f, rat(7, 5))).sign() > 0);
    CHECK(r1.pow(-2) == RadicalScalar(f, rat(1, 2)));

    // 2k2 = 8 shares the square class of 2k1 = 2, so r2 folds onto 2 r1
    const auto& g = RadicalField::get(1, 4);
    CHECK(RadicalScalar::r2(g) == RadicalScalar::r1(g) * BigRat(2));
    CHECK(RadicalScalar::r2(g).pow(2) == RadicalScalar(g, 8));
}

TEST_CASE("radical inverse on random elements") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> n(-9, 9), d(1, 5);
    for (auto [k1, k2] : {std::pair{1, 2}, {2, 3}, {3, 5}, {1, 1}, {6, 3}}) {
        const auto& f = RadicalField::get(k1, k2);
        for (int t = 0; t < 20; ++t) {
            RadicalScalar x(f, rat(n(rng), d(rng)), rat(n(rng), d(rng)), rat(n(rng), d(rng)), rat(n(rng), d(rng)));
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == RadicalScalar(f, 1));
            const double xd = x.to_double();
            CHECK(x.sign() == (xd > 0) - (xd < 0));
        }
    }
}

TEST_CASE("sqrt2 scalars") {
    Sqrt2Scalar s = Sqrt2Scalar::sqrt2();
    CHECK(s * s == Sqrt2Scalar(2));
    CHECK((Sqrt2Scalar(1) + s) * (Sqrt2Scalar(-1) + s) == Sqrt2Scalar(1));
    CHECK((Sqrt2Scalar(3) - s * Sqrt2Scalar(2)).sign() > 0);  // 3 - 2 sqrt2
    CHECK((Sqrt2Scalar(rat(141, 100)) - s).sign() < 0);
    CHECK(Sqrt2Scalar(5, 3).inverse() * Sqrt2Scalar(5, 3) == Sqrt2Scalar(1));
}

TEST_CASE("shift by sqrt2") {
    ShiftedPoly expect = ShiftedPoly::monomial(2, 0) + ShiftedPoly::monomial(1, 0, Sqrt2Scalar(0, 2)) + ShiftedPoly(2);
    CHECK(shift_sqrt2(BivarPoly::monomial(2, 0)) == expect);

    BivarPoly p = parse_bivar("3*r1^4*r2 - r1*r2^2/2 + 7");
    CHECK(rational_part_if_exact(unshift_sqrt2(shift_sqrt2(p))) == p);
    const double sq = std::sqrt(2.0);
    CHECK(std::abs(eval_double(shift_sqrt2(p), 0.3, 0.7) - eval_double(p, 0.3 + sq, 0.7 + sq)) < 1e-12);
}

TEST_CASE("bivariate polynomial algebra") {
    BivarPoly x = BivarPoly::var(1), y = BivarPoly::var(2);
    BivarPoly s = x * x + y * y;
    CHECK(s.pow(3).coeff(2, 4) == 3);
    CHECK(divide_exact(s.pow(2) * (x + y), s) == s * (x + y));
    CHECK_FALSE(divide_exact(s + BivarPoly(1), s).has_value());
    CHECK((x * y * y).swapped() == x * x * y);
    CHECK(parse_bivar(s.pow(2).to_string()) == s.pow(2));
    CHECK(eval_rational(s, rat(1, 2), 3) == rat(37, 4));

    auto rep = sign_report(x * x - y * BigRat(2) + BivarPoly(rat(-1, 3)));
    CHECK(rep.negatives.size() == 2);
    CHECK(rep.min_coefficient == -2);
}
