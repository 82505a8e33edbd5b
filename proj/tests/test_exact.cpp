#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kschur/linalg.hpp"
#include "kschur/tpoly.hpp"
#include "kschur/trat.hpp"

using namespace kschur;

TEST_CASE("tpoly basics") {
    TPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(TPoly(1).is_one());
    CHECK(TPoly(0).is_zero());
    CHECK(TPoly::t_power(2).degree() == 2);
    CHECK(TPoly::t_power(0) == TPoly(1));
    CHECK(TPoly::from_coeffs({Int(1), Int(0), Int(0)}) == TPoly(1));
    CHECK(TPoly::t_power(3, Int(-2)).coeff(3) == -2);
    CHECK(TPoly::t_power(3).coeff(7) == 0);
}

TEST_CASE("tpoly arithmetic") {
    TPoly t = TPoly::t_power(1);
    TPoly p = t * t + TPoly(2) * t + TPoly(1);  /* (t+1)^2 */
    CHECK(p == (t + TPoly(1)) * (t + TPoly(1)));
    CHECK(p - p == TPoly());
    CHECK((-p) + p == TPoly());
    CHECK(p.eval_at_one() == 4);
    CHECK(p.times_t_power(2).degree() == 4);
    CHECK(Int(3) * t == TPoly::t_power(1, Int(3)));
    CHECK(p.str() == "t^2 + 2*t + 1");
    CHECK((t - TPoly(1)).has_nonneg_coeffs() == false);
    CHECK(p.has_nonneg_coeffs());
    Rat half(1, 2);
    CHECK(p.eval(half) == Rat(9, 4));
}

TEST_CASE("tpoly exact division") {
    TPoly t = TPoly::t_power(1);
    TPoly num = (t + TPoly(1)) * (t - TPoly(1));
    auto q = num.divide_exact(t + TPoly(1));
    REQUIRE(q.has_value());
    CHECK(*q == t - TPoly(1));
    CHECK(!num.divide_exact(TPoly()).has_value());
    CHECK(!(t + TPoly(1)).divide_exact(TPoly(2)).has_value());
    CHECK(!num.divide_exact(t + TPoly(2)).has_value());
}

TEST_CASE("trat reduces to lowest terms") {
    TPoly t = TPoly::t_power(1);
    TRat a(t * t - TPoly(1), t + TPoly(1));  /* = t - 1 */
    CHECK(a == TRat(t - TPoly(1)));
    TRat b = TRat(TPoly(1), t) + TRat(TPoly(1), t);
    CHECK(b == TRat(TPoly(2), t));
    CHECK(a * TRat(TPoly(0)) == TRat());
    CHECK_THROWS(TRat(TPoly(1), TPoly()));
}

TEST_CASE("unitriangular solve") {
    using M = std::vector<std::vector<Int>>;
    M m{{Int(1), Int(2)}, {Int(0), Int(1)}};
    std::vector<Int> b{Int(5), Int(3)};
    auto x = unitriangular_solve(m, b);
    CHECK(x[1] == 3);
    CHECK(x[0] == -1);
    M bad{{Int(2), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(unitriangular_solve(bad, b), NonUnitDiagonal);
    M lower{{Int(1), Int(0)}, {Int(3), Int(1)}};
    CHECK_THROWS_AS(unitriangular_solve(lower, b), std::invalid_argument);
}

TEST_CASE("dense solve over rational functions") {
    TPoly t = TPoly::t_power(1);
    using M = std::vector<std::vector<TRat>>;
    M m{{TRat(t), TRat(TPoly(1))}, {TRat(TPoly(1)), TRat(TPoly(1))}};
    std::vector<TRat> b{TRat(t * t), TRat(t)};
    auto x = dense_solve(m, b);
    /* t*x0 + x1 = t^2, x0 + x1 = t  =>  x0 = t, x1 = 0 */
    CHECK(x[0] == TRat(t));
    CHECK(x[1] == TRat());
    M sing{{TRat(TPoly(1)), TRat(TPoly(1))}, {TRat(TPoly(1)), TRat(TPoly(1))}};
    CHECK_THROWS(dense_solve(sing, b));
}
