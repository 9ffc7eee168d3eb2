#include <doctest.h>

#include "periods/builtin.hpp"
#include "periods/errors.hpp"
#include "periods/frobenius.hpp"

using namespace pe;

TEST_CASE("indicial roots of the bundled operators") {
    auto at0 = indicial_roots(builtin::lpf(), ExpansionPoint::zero());
    REQUIRE(at0.roots.size() == 1);
    CHECK(at0.roots[0].first == 0);
    CHECK(at0.roots[0].second == 2);

    auto at1 = indicial_roots(builtin::lpf(), ExpansionPoint::finite(Rational(1)));
    REQUIRE(at1.roots.size() == 1);
    CHECK(at1.roots[0].first == 0);
    CHECK(at1.roots[0].second == 2);

    auto k3 = indicial_roots(builtin::lk3(), ExpansionPoint::zero());
    REQUIRE(k3.roots.size() == 1);
    CHECK(k3.roots[0].first == 0);
    CHECK(k3.roots[0].second == 3);

    auto inf = indicial_roots(builtin::lpf(), ExpansionPoint::infinity());
    REQUIRE(inf.roots.size() == 2);
    CHECK(inf.roots[0] == std::make_pair(Rational(1, 3), 1));
    CHECK(inf.roots[1] == std::make_pair(Rational(2, 3), 1));
}

TEST_CASE("irregular singular points are reported") {
    // z theta + 1, i.e. z^2 d + z + stray constant: solution exp(1/z)
    ThetaOperator L("z", {Poly::constant(Rational(1)), Poly::variable()});
    CHECK_THROWS_AS(indicial_roots(L, ExpansionPoint::zero()), IrregularSingular);
}

TEST_CASE("integer-spaced distinct roots are rejected") {
    // chi = theta(theta-1), roots 0 and 1
    ThetaOperator L("z", {Poly({Rational(0), Rational(-1)}), Poly::constant(Rational(-1)),
                          Poly::constant(Rational(1))});
    CHECK_THROWS_AS(frobenius_basis(L, ExpansionPoint::zero(), 8), ResonantIntegerGap);
}

TEST_CASE("Frobenius basis of the mirror cubic operator") {
    FrobeniusBasis basis = frobenius_basis(builtin::lpf(), ExpansionPoint::zero(), 14);
    REQUIRE(basis.solutions.size() == 2);
    const LogSolution& pi0 = basis.solutions[0];
    const LogSolution& pi1 = basis.solutions[1];

    CHECK(pi0.log_degree() == 0);
    CHECK(pi0.parts()[0] ==
          hypergeometric_series({Rational(1, 3), Rational(2, 3)}, {Rational(1)}, 14));

    CHECK(pi1.log_degree() == 1);
    CHECK(pi1.parts()[1] == pi0.parts()[0]);  // monic log part
    // rho-derivative of a_1(rho) = (rho+1/3)(rho+2/3)/(rho+1)^2 at rho = 0
    CHECK(pi1.parts()[0].coeff_at(Rational(1)) == Rational(5, 9));

    CHECK(apply(builtin::lpf(), pi0).is_zero());
    CHECK(apply(builtin::lpf(), pi1).is_zero());
}

TEST_CASE("K3 log-solution coefficients carry harmonic-number differences") {
    FrobeniusBasis basis = frobenius_basis(builtin::lk3(), ExpansionPoint::zero(), 12);
    REQUIRE(basis.solutions.size() == 3);
    CHECK(basis.solutions[2].log_degree() == 2);
    const TruncatedSeries& t = basis.solutions[1].parts()[0];
    for (long n = 1; n <= 10; ++n) {
        Rational H4n(0), Hn(0);
        for (long k = 1; k <= 4 * n; ++k) H4n += Rational(1, k);
        for (long k = 1; k <= n; ++k) Hn += Rational(1, k);
        Rational expected = Rational(factorial(static_cast<unsigned>(4 * n))) /
                            Rational(pow(Integer(factorial(static_cast<unsigned>(n))), 4)) *
                            Rational(4) * (H4n - Hn) /
                            Rational(pow(Integer(4), static_cast<unsigned>(4 * n)));
        CHECK(t.coeff_at(Rational(n)) == expected);
    }
}

TEST_CASE("basis of theta^2 is {1, log z}") {
    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    FrobeniusBasis basis = frobenius_basis(theta2, ExpansionPoint::zero(), 8);
    REQUIRE(basis.solutions.size() == 2);
    CHECK(basis.solutions[0].parts()[0] == TruncatedSeries::constant(Rational(1)));
    CHECK(basis.solutions[1].parts()[1] == TruncatedSeries::constant(Rational(1)));
    CHECK(basis.solutions[1].parts()[0].is_zero());
}

TEST_CASE("basis at the orbifold point has pure power solutions") {
    FrobeniusBasis basis = frobenius_basis(builtin::lpf(), ExpansionPoint::infinity(), 10);
    REQUIRE(basis.solutions.size() == 2);
    CHECK(basis.solutions[0].exponent() == Rational(1, 3));
    CHECK(basis.solutions[1].exponent() == Rational(2, 3));
    CHECK(basis.solutions[0].log_degree() == 0);
    CHECK(basis.solutions[1].log_degree() == 0);
    ThetaOperator rec = recenter(builtin::lpf(), ExpansionPoint::infinity());
    CHECK(apply(rec, basis.solutions[0]).is_zero());
    CHECK(apply(rec, basis.solutions[1]).is_zero());
}

TEST_CASE("annihilation and monic normalization across the K3 tower") {
    FrobeniusBasis basis = frobenius_basis(builtin::lk3(), ExpansionPoint::zero(), 12);
    for (const auto& sol : basis.solutions) {
        CHECK(apply(builtin::lk3(), sol).is_zero());
        CHECK(sol.parts().back().constant_term() == 1);
    }
}

TEST_CASE("normalized period series of the mirror cubic") {
    FrobeniusBasis basis = frobenius_basis(builtin::lpf(), ExpansionPoint::zero(), 10);
    TruncatedSeries S = normalized_period_series(basis);
    // hand-computed from the rho-derivatives: S = 5/9 a + 37/162 a^2 + ...
    CHECK(S.coeff_at(Rational(0)) == 0);
    CHECK(S.coeff_at(Rational(1)) == Rational(5, 9));
    CHECK(S.coeff_at(Rational(2)) == Rational(37, 162));
}

TEST_CASE("normalized period series of theta^2 vanishes") {
    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    TruncatedSeries S = normalized_period_series(frobenius_basis(theta2, ExpansionPoint::zero(), 8));
    CHECK(S.is_zero());
}
