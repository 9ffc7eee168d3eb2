#include <doctest.h>

#include "periods/builtin.hpp"
#include "periods/errors.hpp"
#include "periods/frobenius.hpp"
#include "test_util.hpp"

using namespace pe;

namespace {

DerivOperator deriv_from_polys(std::vector<Poly> ps) {
    std::vector<RationalFunction> c;
    for (auto& p : ps) c.emplace_back(std::move(p));
    return DerivOperator(std::move(c));
}

}  // namespace

TEST_CASE("theta and partial forms convert exactly both ways") {
    test::Rng rng;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Poly> coeffs;
        for (int k = 0; k < 3; ++k)
            coeffs.push_back(Poly({rng.next_rational(), rng.next_rational()}));
        if (coeffs.back().is_zero()) coeffs.back() = Poly::constant(Rational(1));
        ThetaOperator L("z", coeffs);
        CHECK(deriv_to_theta(theta_to_deriv(L), "z") == L);
    }
}

TEST_CASE("the Picard-Fuchs operator annihilates its holomorphic period") {
    ThetaOperator lpf = builtin::lpf();
    TruncatedSeries pi0 =
        hypergeometric_series({Rational(1, 3), Rational(2, 3)}, {Rational(1)}, 20);
    CHECK(apply(lpf, pi0).is_zero());
}

TEST_CASE("theta applied to log z") {
    std::vector<Poly> coeffs{Poly(), Poly::constant(Rational(1))};
    ThetaOperator theta("z", coeffs);
    LogSolution logz(Rational(0), {TruncatedSeries::inexact_zero(Rational(0), 10),
                                   TruncatedSeries::constant(Rational(1)) +
                                       TruncatedSeries::inexact_zero(Rational(0), 10)});
    LogSolution out = apply(theta, logz);
    CHECK(out == LogSolution(TruncatedSeries::constant(Rational(1)) +
                             TruncatedSeries::inexact_zero(Rational(0), 10)));
}

TEST_CASE("the K3 operator annihilates the single-log Frobenius solution") {
    ThetaOperator lk3 = builtin::lk3();
    FrobeniusBasis basis = frobenius_basis(lk3, ExpansionPoint::zero(), 16);
    CHECK(apply(lk3, basis.solutions[1]).is_zero());
    CHECK(apply(lk3, basis.solutions[2]).is_zero());
}

TEST_CASE("Fricke symmetry of the mirror cubic operator") {
    ThetaOperator lpf = builtin::lpf();
    CHECK(pullback(lpf, AffineSubstitution{Rational(-1), Rational(1)}) == lpf);
}

TEST_CASE("theta changes sign under inversion, up to content normalization") {
    ThetaOperator theta("z", {Poly(), Poly::constant(Rational(1))});
    CHECK(pullback(theta, ReciprocalSubstitution{}) == theta);
}

TEST_CASE("pullback by the degree-two map lands on the elliptic operator") {
    ThetaOperator pulled = pullback(
        builtin::ltriangular(),
        PolynomialSubstitution{Poly({Rational(0), Rational(4), Rational(-4)})});
    TruncatedSeries f =
        hypergeometric_series({Rational(1, 4), Rational(3, 4)}, {Rational(1)}, 22);
    CHECK(apply(pulled, f).is_zero());
}

TEST_CASE("pullback by an invertible affine map round-trips") {
    test::Rng rng;
    ThetaOperator lpf = builtin::lpf();
    for (int trial = 0; trial < 3; ++trial) {
        Rational a = rng.next_rational();
        if (a == 0) a = Rational(2);
        Rational b = rng.next_rational();
        ThetaOperator once = pullback(lpf, AffineSubstitution{a, b});
        ThetaOperator back = pullback(once, AffineSubstitution{Rational(1) / a, -b / a});
        CHECK(back == lpf);
    }
}

TEST_CASE("unsupported substitutions are rejected") {
    CHECK_THROWS_AS(pullback(builtin::lpf(), AffineSubstitution{Rational(0), Rational(1)}),
                    UnsupportedSubstitution);
    CHECK_THROWS_AS(pullback(builtin::lpf(), PolynomialSubstitution{Poly::constant(Rational(2))}),
                    UnsupportedSubstitution);
}

TEST_CASE("symmetric square of the triangular operator is the K3 operator") {
    DerivOperator tri = theta_to_deriv(builtin::ltriangular());
    ThetaOperator built = deriv_to_theta(symmetric_square(tri), "z");
    CHECK(built == builtin::lk3());
}

TEST_CASE("symmetric square of the constant-coefficient operator") {
    DerivOperator d2 = deriv_from_polys({Poly(), Poly(), Poly::constant(Rational(1))});
    DerivOperator sq = symmetric_square(d2);
    CHECK(sq.order() == 3);
    CHECK(sq.coeff(3) == RationalFunction(Rational(1)));
    CHECK(sq.coeff(2).is_zero());
    CHECK(sq.coeff(1).is_zero());
    CHECK(sq.coeff(0).is_zero());
    CHECK_THROWS_AS(symmetric_square(sq), WrongOrder);
}

TEST_CASE("symmetric square annihilates products of solutions") {
    // L2 = d^2 - 1 has e^{z}, e^{-z}; the square must kill e^{2z}, 1, e^{-2z}
    DerivOperator l2 = deriv_from_polys({Poly::constant(Rational(-1)), Poly(), Poly::constant(Rational(1))});
    DerivOperator sq = symmetric_square(l2);
    int N = 15;
    auto expseries = [&](long a) {
        std::vector<Rational> c(static_cast<size_t>(N));
        Rational t(1);
        for (int n = 0; n < N; ++n) {
            c[static_cast<size_t>(n)] = t;
            t = t * a / (n + 1);
        }
        return TruncatedSeries(Rational(0), c, false);
    };
    CHECK(apply(sq, expseries(2)).is_zero());
    CHECK(apply(sq, expseries(-2)).is_zero());
    CHECK(apply(sq, TruncatedSeries::constant(Rational(1))).is_zero());
}

TEST_CASE("symmetric square detection recovers a witness") {
    auto witness = is_symmetric_square(theta_to_deriv(builtin::lk3()));
    REQUIRE(witness.has_value());
    CHECK(gauge_equivalent(*witness, theta_to_deriv(builtin::ltriangular())));

    DerivOperator d3 = deriv_from_polys({Poly(), Poly(), Poly(), Poly::constant(Rational(1))});
    auto trivial = is_symmetric_square(d3);
    REQUIRE(trivial.has_value());
    CHECK(trivial->order() == 2);
    CHECK(trivial->coeff(0).is_zero());
    CHECK(trivial->coeff(1).is_zero());

    // d^3 + z d + 1 fails the normal-form shape test C = B'/2
    DerivOperator bad = deriv_from_polys(
        {Poly::constant(Rational(1)), Poly::variable(), Poly(), Poly::constant(Rational(1))});
    CHECK(!is_symmetric_square(bad).has_value());
}

TEST_CASE("detection round-trips over random second-order operators") {
    test::Rng rng;
    for (int trial = 0; trial < 4; ++trial) {
        Poly a0({rng.next_rational(), rng.next_rational()});
        Poly a1({rng.next_rational()});
        Poly a2({Rational(1), rng.next_rational()});
        DerivOperator m = deriv_from_polys({a0, a1, a2});
        DerivOperator sq = symmetric_square(m);
        auto witness = is_symmetric_square(sq);
        REQUIRE(witness.has_value());
        ThetaOperator lhs = deriv_to_theta(symmetric_square(*witness), "z");
        CHECK(lhs == deriv_to_theta(sq, "z"));
    }
}

TEST_CASE("normal form kills the subleading coefficient") {
    DerivOperator shifted = deriv_from_polys(
        {Poly::constant(Rational(1)), Poly::constant(Rational(2)), Poly::constant(Rational(1))});
    auto [nf, h] = normal_form(shifted);
    CHECK(nf.coeff(1).is_zero());
    CHECK(nf.coeff(0).is_zero());
    CHECK(h == RationalFunction(Rational(-1)));

    auto [nk3, hk3] = normal_form(theta_to_deriv(builtin::lk3()));
    CHECK(nk3.coeff(2).is_zero());
}

TEST_CASE("normal form of a symmetric square has the y''' + 4Q y' + 2Q' y shape") {
    test::Rng rng;
    for (int trial = 0; trial < 5; ++trial) {
        Poly a0({rng.next_rational(), rng.next_rational()});
        Poly a1({rng.next_rational(), rng.next_rational()});
        Poly a2({Rational(2), rng.next_rational()});
        DerivOperator m = deriv_from_polys({a0, a1, a2});
        auto [nf, h] = normal_form(symmetric_square(m));
        CHECK(nf.coeff(2).is_zero());
        CHECK(nf.coeff(0) == nf.coeff(1).derivative() * Rational(1, 2));
    }
}

TEST_CASE("symmetric cube annihilates cubes of solutions") {
    DerivOperator l2 = deriv_from_polys({Poly::constant(Rational(-1)), Poly(), Poly::constant(Rational(1))});
    DerivOperator cube = symmetric_cube(l2);
    CHECK(cube.order() == 4);
    int N = 15;
    auto expseries = [&](long a) {
        std::vector<Rational> c(static_cast<size_t>(N));
        Rational t(1);
        for (int n = 0; n < N; ++n) {
            c[static_cast<size_t>(n)] = t;
            t = t * a / (n + 1);
        }
        return TruncatedSeries(Rational(0), c, false);
    };
    CHECK(apply(cube, expseries(3)).is_zero());
    CHECK(apply(cube, expseries(1)).is_zero());
    CHECK(apply(cube, expseries(-3)).is_zero());

    auto witness = is_symmetric_cube(cube);
    REQUIRE(witness.has_value());
    CHECK(gauge_equivalent(*witness, l2));
}

TEST_CASE("symmetric cube of the triangular operator is detected") {
    DerivOperator tri = theta_to_deriv(builtin::ltriangular());
    DerivOperator cube = symmetric_cube(tri);
    auto witness = is_symmetric_cube(cube);
    REQUIRE(witness.has_value());
    CHECK(gauge_equivalent(*witness, tri));
    CHECK(!is_symmetric_cube(deriv_from_polys({Poly::constant(Rational(1)), Poly::variable(),
                                               Poly(), Poly(), Poly::constant(Rational(1))}))
               .has_value());
}

TEST_CASE("singular points") {
    auto pts = singular_points(builtin::lpf());
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].kind == SingularPoint::Finite);
    CHECK(pts[0].value == 0);
    CHECK(pts[1].value == 1);
    CHECK(pts[2].kind == SingularPoint::Infinity);

    auto k3 = singular_points(builtin::lk3());
    REQUIRE(k3.size() == 3);
    CHECK(k3[0].value == 0);
    CHECK(k3[1].value == 1);
    CHECK(k3[2].kind == SingularPoint::Infinity);

    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    auto t2 = singular_points(theta2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].value == 0);
    CHECK(t2[1].kind == SingularPoint::Infinity);

    // z^2 d^2 written in theta form is theta(theta-1): 0 is an ordinary point
    ThetaOperator ordinary("z", {Poly(), Poly::constant(Rational(-1)), Poly::constant(Rational(1))});
    auto ord = singular_points(ordinary);
    REQUIRE(ord.size() == 1);
    CHECK(ord[0].kind == SingularPoint::Infinity);
}

TEST_CASE("operator application is linear") {
    test::Rng rng;
    ThetaOperator lpf = builtin::lpf();
    TruncatedSeries f = rng.next_series(10), g = rng.next_series(10);
    Rational c = rng.next_rational();
    CHECK(apply(lpf, f + g * c) == apply(lpf, f) + apply(lpf, g) * c);
}
