#include <doctest.h>

#include "periods/builtin.hpp"
#include "periods/errors.hpp"
#include "periods/mirror.hpp"
#include "periods/special_geometry.hpp"
#include "test_util.hpp"

using namespace pe;

TEST_CASE("mirror maps are compositional inverses") {
    for (const ThetaOperator& L : {builtin::lpf(), builtin::ltriangular()}) {
        MirrorMap mm = mirror_map(L, 20);
        CHECK(compose(mm.q_of_z, mm.z_of_q) == TruncatedSeries::variable());
        CHECK(compose(mm.z_of_q, mm.q_of_z) == TruncatedSeries::variable());
        CHECK(mm.q_of_z.coeff_at(Rational(1)) == 1);
        CHECK(mm.z_of_q.coeff_at(Rational(1)) == 1);
    }
}

TEST_CASE("mirror map of theta^2 is the identity") {
    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    MirrorMap mm = mirror_map(theta2, 10);
    CHECK(mm.q_of_z == TruncatedSeries::variable());
    CHECK(mm.z_of_q == TruncatedSeries::variable());
}

TEST_CASE("mirror-cubic inverse map is integral in the arithmetic gauge") {
    MirrorMap mm = mirror_map(builtin::lpf(), 21);
    Rational shift = builtin::gauge_shift_lpf();
    // a(q) = sum a_k q^k becomes integral when q is rescaled by 27
    for (long k = 1; k <= 20; ++k) {
        Rational scaled = mm.z_of_q.coeff_at(Rational(k)) * pow_rational(shift, k - 1);
        CHECK(is_integer(scaled));
    }
    CHECK(mm.z_of_q.coeff_at(Rational(2)) * shift == -15);   // a(27q)/27 = q - 15 q^2 + 171 q^3 ...
    CHECK(mm.z_of_q.coeff_at(Rational(3)) * shift * shift == 171);
}

TEST_CASE("algebraic Yukawa couplings of the bundled operators") {
    AlgebraicYukawa e = yukawa_algebraic(builtin::lpf());
    CHECK(e.exponent == -1);
    CHECK(e.num() == Poly::constant(Rational(1)));
    CHECK(e.den() == Poly({Rational(1), Rational(-1)}));

    AlgebraicYukawa k = yukawa_algebraic(builtin::lk3());
    CHECK(k.exponent == -2);
    CHECK(k.num() == Poly::constant(Rational(1)));
    CHECK(k.den() == Poly({Rational(1), Rational(-1)}));

    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    AlgebraicYukawa t = yukawa_algebraic(theta2);
    CHECK(t.exponent == -1);
    CHECK(t.factors.empty());
    CHECK(t.num() == Poly::constant(Rational(1)));
    CHECK(t.den() == Poly::constant(Rational(1)));

    CHECK_THROWS_AS(yukawa_algebraic(ThetaOperator("z", {Poly(), Poly::constant(Rational(1))})),
                    WrongOrder);
}

TEST_CASE("symmetric cubes carry a rational-power algebraic coupling") {
    ThetaOperator cube = deriv_to_theta(symmetric_cube(theta_to_deriv(builtin::ltriangular())), "z");
    AlgebraicYukawa y = yukawa_algebraic(cube);
    CHECK(!y.closed_rational());
    CHECK(y.exponent == -3);
    REQUIRE(y.factors.size() == 1);
    CHECK(y.factors[0].root == 1);
    CHECK(y.factors[0].power == Rational(-3, 2));
    CHECK_THROWS_AS(y.num(), NonClosedForm);
}

TEST_CASE("flat Yukawa couplings are constant for the bundled families") {
    YukawaCoupling e = yukawa_flat(builtin::lpf(), 20);
    CHECK(e.flat == TruncatedSeries::constant(Rational(1)));
    CHECK(e.flat_constant == 1);

    YukawaCoupling k = yukawa_flat(builtin::lk3(), 20);
    CHECK(k.flat == TruncatedSeries::constant(k.flat_constant));
    CHECK(k.flat_constant == 1);

    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    CHECK(yukawa_flat(theta2, 10).flat == TruncatedSeries::constant(Rational(1)));
}

TEST_CASE("the K3 operator and its square root share one mirror map") {
    // pi1 = u0 u1 over pi0 = u0^2 reduces to the triangular normalized period
    MirrorMap k3 = mirror_map(builtin::lk3(), 16);
    MirrorMap tri = mirror_map(builtin::ltriangular(), 16);
    CHECK(k3.q_of_z == tri.q_of_z);
    CHECK(k3.z_of_q == tri.z_of_q);
}

TEST_CASE("a symmetric cube has constant flat Yukawa") {
    ThetaOperator cube = deriv_to_theta(symmetric_cube(theta_to_deriv(builtin::ltriangular())), "z");
    YukawaCoupling y = yukawa_flat(cube, 14);
    CHECK(y.flat == TruncatedSeries::constant(y.flat_constant));
}

TEST_CASE("order-4 hypergeometric operators give the CY3 closed form") {
    ThetaOperator q5 = builtin::hypergeometric_operator(
        {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}, "z");
    AlgebraicYukawa a = yukawa_algebraic(q5);
    CHECK(a.exponent == -3);
    CHECK(a.num() == Poly::constant(Rational(1)));
    CHECK(a.den() == Poly({Rational(1), Rational(-1)}));
    YukawaCoupling y = yukawa_flat(q5, 8);
    CHECK(y.flat_constant == 1);
    // instanton corrections are genuinely nonzero for a CY3 family
    CHECK(y.flat.coeff_at(Rational(1)) != 0);
}

TEST_CASE("E8 mirror-map identity theta_q a = j^{-1} F^2") {
    int N = 18;
    MirrorMap mm = mirror_map(builtin::le8(), N);
    TruncatedSeries a = mm.z_of_q;
    TruncatedSeries F = hypergeometric_series({Rational(1, 6), Rational(5, 6)}, {Rational(1)}, N);
    TruncatedSeries Fq = compose(F, a);
    CHECK(a.theta() == (a - a * a) * Fq * Fq);
}

TEST_CASE("prepotential extraction from flat couplings") {
    TruncatedSeries one = TruncatedSeries::constant(Rational(1));
    Prepotential trivial = prepotential_from_yukawa(one, Rational(1));
    for (const auto& c : trivial.instanton) CHECK(c == 0);

    TruncatedSeries cq = TruncatedSeries(Rational(0), {Rational(2), Rational(1)}, false);
    Prepotential lin = prepotential_from_yukawa(cq, Rational(2));
    REQUIRE(!lin.instanton.empty());
    CHECK(lin.instanton[0] == 1);

    TruncatedSeries cq2 = TruncatedSeries(Rational(0), {Rational(5), Rational(0), Rational(8)}, false);
    Prepotential quad = prepotential_from_yukawa(cq2, Rational(5));
    REQUIRE(quad.instanton.size() == 2);
    CHECK(quad.instanton[0] == 0);
    CHECK(quad.instanton[1] == 1);

    CHECK_THROWS_AS(prepotential_from_yukawa(cq, Rational(7)), NonzeroConstantMismatch);
}

TEST_CASE("prepotential round trip on random couplings") {
    test::Rng rng;
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Rational> c(20);
        for (auto& x : c) x = rng.next_rational();
        TruncatedSeries flat(Rational(0), c, false);
        Prepotential F = prepotential_from_yukawa(flat, c[0]);
        CHECK(yukawa_from_prepotential(F, 20) == flat);
    }
}

TEST_CASE("special geometry potential at the cubic term") {
    PrecisionGuard guard(60);
    Prepotential F;
    F.kappa = Rational(1);
    Real y("1.25");
    Complex t(Real(0), y);
    Complex P = special_geometry_potential(F, t, t.conj(), 50);
    // (1/6)(2iy)^3 has magnitude (8/6) y^3 and is purely imaginary
    Real expect = Real(8) / 6 * y * y * y;
    CHECK(abs(abs(P) - expect) < pow(Real(10), -40));
    CHECK(abs(P.re) < pow(Real(10), -40));
}

TEST_CASE("Weil-Petersson metric degenerates to the Poincare metric") {
    Prepotential F;
    F.kappa = Rational(1);
    Prepotential F7;
    F7.kappa = Rational(7);
    Complex t(Real("0.3"), Real("0.9"));
    PrecisionGuard guard(60);
    Real expect = Real(3) / (4 * t.im * t.im);
    CHECK(abs(weil_petersson_metric(F, t, 50) - expect) < pow(Real(10), -40));
    CHECK(abs(weil_petersson_metric(F7, t, 50) - expect) < pow(Real(10), -40));
    CHECK(abs(weil_petersson_metric_fd(F, t, 50) - expect) < pow(Real(10), -25));
}

TEST_CASE("degenerate and divergent potentials are flagged") {
    Prepotential zero;
    zero.kappa = Rational(0);
    Complex t(Real(0), Real(1));
    CHECK_THROWS_AS(special_geometry_potential(zero, t, t.conj(), 30), DegeneratePotential);

    Prepotential F;
    F.kappa = Rational(1);
    F.instanton = {Rational(1)};
    Complex bad(Real(0), Real(-1));
    CHECK_THROWS_AS(special_geometry_potential(F, bad, bad.conj(), 30), DivergentTail);
}

TEST_CASE("metric from the potential matches the closed-form derivative with instantons") {
    Prepotential F;
    F.kappa = Rational(2);
    F.instanton = {Rational(1, 3), Rational(1, 7)};
    Complex t(Real("0.2"), Real("1.1"));
    PrecisionGuard guard(80);
    Real a = weil_petersson_metric(F, t, 60);
    Real b = weil_petersson_metric_fd(F, t, 60);
    CHECK(abs(a - b) < pow(Real(10), -30));
}
