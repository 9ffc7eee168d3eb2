#include <doctest.h>

#include "periods/builtin.hpp"
#include "periods/continuation.hpp"
#include "periods/errors.hpp"

using namespace pe;

namespace {

Complex eval_series(const TruncatedSeries& s, const Complex& z) {
    Complex acc;
    const auto& cs = s.coeffs();
    for (size_t i = cs.size(); i-- > 0;) acc = acc * z + Complex(cs[i]);
    return acc * pow(z, s.exponent());
}

}  // namespace

TEST_CASE("continuation agrees with direct series evaluation") {
    unsigned digits = 50;
    PrecisionGuard guard(digits + 25);
    ThetaOperator lpf = builtin::lpf();
    int order = series_order_for(0.2, digits + 20);
    FrobeniusBasis basis = frobenius_basis(lpf, ExpansionPoint::zero(), order);

    Complex a(Rational(1, 10)), b(Rational(1, 5));
    CMatrix frame = frobenius_frame(basis, a);
    PathPolyline seg;
    seg.vertices = {a, b};
    CMatrix end = taylor_continue(lpf, seg, frame, digits + 10);

    TruncatedSeries pi0 = basis.solutions[0].parts()[0];
    Complex direct = eval_series(pi0, b);
    CHECK(abs(end[0][0] - direct) < pow(Real(10), -30));

    auto direct_col = evaluate_log_solution(basis.solutions[1], 2, b);
    CHECK(abs(end[0][1] - direct_col[0]) < pow(Real(10), -30));
    CHECK(abs(end[1][1] - direct_col[1]) < pow(Real(10), -30));
}

TEST_CASE("zero-length paths act as the identity") {
    PrecisionGuard guard(40);
    ThetaOperator lpf = builtin::lpf();
    FrobeniusBasis basis = frobenius_basis(lpf, ExpansionPoint::zero(), 60);
    Complex a(Rational(1, 10));
    CMatrix frame = frobenius_frame(basis, a);
    PathPolyline p;
    p.vertices = {a};
    CMatrix end = taylor_continue(lpf, p, frame, 30);
    CHECK(abs(end[0][0] - frame[0][0]) == 0);
}

TEST_CASE("constants continue to constants when the operator has no order-0 term") {
    PrecisionGuard guard(50);
    ThetaOperator theta2("z", {Poly(), Poly(), Poly::constant(Rational(1))});
    CMatrix frame{{Complex(Rational(1))}, {Complex(Rational(0))}};
    PathPolyline p;
    p.vertices = {Complex(Rational(1)), Complex(Real(2), Real(1)), Complex(Real(1), Real(3))};
    CMatrix end = taylor_continue(theta2, p, frame, 40);
    CHECK(abs(end[0][0] - Complex(Rational(1))) < pow(Real(10), -35));
    CHECK(abs(end[1][0]) < pow(Real(10), -35));
}

TEST_CASE("loops around regular points have trivial monodromy") {
    unsigned digits = 40;
    PrecisionGuard guard(digits + 25);
    ThetaOperator lpf = builtin::lpf();
    int order = series_order_for(0.3, digits + 20);
    MonodromyMatrix m =
        monodromy(lpf, Complex(Rational(3, 10)), ExpansionPoint::finite(Rational(1, 2)), digits, order);
    Real tol = pow(Real(10), -static_cast<long>(digits) + 10);
    CHECK(abs(m.entries[0][0] - Complex(Rational(1))) < tol);
    CHECK(abs(m.entries[1][1] - Complex(Rational(1))) < tol);
    CHECK(abs(m.entries[0][1]) < tol);
    CHECK(abs(m.entries[1][0]) < tol);
}

TEST_CASE("monodromy determinants at the three singular points are 1") {
    unsigned digits = 40;
    PrecisionGuard guard(digits + 25);
    ThetaOperator lpf = builtin::lpf();
    int order = series_order_for(0.35, digits + 20);
    for (const auto& around : {ExpansionPoint::zero(), ExpansionPoint::finite(Rational(1))}) {
        Complex base = around.value == 0 ? Complex(Rational(3, 10)) : Complex(Rational(7, 10));
        MonodromyMatrix m = monodromy(lpf, base, around, digits, order);
        // exponent sums vanish at 0 and at 1, so det = 1
        CHECK(abs(m.determinant - Complex(Rational(1))) < pow(Real(10), -30));
    }
}

TEST_CASE("paths through a singular point are rejected") {
    ThetaOperator lpf = builtin::lpf();
    PrecisionGuard guard(40);
    FrobeniusBasis basis = frobenius_basis(lpf, ExpansionPoint::zero(), 40);
    Complex a(Rational(1, 10));
    CMatrix frame = frobenius_frame(basis, a);
    PathPolyline bad;
    bad.vertices = {a, Complex(Rational(2))};  // passes through alpha = 1
    CHECK_THROWS_AS(taylor_continue(lpf, bad, frame, 30), PathTooCloseToSingularity);
}

TEST_CASE("continuation is path-homotopy invariant") {
    unsigned digits = 45;
    PrecisionGuard guard(digits + 25);
    ThetaOperator lpf = builtin::lpf();
    int order = series_order_for(0.1, digits + 20);
    FrobeniusBasis basis = frobenius_basis(lpf, ExpansionPoint::zero(), order);
    Complex a(Rational(1, 10));
    Complex target(Real("0.5"), Real("0.5"));
    CMatrix frame = frobenius_frame(basis, a);

    PathPolyline p1, p2;
    p1.vertices = {a, Complex(Real("0.1"), Real("0.4")), target};
    p2.vertices = {a, Complex(Real("0.45"), Real("0.1")), target};
    CMatrix e1 = taylor_continue(lpf, p1, frame, digits + 10);
    CMatrix e2 = taylor_continue(lpf, p2, frame, digits + 10);
    Real tol = pow(Real(10), -static_cast<long>(digits) + 10);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(abs(e1[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                      e2[static_cast<size_t>(i)][static_cast<size_t>(j)]) < tol);
}

TEST_CASE("normalized period values land on the upper half plane") {
    unsigned digits = 40;
    ThetaOperator lpf = builtin::lpf();
    int order = series_order_for(0.5, digits + 20);
    PrecisionGuard guard(digits + 25);
    PathPolyline p;
    p.vertices = {Complex(Rational(1, 10)), Complex(Rational(1, 2))};
    Complex tau = normalized_period_value(lpf, p, digits, builtin::gauge_shift_lpf(), order);
    CHECK(tau.im > 0);
}

TEST_CASE("tau minus the gauged logarithm stays bounded near 0") {
    unsigned digits = 40;
    ThetaOperator lpf = builtin::lpf();
    PrecisionGuard guard(digits + 25);
    int order = series_order_for(0.1, digits + 20);
    PathPolyline p;
    p.vertices = {Complex(Rational(1, 50))};
    Complex tau = normalized_period_value(lpf, p, digits, builtin::gauge_shift_lpf(), order);
    Complex two_pi_i(Real(0), 2 * const_pi());
    Complex logterm = (log(Complex(Rational(1, 50))) - log(Complex(Rational(27)))) / two_pi_i;
    // the residue is S(1/50)/(2 pi i), a small holomorphic correction
    CHECK(abs(tau - logterm) < Real("0.01"));
    CHECK(abs(tau - logterm) > 0);
}

TEST_CASE("doubling the precision shrinks the Fricke residual by ten orders") {
    ThetaOperator lpf = builtin::lpf();
    auto residual = [&](unsigned digits) {
        PrecisionGuard guard(digits + 25);
        int order = series_order_for(0.1, digits + 20);
        auto tau_at = [&](const Rational& x) {
            PathPolyline p;
            p.vertices = {Complex(Rational(1, 10)), Complex(x)};
            return normalized_period_value(lpf, p, digits, builtin::gauge_shift_lpf(), order);
        };
        Complex prod = tau_at(Rational(1, 5)) * tau_at(Rational(4, 5));
        return abs(prod + Complex(Rational(1, 3)));
    };
    PrecisionGuard outer(130);
    Real r40 = residual(40);
    Real r80 = residual(80);
    CHECK(r80 < r40 * pow(Real(10), -10));
}
