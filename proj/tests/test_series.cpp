#include <doctest.h>

#include "periods/errors.hpp"
#include "periods/series.hpp"
#include "test_util.hpp"

using namespace pe;

TEST_CASE("product of (1+z)(1-z)") {
    TruncatedSeries one = TruncatedSeries::constant(Rational(1));
    TruncatedSeries z = TruncatedSeries::variable();
    TruncatedSeries lhs = (one + z) * (one - z);
    TruncatedSeries expected(Rational(0), {Rational(1), Rational(0), Rational(-1)}, true);
    CHECK(lhs == expected);
}

TEST_CASE("geometric series oracle for 1/(a(1-a))") {
    // 1/(1-a) = sum a^n by hand, so 1/(a(1-a)) = a^{-1} (1 + a + a^2 + ...)
    TruncatedSeries z = TruncatedSeries::variable();
    TruncatedSeries den = (z - z * z).truncated(7);
    TruncatedSeries q = divide(TruncatedSeries::constant(Rational(1)), den);
    CHECK(q.exponent() == -1);
    for (int n = 0; n < 5; ++n) CHECK(q.coeffs()[static_cast<size_t>(n)] == 1);
}

TEST_CASE("adding zero is the identity") {
    test::Rng rng;
    for (int i = 0; i < 8; ++i) {
        TruncatedSeries f = rng.next_series(10);
        CHECK(f + TruncatedSeries::zero() == f);
        CHECK(TruncatedSeries::zero() + f == f);
    }
}

TEST_CASE("division by an identically zero series is rejected") {
    TruncatedSeries z = TruncatedSeries::inexact_zero(Rational(0), 6);
    CHECK_THROWS_AS(divide(TruncatedSeries::constant(Rational(1)), z), DivisionByZeroSeries);
}

TEST_CASE("all-zero stored coefficients compare equal to zero") {
    CHECK(TruncatedSeries::inexact_zero(Rational(0), 6) == TruncatedSeries::zero());
    CHECK(TruncatedSeries(Rational(2), {Rational(0), Rational(0)}, false) ==
          TruncatedSeries::zero());
    CHECK(TruncatedSeries::inexact_zero(Rational(0), 6) !=
          TruncatedSeries::constant(Rational(1)));
}

TEST_CASE("ring axioms on random truncated series") {
    test::Rng rng;
    for (int i = 0; i < 6; ++i) {
        TruncatedSeries a = rng.next_series(9), b = rng.next_series(9), c = rng.next_series(9);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("composition with a monomial") {
    TruncatedSeries f(Rational(0), {Rational(1), Rational(1), Rational(1)}, true);  // 1 + z + z^2
    TruncatedSeries g = TruncatedSeries::monomial(Rational(2), Rational(1));        // 2a
    TruncatedSeries expect(Rational(0), {Rational(1), Rational(2), Rational(4)}, true);
    CHECK(compose(f, g) == expect);
}

TEST_CASE("composition with the identity") {
    test::Rng rng;
    for (int i = 0; i < 5; ++i) {
        TruncatedSeries f = rng.next_series(8);
        CHECK(compose(f, TruncatedSeries::variable()) == f);
    }
}

TEST_CASE("quadratic hypergeometric transformation as a composition check") {
    // oracle: independent series expansion of 2F1(1/4,3/4;1;a)
    int N = 10;
    TruncatedSeries f =
        hypergeometric_series({Rational(1, 8), Rational(3, 8)}, {Rational(1)}, N);
    TruncatedSeries z = TruncatedSeries::variable();
    TruncatedSeries inner = (z * Rational(4) - z * z * Rational(4)).truncated(N);
    TruncatedSeries lhs = compose(f, inner);
    TruncatedSeries rhs =
        hypergeometric_series({Rational(1, 4), Rational(3, 4)}, {Rational(1)}, N);
    CHECK(lhs == rhs);
}

TEST_CASE("composition domain errors") {
    TruncatedSeries f = hypergeometric_series({Rational(1, 2)}, {Rational(1)}, 8);
    TruncatedSeries g = TruncatedSeries::constant(Rational(1)) + TruncatedSeries::variable();
    CHECK_THROWS_AS(compose(f, g), CompositionDomain);
}

TEST_CASE("series reversion against the Lagrange-inversion oracle") {
    // f = z + z^2 reverts to sum (-1)^{n-1} C_{n-1} q^n with Catalan numbers
    TruncatedSeries f = TruncatedSeries::variable() +
                        TruncatedSeries::monomial(Rational(1), Rational(2));
    TruncatedSeries g = reverse_series(f, 8);
    std::vector<Rational> catalan{Rational(1)};
    for (int n = 1; n < 8; ++n) {
        Rational c(0);
        for (int k = 0; k < n; ++k) c += catalan[static_cast<size_t>(k)] * catalan[static_cast<size_t>(n - 1 - k)];
        catalan.push_back(c);
    }
    for (int n = 1; n <= 6; ++n) {
        Rational expect = catalan[static_cast<size_t>(n - 1)] * ((n % 2 == 1) ? 1 : -1);
        CHECK(g.coeff_at(Rational(n)) == expect);
    }
}

TEST_CASE("reversion is a two-sided compositional inverse") {
    test::Rng rng;
    for (int i = 0; i < 4; ++i) {
        std::vector<Rational> c{Rational(0), Rational(1), rng.next_rational(), rng.next_rational()};
        TruncatedSeries f(Rational(0), c, true);
        TruncatedSeries g = reverse_series(f, 12);
        TruncatedSeries fg = compose(f, g);
        TruncatedSeries gf = compose(g, f.truncated(12));
        CHECK(fg == TruncatedSeries::variable());
        CHECK(gf == TruncatedSeries::variable());
    }
    CHECK(reverse_series(TruncatedSeries::variable(), 6) == TruncatedSeries::variable());
    CHECK_THROWS_AS(reverse_series(TruncatedSeries::constant(Rational(3))), NotReversible);
}

TEST_CASE("exp and log") {
    CHECK(exp_series(TruncatedSeries::zero(), 6) == TruncatedSeries::constant(Rational(1)));
    TruncatedSeries f = TruncatedSeries::variable() +
                        TruncatedSeries::monomial(Rational(1), Rational(2));
    TruncatedSeries round = log_series(exp_series(f, 12), 12);
    CHECK(round == f);
    TruncatedSeries one_plus = TruncatedSeries::constant(Rational(1)) + TruncatedSeries::variable();
    CHECK(exp_series(log_series(one_plus, 10), 10) == one_plus);
    CHECK_THROWS_AS(exp_series(one_plus, 6), ElementaryDomain);
    CHECK_THROWS_AS(log_series(TruncatedSeries::variable(), 6), ElementaryDomain);
}

TEST_CASE("formal power against the binomial oracle") {
    TruncatedSeries f = TruncatedSeries::constant(Rational(1)) - TruncatedSeries::variable();
    TruncatedSeries h = pow_series(f, Rational(1, 2), 6);
    // binomial(1/2, n) (-1)^n computed directly
    Rational binom(1);
    for (int n = 1; n < 6; ++n) {
        binom *= (Rational(1, 2) - (n - 1)) / n;
        CHECK(h.coeff_at(Rational(n)) == binom * ((n % 2 == 1) ? -1 : 1));
    }
    TruncatedSeries sq = h * h;
    CHECK(sq == f.truncated(6));
}

TEST_CASE("hypergeometric coefficients against the Pochhammer oracle") {
    TruncatedSeries f =
        hypergeometric_series({Rational(1, 3), Rational(2, 3)}, {Rational(1)}, 6);
    CHECK(f.coeff_at(Rational(0)) == 1);
    CHECK(f.coeff_at(Rational(1)) == Rational(2, 9));
    CHECK(f.coeff_at(Rational(2)) == Rational(10, 81));

    TruncatedSeries g = hypergeometric_series(
        {Rational(1, 4), Rational(2, 4), Rational(3, 4)}, {Rational(1), Rational(1)}, 4);
    CHECK(g.coeff_at(Rational(1)) == Rational(3, 32));

    TruncatedSeries h =
        hypergeometric_series({Rational(0), Rational(1, 2)}, {Rational(1)}, 8);
    CHECK(h == TruncatedSeries::constant(Rational(1)));

    CHECK_THROWS_AS(hypergeometric_series({Rational(1, 2)}, {Rational(-2)}, 6), PoleInParameters);
}

TEST_CASE("Clausen identity to order 30") {
    int N = 31;
    TruncatedSeries F = hypergeometric_series({Rational(1, 8), Rational(3, 8)}, {Rational(1)}, N);
    TruncatedSeries G = hypergeometric_series(
        {Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {Rational(1), Rational(1)}, N);
    CHECK(F * F == G);
}
