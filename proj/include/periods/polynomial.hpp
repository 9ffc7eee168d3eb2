#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "periods/rational.hpp"
#include "periods/series.hpp"

namespace pe {

// Dense univariate polynomial over Q, lowest degree first.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
    static Poly constant(const Rational& v);
    static Poly variable();

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const;
    const Rational& lead() const;
    long valuation() const;  // lowest nonzero degree; 0 for the zero polynomial

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    Poly operator/(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    Poly compose(const Poly& inner) const;
    Poly shift_arg(const Rational& c) const;  // p(x + c)
    Poly mul_power(long k) const;             // p * x^k
    Poly div_power(long k) const;             // exact division by x^k

    // every coefficient an integer?
    bool is_integral() const;
    // p = scale * primitive with primitive integral, content 1, positive lead
    std::pair<Rational, Poly> primitive() const;

    TruncatedSeries to_series() const;
    std::string str(const std::string& var = "z") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// quotient and remainder over Q
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic

// rational roots with multiplicities; the remaining factor has no rational
// roots (or had coefficients too large to factor, see the flag)
struct RationalRoots {
    std::map<Rational, int> roots;
    Poly residual;       // rational-root-free cofactor (monic-scaled arbitrary)
    bool complete = true;  // false when divisor enumeration was abandoned
};
RationalRoots rational_roots(const Poly& p);

// numeric roots of the residual part, double precision (Durand-Kerner)
std::vector<std::pair<double, double>> numeric_roots(const Poly& p);

// Quotient num/den over Q, reduced, denominator monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(Rational(1))) {}
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(const Rational& v)
        : num_(Poly::constant(v)), den_(Poly::constant(Rational(1))) {}
    explicit RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(Rational(1))) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator*(const Rational& s) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const;
    Rational eval(const Rational& x) const;  // throws MathError on a pole
    RationalFunction compose(const RationalFunction& inner) const;

    // series expansion around 0 (Laurent allowed), n coefficients
    TruncatedSeries to_series(int order) const;
    std::string str(const std::string& var = "z") const;

private:
    Poly num_, den_;
    void reduce();
};

RationalFunction poly_compose_rational(const Poly& p, const RationalFunction& inner);

}  // namespace pe
