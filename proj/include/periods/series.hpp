#pragma once

#include <string>
#include <vector>

#include "periods/rational.hpp"

namespace pe {

// Power series z^exponent * (c_0 + c_1 z + ... + c_{N-1} z^{N-1}) with exact
// rational coefficients.  An inexact series carries an O(z^{exponent+N})
// tail; an exact one (polynomials, monomials) has no tail, so arithmetic
// never shrinks the other operand's window through it.
class TruncatedSeries {
public:
    static constexpr int kDefaultOrder = 20;

    TruncatedSeries() : exponent_(0), exact_(true) {}  // exact zero
    TruncatedSeries(Rational exponent, std::vector<Rational> coeffs, bool exact = false);

    static TruncatedSeries zero() { return TruncatedSeries(); }
    static TruncatedSeries constant(const Rational& c);
    static TruncatedSeries variable();  // z, exact
    static TruncatedSeries monomial(const Rational& c, const Rational& exponent);
    static TruncatedSeries inexact_zero(const Rational& exponent, int order);

    bool exact() const { return exact_; }
    int order() const { return static_cast<int>(coeffs_.size()); }
    const Rational& exponent() const { return exponent_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;  // all stored coefficients vanish
    // coefficient of z^e; 0 below the window, throws past a finite window end
    Rational coeff_at(const Rational& e) const;
    Rational constant_term() const { return coeff_at(Rational(0)); }

    // drop leading zero coefficients (value-preserving)
    TruncatedSeries trimmed() const;
    // restrict to at most n stored coefficients (marks the result inexact
    // when coefficients were dropped)
    TruncatedSeries truncated(int n) const;
    TruncatedSeries shifted(const Rational& dexp) const;  // * z^dexp

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator*(const Rational& c) const;

    TruncatedSeries theta() const;       // z d/dz
    TruncatedSeries derivative() const;  // d/dz

    // equality on the shared knowledge window (zero series of any shape
    // compare equal)
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const;

private:
    Rational exponent_;
    std::vector<Rational> coeffs_;
    bool exact_;

    friend TruncatedSeries add_impl(const TruncatedSeries&, const TruncatedSeries&, int sign);
};

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b, int order_hint = -1);
TruncatedSeries inverse(const TruncatedSeries& b, int order_hint = -1);

// f(g), g without constant term; f with integer exponent
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

// compositional inverse of f = c1 z + O(z^2), c1 != 0
TruncatedSeries reverse_series(const TruncatedSeries& f, int order_hint = -1);

TruncatedSeries exp_series(const TruncatedSeries& f, int order_hint = -1);
TruncatedSeries log_series(const TruncatedSeries& f, int order_hint = -1);
TruncatedSeries pow_series(const TruncatedSeries& f, const Rational& r, int order_hint = -1);

// coefficient of z^n is prod (a_i)_n / prod (b_j)_n / n!
TruncatedSeries hypergeometric_series(const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower, int order);

}  // namespace pe
