#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <vector>

#include "periods/rational.hpp"

namespace pe {

using Real = boost::multiprecision::mpfr_float;  // runtime precision

// Scoped working precision (decimal digits); mpfr_float precision is
// thread-local state
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : old_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(old_); }
    PrecisionGuard(const PrecisionGuard&) = delete;

private:
    unsigned old_;
};

Real const_pi();
Real to_real(const Rational& q);

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Rational& q) : re(to_real(q)), im(0) {}
    static Complex from_doubles(double r, double i) { return Complex(Real(r), Real(i)); }

    Complex operator-() const { return Complex(-re, -im); }
    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator*(const Real& s) const { return Complex(re * s, im * s); }
    Complex operator/(const Real& s) const { return Complex(re / s, im / s); }
    Complex conj() const { return Complex(re, -im); }
};

Real abs(const Complex& z);
Real norm2(const Complex& z);  // |z|^2
Complex exp(const Complex& z);
Complex log(const Complex& z);                 // principal branch
Complex pow(const Complex& z, const Rational& r);  // exp(r log z)

std::string real_str(const Real& x, unsigned digits);
std::string complex_str(const Complex& z, unsigned digits);

using CMatrix = std::vector<std::vector<Complex>>;

CMatrix cmatrix_identity(int n);
CMatrix cmatrix_mul(const CMatrix& a, const CMatrix& b);
// solve A X = B by Gaussian elimination with partial pivoting
CMatrix cmatrix_solve(CMatrix a, CMatrix b);
Complex cmatrix_det(CMatrix a);

}  // namespace pe
