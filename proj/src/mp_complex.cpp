#include "periods/mp_complex.hpp"

#include <mpfr.h>

#include <sstream>

#include "periods/errors.hpp"

namespace pe {

Real const_pi() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real to_real(const Rational& q) {
    return Real(q);
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n = norm2(b);
    if (n == 0) throw MathError("complex division by zero");
    return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

Real norm2(const Complex& z) {
    return z.re * z.re + z.im * z.im;
}

Real abs(const Complex& z) {
    return sqrt(norm2(z));
}

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex log(const Complex& z) {
    if (z.re == 0 && z.im == 0) throw MathError("log of zero");
    return Complex(log(norm2(z)) / 2, atan2(z.im, z.re));
}

Complex pow(const Complex& z, const Rational& r) {
    if (r == 0) return Complex(Real(1), Real(0));
    return exp(log(z) * to_real(r));
}

std::string real_str(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::scientific);
}

std::string complex_str(const Complex& z, unsigned digits) {
    return real_str(z.re, digits) + (z.im < 0 ? " - " : " + ") + real_str(abs(z.im), digits) + "i";
}

CMatrix cmatrix_identity(int n) {
    CMatrix m(static_cast<size_t>(n), std::vector<Complex>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Complex(Real(1), Real(0));
    return m;
}

CMatrix cmatrix_mul(const CMatrix& a, const CMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    CMatrix c(n, std::vector<Complex>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            Complex s;
            for (size_t t = 0; t < k; ++t) s = s + a[i][t] * b[t][j];
            c[i][j] = s;
        }
    return c;
}

CMatrix cmatrix_solve(CMatrix a, CMatrix b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = norm2(a[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            Real v = norm2(a[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) throw MathError("singular linear system in continuation");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Complex f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
            for (size_t c = 0; c < b[0].size(); ++c) b[r][c] = b[r][c] - f * b[col][c];
        }
    }
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < b[0].size(); ++c) b[r][c] = b[r][c] / a[r][r];
    return b;
}

Complex cmatrix_det(CMatrix a) {
    size_t n = a.size();
    Complex det(Real(1), Real(0));
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = norm2(a[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            Real v = norm2(a[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) return Complex();
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = -det;
        }
        det = det * a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Complex f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

}  // namespace pe
