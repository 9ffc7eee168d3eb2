#include "periods/special_geometry.hpp"

#include "periods/errors.hpp"

namespace pe {

namespace {

struct InstEval {
    Complex value, d1, d2;  // F_inst and its first two t-derivatives
};

// side = +1 evaluates at q = exp(2 pi i t); side = -1 the conjugate leg,
// q = exp(-2 pi i tbar), with derivatives taken in tbar
InstEval eval_instanton(const Prepotential& F, const Complex& t, int side) {
    Real two_pi = 2 * const_pi();
    Complex itp = side > 0 ? Complex(Real(0), two_pi) : Complex(Real(0), -two_pi);
    Complex q = exp(itp * t);
    if (abs(q) >= 1)
        throw DivergentTail("instanton series evaluated with |q| >= 1 (Im t <= 0)");
    InstEval out;
    Complex qd(Real(1), Real(0));
    for (size_t i = 0; i < F.instanton.size(); ++i) {
        long d = static_cast<long>(i) + 1;
        qd = qd * q;
        Complex fd = Complex(F.instanton[i]) * qd;
        Complex ddt = itp * Real(d);
        out.value = out.value + fd;
        out.d1 = out.d1 + fd * ddt;
        out.d2 = out.d2 + fd * ddt * ddt;
    }
    return out;
}

bool degenerate(const Prepotential& F) {
    if (F.kappa != 0) return false;
    for (const auto& c : F.instanton)
        if (c != 0) return false;
    return true;
}

}  // namespace

Complex special_geometry_potential(const Prepotential& F, const Complex& t,
                                   const Complex& conjugate_t, unsigned digits) {
    PrecisionGuard guard(digits + 15);
    if (degenerate(F))
        throw DegeneratePotential("kappa = 0 with no instanton terms: e^{-K} vanishes identically");
    InstEval a = eval_instanton(F, t, +1);
    InstEval b = eval_instanton(F, conjugate_t, -1);
    Complex T = t - conjugate_t;
    Complex kappa(F.kappa);
    Rational sixth(1, 6);
    Complex P = kappa * Complex(sixth) * T * T * T + T * (a.d1 + b.d1) -
                (a.value - b.value) * Real(2);
    return P;
}

Real weil_petersson_metric(const Prepotential& F, const Complex& t, unsigned digits) {
    PrecisionGuard guard(digits + 15);
    if (degenerate(F))
        throw DegeneratePotential("kappa = 0 with no instanton terms: metric undefined");
    Complex tbar = t.conj();
    InstEval a = eval_instanton(F, t, +1);
    InstEval b = eval_instanton(F, tbar, -1);
    Complex T = t - tbar;
    Complex kappa(F.kappa);
    Complex half = Complex(Rational(1, 2));
    Complex P = kappa * Complex(Rational(1, 6)) * T * T * T + T * (a.d1 + b.d1) -
                (a.value - b.value) * Real(2);
    Complex Pt = kappa * half * T * T + (a.d1 + b.d1) + T * a.d2 - a.d1 * Real(2);
    Complex Ptb = -(kappa * half * T * T) - (a.d1 + b.d1) + T * b.d2 + b.d1 * Real(2);
    Complex Ptt = -(kappa * T) + b.d2 - a.d2;
    Complex g = -((Ptt * P - Pt * Ptb) / (P * P));
    return g.re;
}

Real weil_petersson_metric_fd(const Prepotential& F, const Complex& t, unsigned digits) {
    // -(1/4) Laplacian of log|P| in (x, y); internal precision is raised so
    // the h^2 truncation dominates and stays far below the caller's target
    unsigned work = digits * 4 + 40;
    PrecisionGuard guard(work);
    Real h = pow(Real(10), -static_cast<long>(digits));
    auto K = [&](const Real& x, const Real& y) {
        Complex tt(x, y);
        Complex P = special_geometry_potential(F, tt, tt.conj(), work);
        return log(abs(P));
    };
    Real x = t.re, y = t.im;
    Real f0 = K(x, y);
    Real lap = (K(x + h, y) + K(x - h, y) + K(x, y + h) + K(x, y - h) - 4 * f0) / (h * h);
    return -lap / 4;
}

}  // namespace pe
