#pragma once

#include "periods/mirror.hpp"
#include "periods/mp_complex.hpp"

namespace pe {

// e^{-K} on a one-dimensional slice, with the quadratic gauge part set to
// zero: (kappa/6)(t-tbar)^3 + (t-tbar)(F' + conj F') - 2(F - conj F),
// F the instanton sum evaluated at q = exp(2 pi i t)
Complex special_geometry_potential(const Prepotential& F, const Complex& t,
                                   const Complex& conjugate_t, unsigned digits);

// Weil-Petersson metric coefficient -d_t d_tbar log e^{-K} at t (tbar = conj t),
// from the closed-form mixed derivative of the potential
Real weil_petersson_metric(const Prepotential& F, const Complex& t, unsigned digits);

// same quantity by central finite differences of the potential, for
// black-box checks of special_geometry_potential
Real weil_petersson_metric_fd(const Prepotential& F, const Complex& t, unsigned digits);

}  // namespace pe
