#pragma once

#include <string>
#include <vector>

#include "periods/frobenius.hpp"

namespace pe {

struct MirrorMap {
    TruncatedSeries q_of_z;  // z exp(S), exponent 1, leading coefficient 1
    TruncatedSeries z_of_q;  // compositional inverse
    int order = 0;
};

MirrorMap mirror_map(const ThetaOperator& L, int order);

// closed form z^exponent * prod (1 - z/root)^power, calibrated so the leading
// series coefficient is 1; powers are integers for all the bundled operators
// but symmetric cubes produce genuine rational powers
struct YukawaFactor {
    Rational root;
    Rational power;
};

struct AlgebraicYukawa {
    Rational exponent{0};
    std::vector<YukawaFactor> factors;

    bool closed_rational() const;  // all powers integral
    // rational-function view, defined when closed_rational(); throws
    // NonClosedForm with the exponent data otherwise
    Poly num() const;
    Poly den() const;

    TruncatedSeries to_series(int order) const;
    std::string str(const std::string& var = "z") const;
};

// solves theta W = -(2/n) (subleading/leading) W in d-form and calibrates the
// leading coefficient to 1
AlgebraicYukawa yukawa_algebraic(const ThetaOperator& L);

struct YukawaCoupling {
    AlgebraicYukawa algebraic;
    TruncatedSeries flat;     // series in q
    Rational flat_constant;   // calibration record: value at q = 0
};

YukawaCoupling yukawa_flat(const ThetaOperator& L, int order);

struct Prepotential {
    Rational kappa{0};
    // quadratic part and the constant are opaque gauge labels, invisible to
    // the third derivative
    std::string c2_label = "c2";
    std::string c1_label = "c1";
    std::string constant_label = "chi/2*zeta(3)";
    std::vector<Rational> instanton;  // coefficient of q^d at index d-1
};

Prepotential prepotential_from_yukawa(const TruncatedSeries& flat, const Rational& kappa);
// kappa + sum d^3 f_d q^d
TruncatedSeries yukawa_from_prepotential(const Prepotential& F, int order);

}  // namespace pe
