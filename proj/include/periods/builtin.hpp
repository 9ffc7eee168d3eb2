#pragma once

#include "periods/diffop.hpp"
#include "periods/toric.hpp"

namespace pe {
namespace builtin {

// hypergeometric operator theta^n - z (theta+a_1)...(theta+a_n), cleared to
// integer coefficients
ThetaOperator hypergeometric_operator(const std::vector<Rational>& upper, const std::string& var);

ThetaOperator lpf();         // theta^2 - a(theta+1/3)(theta+2/3), mirror cubic
ThetaOperator lk3();         // theta^3 - z(theta+1/4)(theta+2/4)(theta+3/4)
ThetaOperator ltriangular(); // theta^2 - z(theta+1/8)(theta+3/8)
ThetaOperator lelliptic();   // theta^2 - a(theta+1/4)(theta+3/4)
ThetaOperator le8();         // theta^2 - a(theta+1/6)(theta+5/6)

// multiplicative gauge constants relating the monic flat coordinate to the
// arithmetic normalization (q_arith = q_monic / shift)
Rational gauge_shift_lpf();        // 27
Rational gauge_shift_lelliptic();  // 64
Rational gauge_shift_le8();        // 432
Rational gauge_shift_lk3();        // 256

LatticePolytope2D p2_polytope();       // hull{(2,-1),(-1,2),(-1,-1)}
LatticePolytope2D p2_dual_polytope();  // hull{(1,0),(0,1),(-1,-1)}

}  // namespace builtin
}  // namespace pe
