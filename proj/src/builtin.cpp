#include "periods/builtin.hpp"

namespace pe {
namespace builtin {

ThetaOperator hypergeometric_operator(const std::vector<Rational>& upper, const std::string& var) {
    size_t n = upper.size();
    // product (x + a_i)
    Poly prod = Poly::constant(Rational(1));
    for (const auto& a : upper) prod = prod * Poly({a, Rational(1)});
    std::vector<Poly> coeffs(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        std::vector<Rational> c{-prod.coeff(static_cast<long>(k))};
        coeffs[k] = Poly(std::move(c)).mul_power(1);  // -coeff * z
    }
    coeffs[n] = coeffs[n] + Poly::constant(Rational(1));  // + theta^n
    return ThetaOperator(var, std::move(coeffs));
}

ThetaOperator lpf() {
    return hypergeometric_operator({Rational(1, 3), Rational(2, 3)}, "alpha");
}

ThetaOperator lk3() {
    return hypergeometric_operator({Rational(1, 4), Rational(2, 4), Rational(3, 4)}, "z");
}

ThetaOperator ltriangular() {
    return hypergeometric_operator({Rational(1, 8), Rational(3, 8)}, "z");
}

ThetaOperator lelliptic() {
    return hypergeometric_operator({Rational(1, 4), Rational(3, 4)}, "alpha");
}

ThetaOperator le8() {
    return hypergeometric_operator({Rational(1, 6), Rational(5, 6)}, "alpha");
}

Rational gauge_shift_lpf() { return Rational(27); }
Rational gauge_shift_lelliptic() { return Rational(64); }
Rational gauge_shift_le8() { return Rational(432); }
Rational gauge_shift_lk3() { return Rational(256); }

LatticePolytope2D p2_polytope() {
    return LatticePolytope2D({{2, -1}, {-1, 2}, {-1, -1}});
}

LatticePolytope2D p2_dual_polytope() {
    return LatticePolytope2D({{1, 0}, {0, 1}, {-1, -1}});
}

}  // namespace builtin
}  // namespace pe
