#pragma once

#include <vector>

#include "periods/frobenius.hpp"
#include "periods/mp_complex.hpp"

namespace pe {

struct PathPolyline {
    std::vector<Complex> vertices;
};

// finite singular points of L as numeric values at the working precision
std::vector<Complex> numeric_singularities(const ThetaOperator& L);

// min distance from the polyline to the singular set (and degenerate-segment
// guard); throws PathTooCloseToSingularity when not positive
Real path_clearance(const PathPolyline& path, const std::vector<Complex>& singular);

// Continue a fundamental frame along the path by adaptive Taylor steps.
// `frame` is (order x columns): row i holds the i-th derivative values at
// path start; returns the frame at path end.
CMatrix taylor_continue(const ThetaOperator& L, const PathPolyline& path, CMatrix frame,
                        unsigned digits);

// numeric value of a log-solution and its first (order-1) derivatives at z,
// principal branch of log
std::vector<Complex> evaluate_log_solution(const LogSolution& sol, int nderivs, const Complex& z);

// frame whose columns are the basis solutions evaluated at z
CMatrix frobenius_frame(const FrobeniusBasis& basis, const Complex& z);

struct MonodromyMatrix {
    CMatrix entries;        // continued_j = sum_i entries[i][j] * original_i
    Complex determinant;
    Complex basepoint;
    std::string loop;
};

// loop: regular polygon around `around` through `basepoint`, counterclockwise
MonodromyMatrix monodromy(const ThetaOperator& L, const Complex& basepoint,
                          const ExpansionPoint& around, unsigned digits, int series_order);
// same, along an arbitrary closed polyline (first vertex = basepoint)
MonodromyMatrix monodromy_along(const ThetaOperator& L, const PathPolyline& loop,
                                unsigned digits, int series_order);

// rescale solution j by (2 pi i)^{-log_degree_j}: unipotent log monodromy
// becomes integral in this gauge
CMatrix log_gauge(const CMatrix& m, const FrobeniusBasis& basis);

// tau(alpha) = (pi_1/pi_0 - log shift)/(2 pi i) continued from the reference
// disk at 0 along `path` (path starts at the series basepoint)
Complex normalized_period_value(const ThetaOperator& L, const PathPolyline& path,
                                unsigned digits, const Rational& gauge_shift, int series_order);

struct CayleyResult {
    Complex tau_star;
    Real path_discrepancy;    // two homotopic path families compared
    Real orbifold_residual;   // |tau_orb| at the matching point
};

CayleyResult cayley_fixed_point(const ThetaOperator& L, unsigned digits,
                                const Rational& gauge_shift, int series_order);

// heuristic series order needed to evaluate a radius<1 Frobenius series at
// |z| = r to `digits` accuracy
int series_order_for(double r, unsigned digits);

}  // namespace pe
