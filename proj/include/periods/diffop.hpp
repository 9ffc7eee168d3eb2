#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "periods/polynomial.hpp"
#include "periods/series.hpp"

namespace pe {

// A Frobenius-type solution: z^exponent * sum_k parts[k] * (log z)^k, where
// parts[k] is stored with its exponent folded into the series.
class LogSolution {
public:
    LogSolution() = default;
    LogSolution(Rational exponent, std::vector<TruncatedSeries> parts);
    explicit LogSolution(const TruncatedSeries& plain);

    const Rational& exponent() const { return exponent_; }
    const std::vector<TruncatedSeries>& parts() const { return parts_; }
    int log_degree() const { return static_cast<int>(parts_.size()) - 1; }
    bool is_zero() const;

    friend LogSolution operator+(const LogSolution& a, const LogSolution& b);
    friend LogSolution operator-(const LogSolution& a, const LogSolution& b);
    LogSolution operator*(const Rational& s) const;
    LogSolution theta() const;                          // z d/dz
    LogSolution mul_poly(const Poly& p) const;
    LogSolution deriv() const;                          // d/dz
    friend bool operator==(const LogSolution& a, const LogSolution& b);

    std::string str(const std::string& var = "z") const;

private:
    Rational exponent_{0};
    std::vector<TruncatedSeries> parts_;
    void normalize();
};

// Operator sum_k p_k(z) theta^k with integral polynomial coefficients,
// content-normalized (no common polynomial factor, positive leading
// coefficient).
class ThetaOperator {
public:
    ThetaOperator() = default;
    ThetaOperator(std::string var, std::vector<Poly> theta_coeffs);

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    // max z-degree across coefficients
    long z_degree() const;

    // indicial polynomial at z = 0: chi(rho) = sum_k p_k(0) rho^k
    Poly indicial_polynomial() const;
    // grouped form L = sum_j z^j B_j(theta)
    std::vector<Poly> theta_blocks() const;

    friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ThetaOperator& a, const ThetaOperator& b) { return !(a == b); }

    std::string str() const;

private:
    std::string var_ = "z";
    std::vector<Poly> coeffs_;
};

// Operator sum_k a_k(z) d^k with rational-function coefficients.
class DerivOperator {
public:
    DerivOperator() = default;
    explicit DerivOperator(std::vector<RationalFunction> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
    const RationalFunction& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    bool is_zero() const { return coeffs_.empty(); }

    friend DerivOperator operator+(const DerivOperator& a, const DerivOperator& b);
    friend DerivOperator operator*(const DerivOperator& a, const DerivOperator& b);  // composition
    DerivOperator operator*(const RationalFunction& f) const;  // scalar from the left
    friend bool operator==(const DerivOperator& a, const DerivOperator& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // conjugation d -> d + h (solutions get divided by exp(int h))
    DerivOperator substitute_partial(const RationalFunction& h) const;
    DerivOperator monic() const;

    std::string str(const std::string& var = "z") const;

private:
    std::vector<RationalFunction> coeffs_;
    void trim();
};

DerivOperator theta_to_deriv(const ThetaOperator& L);
ThetaOperator deriv_to_theta(const DerivOperator& L, const std::string& var = "z");

// -- application ------------------------------------------------------------

TruncatedSeries apply(const ThetaOperator& L, const TruncatedSeries& f);
LogSolution apply(const ThetaOperator& L, const LogSolution& f);
// polynomial-coefficient d-form application (denominators cleared first)
TruncatedSeries apply(const DerivOperator& L, const TruncatedSeries& f);

// -- change of variable -------------------------------------------------------

struct AffineSubstitution {
    Rational a, b;  // phi(z) = a z + b
};
struct ReciprocalSubstitution {};
struct PolynomialSubstitution {
    Poly p;
};
using Substitution = std::variant<AffineSubstitution, ReciprocalSubstitution, PolynomialSubstitution>;

// operator whose solutions are f(phi(z)) for solutions f of L
ThetaOperator pullback(const ThetaOperator& L, const Substitution& phi);

// -- structure ----------------------------------------------------------------

// order-3 operator annihilating products of solutions of a second-order one
DerivOperator symmetric_square(const DerivOperator& L2);
// order-4 operator annihilating cubes of solutions of a second-order one
DerivOperator symmetric_cube(const DerivOperator& L2);

// monic operator with vanishing subleading coefficient, plus the logarithmic
// derivative h of the gauge factor applied to solutions (y = exp(int h) u)
std::pair<DerivOperator, RationalFunction> normal_form(const DerivOperator& L);

// second-order witness whose symmetric square is content-proportional to L3
std::optional<DerivOperator> is_symmetric_square(const DerivOperator& L3);
std::optional<DerivOperator> is_symmetric_cube(const DerivOperator& L4);

// same normal form => same projective solution structure
bool gauge_equivalent(const DerivOperator& a, const DerivOperator& b);

// -- singularities --------------------------------------------------------------

struct SingularPoint {
    enum Kind { Finite, NumericApprox, Infinity } kind = Finite;
    Rational value;                  // for Finite
    std::pair<double, double> approx{0.0, 0.0};  // for NumericApprox
    std::string str() const;
};

std::vector<SingularPoint> singular_points(const ThetaOperator& L);

}  // namespace pe
