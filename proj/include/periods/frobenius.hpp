#pragma once

#include <string>
#include <vector>

#include "periods/diffop.hpp"

namespace pe {

struct ExpansionPoint {
    bool at_infinity = false;
    Rational value{0};

    static ExpansionPoint zero() { return {false, Rational(0)}; }
    static ExpansionPoint finite(const Rational& v) { return {false, v}; }
    static ExpansionPoint infinity() { return {true, Rational(0)}; }
    std::string str() const { return at_infinity ? "inf" : rational_str(value); }
    friend bool operator==(const ExpansionPoint& a, const ExpansionPoint& b) {
        return a.at_infinity == b.at_infinity && (a.at_infinity || a.value == b.value);
    }
};

struct IndicialData {
    ExpansionPoint point;
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), ascending
    int total_multiplicity() const;
};

struct FrobeniusBasis {
    ExpansionPoint point;
    std::vector<LogSolution> solutions;  // ordered by increasing max log-power
    int order = 0;
};

// recentered operator in the local coordinate (w = z - a or w = 1/z)
ThetaOperator recenter(const ThetaOperator& L, const ExpansionPoint& p);

IndicialData indicial_roots(const ThetaOperator& L, const ExpansionPoint& p);

// log-solution basis at a regular singular point; maximally resonant roots
// produce the rho-derivative tower normalized so that solution k carries a
// monic (log z)^k part
FrobeniusBasis frobenius_basis(const ThetaOperator& L, const ExpansionPoint& p, int order);

// S with pi_1/pi_0 = log z + S(z), S(0) = 0; the flat coordinate is
// q(z) = z exp(S)
TruncatedSeries normalized_period_series(const FrobeniusBasis& basis);

const LogSolution& holomorphic_solution(const FrobeniusBasis& basis);
const LogSolution& single_log_solution(const FrobeniusBasis& basis);

}  // namespace pe
