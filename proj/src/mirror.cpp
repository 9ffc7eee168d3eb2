#include "periods/mirror.hpp"

#include <sstream>

#include "periods/errors.hpp"

namespace pe {

MirrorMap mirror_map(const ThetaOperator& L, int order) {
    FrobeniusBasis basis = frobenius_basis(L, ExpansionPoint::zero(), order);
    TruncatedSeries S = normalized_period_series(basis);
    MirrorMap mm;
    mm.order = order;
    mm.q_of_z = TruncatedSeries::variable() * exp_series(S, order);
    mm.z_of_q = reverse_series(mm.q_of_z);
    return mm;
}

bool AlgebraicYukawa::closed_rational() const {
    for (const auto& f : factors)
        if (!is_integer(f.power)) return false;
    return true;
}

namespace {

std::string factor_data(const AlgebraicYukawa& y) {
    std::ostringstream os;
    os << "z^" << rational_str(y.exponent);
    for (const auto& f : y.factors)
        os << " (1 - z/" << rational_str(f.root) << ")^" << rational_str(f.power);
    return os.str();
}

}  // namespace

Poly AlgebraicYukawa::num() const {
    if (!closed_rational())
        throw NonClosedForm("coupling is not a rational function of z: " + factor_data(*this));
    Poly out = Poly::constant(Rational(1));
    for (const auto& f : factors) {
        if (f.power <= 0) continue;
        Poly base({Rational(1), -Rational(1) / f.root});
        for (long t = 0; t < to_long(f.power); ++t) out = out * base;
    }
    return out;
}

Poly AlgebraicYukawa::den() const {
    if (!closed_rational())
        throw NonClosedForm("coupling is not a rational function of z: " + factor_data(*this));
    Poly out = Poly::constant(Rational(1));
    for (const auto& f : factors) {
        if (f.power >= 0) continue;
        Poly base({Rational(1), -Rational(1) / f.root});
        for (long t = 0; t < -to_long(f.power); ++t) out = out * base;
    }
    return out;
}

TruncatedSeries AlgebraicYukawa::to_series(int order) const {
    TruncatedSeries s = TruncatedSeries::constant(Rational(1)).truncated(order);
    for (const auto& f : factors) {
        TruncatedSeries base = (TruncatedSeries::constant(Rational(1)) -
                                TruncatedSeries::variable() * (Rational(1) / f.root))
                                   .truncated(order);
        s = s * pow_series(base, f.power, order);
    }
    return s.shifted(exponent);
}

std::string AlgebraicYukawa::str(const std::string& var) const {
    std::ostringstream os;
    if (exponent != 0) os << var << "^" << rational_str(exponent);
    for (const auto& f : factors) {
        if (os.tellp() > 0) os << "*";
        os << "(1 - " << var;
        if (f.root != 1) os << "/" << rational_str(f.root);
        os << ")";
        if (f.power != 1) os << "^" << rational_str(f.power);
    }
    if (os.tellp() == 0) os << "1";
    return os.str();
}

AlgebraicYukawa yukawa_algebraic(const ThetaOperator& L) {
    int n = L.order();
    if (n < 2 || n > 4)
        throw WrongOrder("yukawa couplings are defined for operators of order 2, 3 or 4");
    DerivOperator d = theta_to_deriv(L);
    RationalFunction ratio = d.coeff(n - 1) / d.coeff(n);

    AlgebraicYukawa out;
    if (ratio.is_zero()) return out;

    if (ratio.num().degree() >= ratio.den().degree())
        throw NonClosedForm("coefficient ratio has a polynomial part; the coupling is not a "
                            "rational power product");
    RationalRoots rr = rational_roots(ratio.den());
    if (rr.residual.degree() > 0)
        throw NonClosedForm("leading coefficient has irrational roots; partial fractions over Q "
                            "are unavailable");
    Poly denp = ratio.den();
    Poly dend = denp.derivative();
    Rational mult = Rational(-2, n);
    for (const auto& [root, multiplicity] : rr.roots) {
        if (multiplicity > 1)
            throw NonClosedForm("coefficient ratio has a higher-order pole at z = " +
                                rational_str(root));
        Rational residue = ratio.num().eval(root) / dend.eval(root);
        Rational e = mult * residue;
        if (root == 0) {
            out.exponent = e;
            continue;
        }
        if (e != 0) out.factors.push_back({root, e});
    }
    return out;
}

YukawaCoupling yukawa_flat(const ThetaOperator& L, int order) {
    int n = L.order();
    AlgebraicYukawa alg = yukawa_algebraic(L);
    Rational shifted_exp = alg.exponent + (n - 1);
    if (!is_integer(shifted_exp) || shifted_exp < 0)
        throw NonClosedForm("z^{n-1} C_alg is not a power series; flat coupling undefined");

    int work = order + 2;
    MirrorMap mm = mirror_map(L, work);
    FrobeniusBasis basis = frobenius_basis(L, ExpansionPoint::zero(), work);
    const TruncatedSeries& pi0 = holomorphic_solution(basis).parts()[0];

    // C_flat = (theta_q z / z)^{n-1} * (z^{n-1} C_alg)(z(q)) / pi0(z(q))^2
    TruncatedSeries A = mm.z_of_q.theta() / mm.z_of_q;
    TruncatedSeries P = alg.to_series(work).shifted(Rational(n - 1));  // power series now
    TruncatedSeries Pq = compose(P, mm.z_of_q);
    TruncatedSeries pi0q = compose(pi0, mm.z_of_q);

    TruncatedSeries flat = Pq;
    for (int t = 0; t < n - 1; ++t) flat = flat * A;
    flat = flat / (pi0q * pi0q);

    YukawaCoupling out;
    out.algebraic = alg;
    out.flat = flat.truncated(order);
    out.flat_constant = out.flat.coeff_at(Rational(0));
    return out;
}

Prepotential prepotential_from_yukawa(const TruncatedSeries& flat, const Rational& kappa) {
    TruncatedSeries f = flat.trimmed();
    if (!f.is_zero() && (!is_integer(f.exponent()) || f.exponent() < 0))
        throw NonzeroConstantMismatch("flat coupling is not a power series in q");
    Rational c0 = f.coeff_at(Rational(0));
    if (c0 != kappa)
        throw NonzeroConstantMismatch("flat coupling has constant term " + rational_str(c0) +
                                      ", expected kappa = " + rational_str(kappa));
    Prepotential F;
    F.kappa = kappa;
    long end = f.is_zero() ? 0 : to_long(Rational(f.exponent())) + f.order();
    for (long d = 1; d < end; ++d) {
        Rational cd = f.coeff_at(Rational(d));
        F.instanton.push_back(cd / Rational(d * d * d));
    }
    return F;
}

TruncatedSeries yukawa_from_prepotential(const Prepotential& F, int order) {
    std::vector<Rational> c(static_cast<size_t>(order), Rational(0));
    if (order > 0) c[0] = F.kappa;
    for (size_t i = 0; i < F.instanton.size(); ++i) {
        long d = static_cast<long>(i) + 1;
        if (d < order) c[static_cast<size_t>(d)] = F.instanton[i] * Rational(d * d * d);
    }
    return TruncatedSeries(Rational(0), std::move(c), false);
}

}  // namespace pe
