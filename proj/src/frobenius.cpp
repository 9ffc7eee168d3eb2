#include "periods/frobenius.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "periods/errors.hpp"

namespace pe {

namespace {

// truncated Taylor jets in eps, fixed length m
using Jet = std::vector<Rational>;

Jet jet_zero(size_t m) { return Jet(m, Rational(0)); }

Jet jet_mul(const Jet& a, const Jet& b) {
    Jet c(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Jet jet_div(const Jet& a, const Jet& b) {
    Jet q(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        Rational s = a[i];
        for (size_t t = 0; t < i; ++t) s -= q[t] * b[i - t];
        q[i] = s / b[0];
    }
    return q;
}

// p(c + eps) as a jet
Jet jet_of_poly(const Poly& p, const Rational& c, size_t m) {
    Poly shifted = p.shift_arg(c);
    Jet j(m, Rational(0));
    for (size_t i = 0; i < m; ++i) j[i] = shifted.coeff(static_cast<long>(i));
    return j;
}

}  // namespace

int IndicialData::total_multiplicity() const {
    int t = 0;
    for (const auto& [r, m] : roots) t += m;
    return t;
}

ThetaOperator recenter(const ThetaOperator& L, const ExpansionPoint& p) {
    if (p.at_infinity) return pullback(L, ReciprocalSubstitution{});
    if (p.value == 0) return L;
    return pullback(L, AffineSubstitution{Rational(1), p.value});
}

IndicialData indicial_roots(const ThetaOperator& L, const ExpansionPoint& p) {
    ThetaOperator C = recenter(L, p);
    int n = C.order();
    Poly chi = C.indicial_polynomial();
    if (chi.degree() < n)
        throw IrregularSingular("indicial polynomial degenerates at " + p.str() +
                                " (irregular singular point)");
    RationalRoots rr = rational_roots(chi);
    if (rr.residual.degree() > 0) {
        std::ostringstream os;
        os << "indicial roots at " << p.str() << " are not all rational; residual factor "
           << rr.residual.str("rho");
        throw IrrationalRoots(os.str());
    }
    IndicialData out;
    out.point = p;
    for (const auto& [root, mult] : rr.roots) out.roots.emplace_back(root, mult);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

FrobeniusBasis frobenius_basis(const ThetaOperator& L, const ExpansionPoint& p, int order) {
    if (order < 1) throw MathError("frobenius_basis needs a positive truncation order");
    ThetaOperator C = recenter(L, p);
    IndicialData ind = indicial_roots(L, p);

    // resonance screening: distinct roots must not differ by integers
    for (size_t i = 0; i < ind.roots.size(); ++i)
        for (size_t j = i + 1; j < ind.roots.size(); ++j) {
            Rational diff = ind.roots[j].first - ind.roots[i].first;
            if (diff != 0 && is_integer(diff))
                throw ResonantIntegerGap("indicial roots " + rational_str(ind.roots[i].first) +
                                         " and " + rational_str(ind.roots[j].first) +
                                         " differ by a nonzero integer");
        }

    std::vector<Poly> blocks = C.theta_blocks();
    long D = static_cast<long>(blocks.size()) - 1;
    const Poly& B0 = blocks[0];

    FrobeniusBasis basis;
    basis.point = p;
    basis.order = order;

    for (const auto& [rho0, mult] : ind.roots) {
        size_t m = static_cast<size_t>(mult);
        // a_n(rho) as jets at rho = rho0
        std::vector<Jet> a(static_cast<size_t>(order));
        a[0] = jet_zero(m);
        a[0][0] = 1;
        for (long i = 1; i < order; ++i) {
            Jet s = jet_zero(m);
            for (long j = 1; j <= std::min<long>(i, D); ++j) {
                if (blocks[static_cast<size_t>(j)].is_zero()) continue;
                Jet bj = jet_of_poly(blocks[static_cast<size_t>(j)], rho0 + (i - j), m);
                Jet term = jet_mul(bj, a[static_cast<size_t>(i - j)]);
                for (size_t t = 0; t < m; ++t) s[t] += term[t];
            }
            Jet b0 = jet_of_poly(B0, rho0 + i, m);
            if (b0[0] == 0)
                throw ResonantIntegerGap("recurrence hit an indicial root at offset " +
                                         std::to_string(i));
            for (auto& x : s) x = -x;
            a[static_cast<size_t>(i)] = jet_div(s, b0);
        }

        // solution k = d^k/drho^k [ z^rho sum a_n z^n ] at rho0, normalized so the
        // (log z)^k part is monic; part j gets coefficients (k!/j!) a_{n,k-j}
        for (size_t k = 0; k < m; ++k) {
            std::vector<TruncatedSeries> parts;
            for (size_t j = 0; j <= k; ++j) {
                Rational factor = Rational(factorial(static_cast<unsigned>(k))) /
                                  Rational(factorial(static_cast<unsigned>(j)));
                std::vector<Rational> cs(static_cast<size_t>(order));
                for (long i = 0; i < order; ++i) cs[static_cast<size_t>(i)] = a[static_cast<size_t>(i)][k - j] * factor;
                parts.push_back(TruncatedSeries(rho0, std::move(cs), false));
            }
            basis.solutions.emplace_back(rho0, std::move(parts));
        }
    }

    std::sort(basis.solutions.begin(), basis.solutions.end(),
              [](const LogSolution& x, const LogSolution& y) {
                  if (x.log_degree() != y.log_degree()) return x.log_degree() < y.log_degree();
                  return x.exponent() < y.exponent();
              });
    return basis;
}

const LogSolution& holomorphic_solution(const FrobeniusBasis& basis) {
    const LogSolution* found = nullptr;
    for (const auto& s : basis.solutions) {
        if (s.log_degree() != 0 || s.exponent() != 0) continue;
        if (found) throw NoLogStructure("holomorphic solution is not unique");
        found = &s;
    }
    if (!found) throw NoLogStructure("no holomorphic solution with exponent 0 in the basis");
    if (found->parts()[0].constant_term() != 1)
        throw NoLogStructure("holomorphic solution is not normalized to constant term 1");
    return *found;
}

const LogSolution& single_log_solution(const FrobeniusBasis& basis) {
    for (const auto& s : basis.solutions)
        if (s.log_degree() == 1) return s;
    throw NoLogStructure("basis has no single-log solution");
}

TruncatedSeries normalized_period_series(const FrobeniusBasis& basis) {
    const LogSolution& pi0 = holomorphic_solution(basis);
    const LogSolution& pi1 = single_log_solution(basis);
    if (!(pi1.parts()[1] == pi0.parts()[0]))
        throw NoLogStructure("single-log solution is not monic over the holomorphic one");
    TruncatedSeries S = pi1.parts()[0] / pi0.parts()[0];
    if (!S.is_zero() && S.trimmed().exponent() < 1)
        throw NoLogStructure("normalized period series has a nonzero constant term");
    return S;
}

}  // namespace pe
