#include "periods/diffop.hpp"

#include <algorithm>
#include <sstream>

#include "periods/errors.hpp"

namespace pe {

// ---------------------------------------------------------------- LogSolution

LogSolution::LogSolution(Rational exponent, std::vector<TruncatedSeries> parts)
    : exponent_(std::move(exponent)), parts_(std::move(parts)) {
    normalize();
}

LogSolution::LogSolution(const TruncatedSeries& plain)
    : exponent_(plain.exponent()), parts_{plain} {
    normalize();
}

void LogSolution::normalize() {
    while (parts_.size() > 1 && parts_.back().is_zero() && parts_.back().exact()) parts_.pop_back();
    for (const auto& p : parts_) {
        if (p.is_zero()) continue;
        Rational diff = p.exponent() - exponent_;
        if (!is_integer(diff))
            throw MathError("log-solution parts live on incompatible exponent grids");
        if (diff < 0) exponent_ = p.exponent();
    }
}

bool LogSolution::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

LogSolution operator+(const LogSolution& a, const LogSolution& b) {
    std::vector<TruncatedSeries> parts(std::max(a.parts_.size(), b.parts_.size()));
    for (size_t i = 0; i < parts.size(); ++i) {
        TruncatedSeries pa = i < a.parts_.size() ? a.parts_[i] : TruncatedSeries::zero();
        TruncatedSeries pb = i < b.parts_.size() ? b.parts_[i] : TruncatedSeries::zero();
        parts[i] = pa + pb;
    }
    return LogSolution(std::min(a.exponent_, b.exponent_), std::move(parts));
}

LogSolution operator-(const LogSolution& a, const LogSolution& b) {
    return a + b * Rational(-1);
}

LogSolution LogSolution::operator*(const Rational& s) const {
    std::vector<TruncatedSeries> parts;
    parts.reserve(parts_.size());
    for (const auto& p : parts_) parts.push_back(p * s);
    return LogSolution(exponent_, std::move(parts));
}

LogSolution LogSolution::theta() const {
    // theta(f (log z)^k) = (theta f)(log z)^k + k f (log z)^{k-1}
    std::vector<TruncatedSeries> parts(parts_.size());
    for (size_t j = 0; j < parts_.size(); ++j) {
        parts[j] = parts_[j].theta();
        if (j + 1 < parts_.size()) parts[j] = parts[j] + parts_[j + 1] * Rational(static_cast<long>(j + 1));
    }
    return LogSolution(exponent_, std::move(parts));
}

LogSolution LogSolution::deriv() const {
    std::vector<TruncatedSeries> parts(parts_.size());
    for (size_t j = 0; j < parts_.size(); ++j) {
        parts[j] = parts_[j].derivative();
        if (j + 1 < parts_.size())
            parts[j] = parts[j] + parts_[j + 1].shifted(Rational(-1)) * Rational(static_cast<long>(j + 1));
    }
    return LogSolution(exponent_ - 1, std::move(parts));
}

LogSolution LogSolution::mul_poly(const Poly& p) const {
    TruncatedSeries ps = p.to_series();
    std::vector<TruncatedSeries> parts;
    parts.reserve(parts_.size());
    for (const auto& q : parts_) parts.push_back(ps * q);
    return LogSolution(exponent_, std::move(parts));
}

bool operator==(const LogSolution& a, const LogSolution& b) {
    size_t n = std::max(a.parts_.size(), b.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        TruncatedSeries pa = i < a.parts_.size() ? a.parts_[i] : TruncatedSeries::zero();
        TruncatedSeries pb = i < b.parts_.size() ? b.parts_[i] : TruncatedSeries::zero();
        if (!(pa == pb)) return false;
    }
    return true;
}

std::string LogSolution::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j].is_zero()) continue;
        if (!first) os << " + ";
        if (j > 0) os << "log(" << var << ")" << (j > 1 ? "^" + std::to_string(j) : "") << "*";
        os << "(" << parts_[j].str(var) << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// -------------------------------------------------------------- ThetaOperator

ThetaOperator::ThetaOperator(std::string var, std::vector<Poly> theta_coeffs)
    : var_(std::move(var)), coeffs_(std::move(theta_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) return;

    Poly g;
    for (const auto& p : coeffs_)
        if (!p.is_zero()) g = g.is_zero() ? p : poly_gcd(g, p);
    if (g.degree() > 0) {
        for (auto& p : coeffs_)
            if (!p.is_zero()) p = divmod(p, g).first;
    }

    // joint rational content -> integral primitive coefficients
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& p : coeffs_)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            num_gcd = gcd(num_gcd, abs(numerator(c)));
            den_lcm = lcm(den_lcm, denominator(c));
        }
    Rational scale = Rational(num_gcd) / Rational(den_lcm);
    // sign convention: lowest nonzero coefficient of the leading polynomial
    // is positive (theta^n enters as (1 - c z ...) theta^n for our operators)
    const Poly& lead_poly = coeffs_.back();
    if (lead_poly.coeff(lead_poly.valuation()) < 0) scale = -scale;
    for (auto& p : coeffs_) p = p / scale;
}

long ThetaOperator::z_degree() const {
    long d = 0;
    for (const auto& p : coeffs_) d = std::max(d, p.degree());
    return d;
}

Poly ThetaOperator::indicial_polynomial() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& p : coeffs_) c.push_back(p.coeff(0));
    return Poly(std::move(c));
}

std::vector<Poly> ThetaOperator::theta_blocks() const {
    std::vector<Poly> blocks(static_cast<size_t>(z_degree()) + 1);
    for (size_t j = 0; j < blocks.size(); ++j) {
        std::vector<Rational> c;
        c.reserve(coeffs_.size());
        for (const auto& p : coeffs_) c.push_back(p.coeff(static_cast<long>(j)));
        blocks[j] = Poly(std::move(c));
    }
    return blocks;
}

std::string ThetaOperator::str() const {
    std::ostringstream os;
    bool first = true;
    for (long k = order(); k >= 0; --k) {
        const Poly& p = coeffs_[static_cast<size_t>(k)];
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << p.str(var_) << ")";
        if (k > 0) os << "*theta" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// -------------------------------------------------------------- DerivOperator

DerivOperator::DerivOperator(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void DerivOperator::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DerivOperator operator+(const DerivOperator& a, const DerivOperator& b) {
    std::vector<RationalFunction> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        RationalFunction x = i < a.coeffs_.size() ? a.coeffs_[i] : RationalFunction();
        RationalFunction y = i < b.coeffs_.size() ? b.coeffs_[i] : RationalFunction();
        c[i] = x + y;
    }
    return DerivOperator(std::move(c));
}

DerivOperator operator*(const DerivOperator& a, const DerivOperator& b) {
    if (a.is_zero() || b.is_zero()) return DerivOperator();
    int oa = a.order(), ob = b.order();
    std::vector<RationalFunction> c(static_cast<size_t>(oa + ob) + 1);
    // d^i (b_j y^{(j)}) = sum_m C(i,m) b_j^{(m)} y^{(i-m+j)}
    for (int j = 0; j <= ob; ++j) {
        RationalFunction bder = b.coeffs_[static_cast<size_t>(j)];
        std::vector<RationalFunction> bd{bder};
        for (int m = 1; m <= oa; ++m) {
            bder = bder.derivative();
            bd.push_back(bder);
        }
        for (int i = 0; i <= oa; ++i) {
            const RationalFunction& ai = a.coeffs_[static_cast<size_t>(i)];
            if (ai.is_zero()) continue;
            for (int m = 0; m <= i; ++m) {
                Rational binom(binomial(static_cast<unsigned>(i), static_cast<unsigned>(m)));
                c[static_cast<size_t>(i - m + j)] =
                    c[static_cast<size_t>(i - m + j)] + ai * bd[static_cast<size_t>(m)] * binom;
            }
        }
    }
    return DerivOperator(std::move(c));
}

DerivOperator DerivOperator::operator*(const RationalFunction& f) const {
    std::vector<RationalFunction> c = coeffs_;
    for (auto& x : c) x = x * f;
    return DerivOperator(std::move(c));
}

DerivOperator DerivOperator::substitute_partial(const RationalFunction& h) const {
    DerivOperator base(std::vector<RationalFunction>{h, RationalFunction(Rational(1))});
    DerivOperator pw(std::vector<RationalFunction>{RationalFunction(Rational(1))});
    DerivOperator out;
    for (int k = 0; k <= order(); ++k) {
        if (!coeffs_[static_cast<size_t>(k)].is_zero()) out = out + pw * coeffs_[static_cast<size_t>(k)];
        if (k < order()) pw = base * pw;  // (d+h)^{k+1}
    }
    return out;
}

DerivOperator DerivOperator::monic() const {
    if (is_zero()) return *this;
    RationalFunction lead = coeffs_.back();
    std::vector<RationalFunction> c = coeffs_;
    for (auto& x : c) x = x / lead;
    return DerivOperator(std::move(c));
}

std::string DerivOperator::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        const RationalFunction& f = coeffs_[static_cast<size_t>(k)];
        if (f.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << f.str(var) << ")";
        if (k > 0) os << "*d" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ------------------------------------------------------------------ conversions

namespace {

std::vector<std::vector<Rational>> stirling2(int n) {
    std::vector<std::vector<Rational>> s(static_cast<size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<size_t>(n) + 1, Rational(0)));
    s[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j)
            s[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                Rational(j) * s[static_cast<size_t>(k - 1)][static_cast<size_t>(j)] +
                s[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)];
    return s;
}

// x(x-1)...(x-k+1)
Poly falling_factorial(int k) {
    Poly f = Poly::constant(Rational(1));
    for (int i = 0; i < k; ++i) f = f * Poly({Rational(-i), Rational(1)});
    return f;
}

}  // namespace

DerivOperator theta_to_deriv(const ThetaOperator& L) {
    int n = L.order();
    if (n < 0) return DerivOperator();
    auto s2 = stirling2(n);
    std::vector<RationalFunction> out(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        Poly sum;
        for (int k = j; k <= n; ++k)
            sum = sum + L.coeff(k) * s2[static_cast<size_t>(k)][static_cast<size_t>(j)];
        out[static_cast<size_t>(j)] = RationalFunction(sum.mul_power(j));
    }
    return DerivOperator(std::move(out));
}

ThetaOperator deriv_to_theta(const DerivOperator& L, const std::string& var) {
    int n = L.order();
    if (n < 0) return ThetaOperator(var, {});
    // clear denominators
    Poly den = Poly::constant(Rational(1));
    for (const auto& f : L.coeffs()) {
        if (f.is_zero()) continue;
        Poly g = poly_gcd(den, f.den());
        den = den * divmod(f.den(), g).first;
    }
    std::vector<Poly> a(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const RationalFunction& f = L.coeff(k);
        if (f.is_zero()) continue;
        a[static_cast<size_t>(k)] = f.num() * divmod(den, f.den()).first;
    }
    long mu = 0;
    for (int k = 0; k <= n; ++k)
        if (!a[static_cast<size_t>(k)].is_zero()) mu = std::max<long>(mu, k - a[static_cast<size_t>(k)].valuation());
    // z^mu sum a_k d^k = sum (a_k z^{mu-k}) (z^k d^k), and z^k d^k = falling(theta)
    std::vector<Poly> theta_coeffs(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (a[static_cast<size_t>(k)].is_zero()) continue;
        Poly factor = (mu - k >= 0) ? a[static_cast<size_t>(k)].mul_power(mu - k)
                                    : a[static_cast<size_t>(k)].div_power(k - mu);
        Poly fall = falling_factorial(k);
        for (long t = 0; t <= fall.degree(); ++t) {
            if (fall.coeff(t) == 0) continue;
            theta_coeffs[static_cast<size_t>(t)] = theta_coeffs[static_cast<size_t>(t)] + factor * fall.coeff(t);
        }
    }
    return ThetaOperator(var, std::move(theta_coeffs));
}

// ------------------------------------------------------------------ application

TruncatedSeries apply(const ThetaOperator& L, const TruncatedSeries& f) {
    TruncatedSeries th = f;
    TruncatedSeries out = L.order() >= 0 ? L.coeff(0).to_series() * f : TruncatedSeries::zero();
    for (int k = 1; k <= L.order(); ++k) {
        th = th.theta();
        out = out + L.coeff(k).to_series() * th;
    }
    return out;
}

LogSolution apply(const ThetaOperator& L, const LogSolution& f) {
    LogSolution th = f;
    LogSolution out = L.order() >= 0 ? f.mul_poly(L.coeff(0)) : LogSolution();
    for (int k = 1; k <= L.order(); ++k) {
        th = th.theta();
        out = out + th.mul_poly(L.coeff(k));
    }
    return out;
}

TruncatedSeries apply(const DerivOperator& L, const TruncatedSeries& f) {
    // clear denominators (scaling does not change the kernel)
    Poly den = Poly::constant(Rational(1));
    for (const auto& c : L.coeffs()) {
        if (c.is_zero()) continue;
        Poly g = poly_gcd(den, c.den());
        den = den * divmod(c.den(), g).first;
    }
    TruncatedSeries out = TruncatedSeries::zero();
    TruncatedSeries d = f;
    for (int k = 0; k <= L.order(); ++k) {
        if (k > 0) d = d.derivative();
        const RationalFunction& c = L.coeff(k);
        if (c.is_zero()) continue;
        Poly p = c.num() * divmod(den, c.den()).first;
        out = out + p.to_series() * d;
    }
    return out;
}

// ------------------------------------------------------------------ pullback

ThetaOperator pullback(const ThetaOperator& L, const Substitution& phi) {
    RationalFunction sub;
    if (std::holds_alternative<AffineSubstitution>(phi)) {
        const auto& s = std::get<AffineSubstitution>(phi);
        if (s.a == 0) throw UnsupportedSubstitution("affine substitution must be non-constant");
        sub = RationalFunction(Poly({s.b, s.a}));
    } else if (std::holds_alternative<ReciprocalSubstitution>(phi)) {
        sub = RationalFunction(Poly::constant(Rational(1))) / RationalFunction(Poly::variable());
    } else {
        const auto& s = std::get<PolynomialSubstitution>(phi);
        if (s.p.degree() < 1) throw UnsupportedSubstitution("polynomial substitution must be non-constant");
        sub = RationalFunction(s.p);
    }
    RationalFunction dsub = sub.derivative();
    if (dsub.is_zero()) throw UnsupportedSubstitution("substitution must be non-constant");

    DerivOperator d = theta_to_deriv(L);
    // g = f o phi turns a_k(z) d_z^k into (a_k o phi) ((1/phi') d)^k
    DerivOperator D(std::vector<RationalFunction>{RationalFunction(),
                                                  RationalFunction(Rational(1)) / dsub});
    DerivOperator pw(std::vector<RationalFunction>{RationalFunction(Rational(1))});
    DerivOperator out;
    for (int k = 0; k <= d.order(); ++k) {
        const RationalFunction& ak = d.coeff(k);
        if (!ak.is_zero()) out = out + pw * ak.compose(sub);
        if (k < d.order()) pw = D * pw;
    }
    return deriv_to_theta(out, L.var());
}

// ------------------------------------------------------------------ structure

DerivOperator symmetric_square(const DerivOperator& L2) {
    if (L2.order() != 2) throw WrongOrder("symmetric_square expects an operator of order 2");
    const RationalFunction &a0 = L2.coeff(0), &a1 = L2.coeff(1), &a2 = L2.coeff(2);
    RationalFunction a0p = a0.derivative(), a1p = a1.derivative(), a2p = a2.derivative();
    Rational two(2), three(3), four(4);
    // from w = uv: w''' expressed through w'', w', w via the order-2 relation
    RationalFunction A3 = a2 * a2;
    RationalFunction A2 = a1 * a2 * three;
    RationalFunction A1 = a1 * a1 * two + a0 * a2 * four + a1p * a2 - a1 * a2p;
    RationalFunction A0 = a0 * a1 * four + a0p * a2 * two - a0 * a2p * two;
    return DerivOperator({A0, A1, A2, A3});
}

std::pair<DerivOperator, RationalFunction> normal_form(const DerivOperator& L) {
    int n = L.order();
    if (n < 1) throw WrongOrder("normal form needs an operator of order >= 1");
    RationalFunction h = -(L.coeff(n - 1) / (L.coeff(n) * Rational(n)));
    DerivOperator nf = L.substitute_partial(h).monic();
    return {nf, h};
}

DerivOperator symmetric_cube(const DerivOperator& L2) {
    if (L2.order() != 2) throw WrongOrder("symmetric_cube expects an operator of order 2");
    auto [nf, h] = normal_form(L2);
    RationalFunction Q = nf.coeff(0);
    RationalFunction Qp = Q.derivative();
    RationalFunction one(Rational(1));
    DerivOperator N4({Q * Q * Rational(9) + Qp.derivative() * Rational(3), Qp * Rational(10),
                      Q * Rational(10), RationalFunction(), one});
    return N4.substitute_partial(h * Rational(-3));
}

namespace {

bool proportional(const DerivOperator& a, const DerivOperator& b) {
    if (a.order() != b.order()) return false;
    RationalFunction ratio = b.coeff(b.order()) / a.coeff(a.order());
    for (int k = 0; k <= a.order(); ++k) {
        if (!(a.coeff(k) * ratio == b.coeff(k))) return false;
    }
    return true;
}

}  // namespace

std::optional<DerivOperator> is_symmetric_square(const DerivOperator& L3) {
    if (L3.order() != 3) throw WrongOrder("is_symmetric_square expects an operator of order 3");
    auto [nf, h] = normal_form(L3);
    RationalFunction B = nf.coeff(1), C = nf.coeff(0);
    // normal form of a symmetric square reads y''' + 4Q y' + 2Q' y
    if (!(C == B.derivative() * Rational(1, 2))) return std::nullopt;
    RationalFunction Q = B * Rational(1, 4);
    DerivOperator witness =
        DerivOperator({Q, RationalFunction(), RationalFunction(Rational(1))})
            .substitute_partial(h * Rational(-1, 2));
    if (!proportional(symmetric_square(witness), L3)) return std::nullopt;
    return witness;
}

std::optional<DerivOperator> is_symmetric_cube(const DerivOperator& L4) {
    if (L4.order() != 4) throw WrongOrder("is_symmetric_cube expects an operator of order 4");
    auto [nf, h] = normal_form(L4);
    RationalFunction B2 = nf.coeff(2), B1 = nf.coeff(1), B0 = nf.coeff(0);
    RationalFunction Q = B2 * Rational(1, 10);
    if (!(B1 == B2.derivative())) return std::nullopt;
    if (!(B0 == Q * Q * Rational(9) + Q.derivative().derivative() * Rational(3))) return std::nullopt;
    DerivOperator witness =
        DerivOperator({Q, RationalFunction(), RationalFunction(Rational(1))})
            .substitute_partial(h * Rational(-1, 3));
    if (!proportional(symmetric_cube(witness), L4)) return std::nullopt;
    return witness;
}

bool gauge_equivalent(const DerivOperator& a, const DerivOperator& b) {
    return normal_form(a).first == normal_form(b).first;
}

// ---------------------------------------------------------------- singularities

namespace {

// z = 0 counts as singular unless the local exponents are 0..n-1 with a full
// degree indicial polynomial
bool singular_at_zero(const ThetaOperator& L) {
    int n = L.order();
    if (n < 1) return false;
    Poly chi = L.indicial_polynomial();
    if (chi.degree() < n) return true;
    Poly fall = falling_factorial(n);
    return !(chi / chi.lead() == fall);
}

}  // namespace

std::string SingularPoint::str() const {
    switch (kind) {
        case Finite:
            return rational_str(value);
        case Infinity:
            return "inf";
        default: {
            std::ostringstream os;
            os << approx.first;
            if (approx.second != 0) os << (approx.second > 0 ? "+" : "") << approx.second << "i";
            return "~" + os.str();
        }
    }
}

std::vector<SingularPoint> singular_points(const ThetaOperator& L) {
    std::vector<SingularPoint> out;
    if (L.order() < 0) return out;
    if (singular_at_zero(L)) out.push_back({SingularPoint::Finite, Rational(0), {0, 0}});

    RationalRoots rr = rational_roots(L.coeff(L.order()));
    for (const auto& [root, mult] : rr.roots) {
        if (root == 0) continue;  // apparent in theta form, covered by the 0-test
        out.push_back({SingularPoint::Finite, root, {0, 0}});
    }
    for (const auto& [re, im] : numeric_roots(rr.residual))
        out.push_back({SingularPoint::NumericApprox, Rational(0), {re, im}});

    if (singular_at_zero(pullback(L, ReciprocalSubstitution{})))
        out.push_back({SingularPoint::Infinity, Rational(0), {0, 0}});

    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.value < b.value;
    });
    return out;
}

}  // namespace pe
