#include "periods/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "periods/errors.hpp"

namespace pe {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& v) {
    Poly p;
    if (v != 0) p.c_ = {v};
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

Rational Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::lead() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
}

long Poly::valuation() const {
    for (long i = 0; i < static_cast<long>(c_.size()); ++i)
        if (c_[static_cast<size_t>(i)] != 0) return i;
    return 0;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::operator/(const Rational& s) const {
    if (s == 0) throw MathError("polynomial division by zero scalar");
    return *this * (Rational(1) / s);
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (long i = degree(); i >= 0; --i) r = r * x + c_[static_cast<size_t>(i)];
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (long i = degree(); i >= 0; --i) {
        r = r * inner + Poly::constant(c_[static_cast<size_t>(i)]);
    }
    return r;
}

Poly Poly::shift_arg(const Rational& c) const {
    return compose(Poly({c, Rational(1)}));
}

Poly Poly::mul_power(long k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> c(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(k)] = c_[i];
    return Poly(std::move(c));
}

Poly Poly::div_power(long k) const {
    if (is_zero() || k == 0) return *this;
    if (valuation() < k) throw MathError("inexact division by power of the variable");
    std::vector<Rational> c(c_.begin() + k, c_.end());
    return Poly(std::move(c));
}

bool Poly::is_integral() const {
    for (const auto& x : c_)
        if (!is_integer(x)) return false;
    return true;
}

std::pair<Rational, Poly> Poly::primitive() const {
    if (is_zero()) return {Rational(1), Poly()};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& x : c_) {
        if (x == 0) continue;
        num_gcd = gcd(num_gcd, abs(numerator(x)));
        den_lcm = lcm(den_lcm, denominator(x));
    }
    Rational scale = Rational(num_gcd) / Rational(den_lcm);
    if (lead() < 0) scale = -scale;
    Poly prim = *this / scale;
    return {scale, prim};
}

TruncatedSeries Poly::to_series() const {
    if (is_zero()) return TruncatedSeries::zero();
    return TruncatedSeries(Rational(0), c_, true);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    return to_series().str(var);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    Poly r = a;
    std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
                            Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long d = r.degree() - b.degree();
        Rational f = r.lead() / b.lead();
        q[static_cast<size_t>(d)] = f;
        r = r - (b * f).mul_power(d);
    }
    return {Poly(std::move(q)), r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x / x.lead();  // monic
}

namespace {

std::vector<Integer> small_divisors(const Integer& n, bool* complete) {
    std::vector<Integer> divs;
    Integer m = abs(n);
    if (m == 0) return divs;
    // trial division; big leftover primes are still fine, only an explosion
    // of distinct factors would matter and never happens for our operators
    std::vector<std::pair<Integer, int>> fac;
    Integer d = 2;
    Integer rem = m;
    while (d * d <= rem && d < 1000000) {
        if (rem % d == 0) {
            int e = 0;
            while (rem % d == 0) {
                rem /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (rem > 1) {
        if (rem < Integer("1000000000000")) {
            fac.emplace_back(rem, 1);
        } else {
            *complete = false;
        }
    }
    divs.push_back(1);
    for (auto& [p, e] : fac) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
    RationalRoots out;
    if (p.is_zero()) {
        out.residual = p;
        return out;
    }
    Poly q = p.primitive().second;
    long v = q.valuation();
    if (v > 0) {
        out.roots[Rational(0)] = static_cast<int>(v);
        q = q.div_power(v);
    }
    bool complete = true;
    auto nums = small_divisors(to_integer(q.coeff(0)), &complete);
    auto dens = small_divisors(to_integer(q.lead()), &complete);
    out.complete = complete;
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            for (int sign : {1, -1}) {
                Rational cand = Rational(sign * a) / Rational(b);
                while (q.degree() > 0 && q.eval(cand) == 0) {
                    out.roots[cand] += 1;
                    q = divmod(q, Poly({-cand, Rational(1)})).first;
                }
            }
        }
    }
    out.residual = q;
    return out;
}

std::vector<std::pair<double, double>> numeric_roots(const Poly& p) {
    std::vector<std::pair<double, double>> out;
    long n = p.degree();
    if (n <= 0) return out;
    std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        a[static_cast<size_t>(i)] = static_cast<double>(p.coeff(i)) ;
    for (auto& x : a) x /= a.back();
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::pow(std::complex<double>(0.4, 0.9), static_cast<double>(i));
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (long i = 0; i < n; ++i) {
            std::complex<double> num(0, 0);
            // Horner
            for (long k = n; k >= 0; --k) num = num * z[static_cast<size_t>(i)] + a[static_cast<size_t>(k)];
            std::complex<double> den(1, 0);
            for (long j = 0; j < n; ++j)
                if (j != i) den *= (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<double> d = num / den;
            z[static_cast<size_t>(i)] -= d;
            moved += std::abs(d);
        }
        if (moved < 1e-14) break;
    }
    for (auto& r : z) out.emplace_back(r.real(), r.imag());
    return out;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    Rational l = den_.lead();
    num_ = num_ / l;
    den_ = den_ / l;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw MathError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const Rational& s) const {
    return RationalFunction(num_ * s, den_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw MathError("rational function evaluated at a pole: " + rational_str(x));
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    return poly_compose_rational(num_, inner) / poly_compose_rational(den_, inner);
}

TruncatedSeries RationalFunction::to_series(int order) const {
    if (num_.is_zero()) return TruncatedSeries::zero();
    return divide(num_.to_series(), den_.to_series(), order);
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
    return os.str();
}

RationalFunction poly_compose_rational(const Poly& p, const RationalFunction& inner) {
    RationalFunction r(Rational(0));
    for (long i = p.degree(); i >= 0; --i)
        r = r * inner + RationalFunction(p.coeff(i));
    return r;
}

}  // namespace pe
