#include "periods/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "periods/errors.hpp"

namespace pe {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

using Vec = std::vector<Rational>;

Rational at(const Vec& v, long i) {
    if (i < 0 || i >= static_cast<long>(v.size())) return Rational(0);
    return v[static_cast<size_t>(i)];
}

// c = a*b truncated to n coefficients, operands zero-padded
Vec conv(const Vec& a, const Vec& b, long n) {
    Vec c(static_cast<size_t>(std::max<long>(n, 0)), Rational(0));
    for (long i = 0; i < static_cast<long>(a.size()) && i < n; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        long jmax = std::min<long>(static_cast<long>(b.size()), n - i);
        for (long j = 0; j < jmax; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            c[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
    }
    return c;
}

// 1/a truncated to n coefficients; requires a[0] != 0
Vec inv(const Vec& a, long n) {
    Vec b(static_cast<size_t>(n), Rational(0));
    if (n <= 0) return b;
    b[0] = Rational(1) / a[0];
    for (long m = 1; m < n; ++m) {
        Rational s(0);
        for (long k = 1; k <= m; ++k) s += at(a, k) * b[static_cast<size_t>(m - k)];
        b[static_cast<size_t>(m)] = -s / a[0];
    }
    return b;
}

Vec pow_int(const Vec& u, long e, long n) {
    // u[0] != 0 when e < 0
    Vec base = u;
    if (e < 0) {
        base = inv(u, n);
        e = -e;
    }
    Vec r(1, Rational(1));
    while (e) {
        if (e & 1) r = conv(r, base, n);
        base = conv(base, base, n);
        e >>= 1;
    }
    r.resize(static_cast<size_t>(n), Rational(0));
    return r;
}

long leading_zeros(const Vec& v) {
    long k = 0;
    while (k < static_cast<long>(v.size()) && v[static_cast<size_t>(k)] == 0) ++k;
    return k;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Rational exponent, std::vector<Rational> coeffs, bool exact)
    : exponent_(std::move(exponent)), coeffs_(std::move(coeffs)), exact_(exact) {
    if (exact_) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& c) {
    if (c == 0) return zero();
    return TruncatedSeries(Rational(0), {c}, true);
}

TruncatedSeries TruncatedSeries::variable() {
    return TruncatedSeries(Rational(1), {Rational(1)}, true);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, const Rational& exponent) {
    if (c == 0) return zero();
    return TruncatedSeries(exponent, {c}, true);
}

TruncatedSeries TruncatedSeries::inexact_zero(const Rational& exponent, int order) {
    return TruncatedSeries(exponent, Vec(static_cast<size_t>(order), Rational(0)), false);
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Rational TruncatedSeries::coeff_at(const Rational& e) const {
    Rational off = e - exponent_;
    if (!is_integer(off)) return Rational(0);
    Integer n = to_integer(off);
    if (n < 0) return Rational(0);
    if (n >= static_cast<long>(coeffs_.size())) {
        if (exact_) return Rational(0);
        throw MathError("coefficient of z^" + rational_str(e) + " is beyond the truncation window");
    }
    return coeffs_[static_cast<size_t>(static_cast<long>(n))];
}

TruncatedSeries TruncatedSeries::trimmed() const {
    long k = leading_zeros(coeffs_);
    if (k == 0) return *this;
    Vec rest(coeffs_.begin() + k, coeffs_.end());
    return TruncatedSeries(exponent_ + k, std::move(rest), exact_);
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
    if (n >= order() && !exact_) return *this;
    Vec c = coeffs_;
    bool ex = exact_ && static_cast<long>(c.size()) <= n;
    c.resize(static_cast<size_t>(std::max(n, 0)), Rational(0));
    if (ex) return TruncatedSeries(exponent_, std::move(c), true);
    return TruncatedSeries(exponent_, std::move(c), false);
}

TruncatedSeries TruncatedSeries::shifted(const Rational& dexp) const {
    if (exact_ && coeffs_.empty()) return zero();
    return TruncatedSeries(exponent_ + dexp, coeffs_, exact_);
}

TruncatedSeries TruncatedSeries::operator-() const {
    Vec c = coeffs_;
    for (auto& x : c) x = -x;
    return TruncatedSeries(exponent_, std::move(c), exact_);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
    if (s == 0) {
        if (exact_) return zero();
        return inexact_zero(exponent_, order());
    }
    Vec c = coeffs_;
    for (auto& x : c) x *= s;
    return TruncatedSeries(exponent_, std::move(c), exact_);
}

TruncatedSeries add_impl(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
    auto flip = [&](const TruncatedSeries& s) { return sign < 0 ? -s : s; };
    if (a.exact_ && a.is_zero()) return flip(b);
    if (b.exact_ && b.is_zero()) return a;

    Rational diff = b.exponent_ - a.exponent_;
    if (!is_integer(diff)) {
        // only a window-limited zero can absorb a foreign exponent grid
        if (a.is_zero()) return flip(b);
        if (b.is_zero()) return a;
        throw IncompatibleExponents("cannot add series whose exponents differ by " +
                                    rational_str(diff));
    }

    Rational e = std::min(a.exponent_, b.exponent_);
    long ka = to_long(a.exponent_ - e);
    long kb = to_long(b.exponent_ - e);
    long end_a = a.exact_ ? kInf : ka + a.order();
    long end_b = b.exact_ ? kInf : kb + b.order();
    long end = std::min(end_a, end_b);
    if (end >= kInf) end = std::max(ka + a.order(), kb + b.order());
    long len = std::max<long>(end, 0);

    Vec c(static_cast<size_t>(len), Rational(0));
    for (long i = 0; i < a.order() && ka + i < len; ++i) c[static_cast<size_t>(ka + i)] += a.coeffs_[static_cast<size_t>(i)];
    for (long i = 0; i < b.order() && kb + i < len; ++i) {
        if (sign < 0)
            c[static_cast<size_t>(kb + i)] -= b.coeffs_[static_cast<size_t>(i)];
        else
            c[static_cast<size_t>(kb + i)] += b.coeffs_[static_cast<size_t>(i)];
    }
    return TruncatedSeries(e, std::move(c), a.exact_ && b.exact_);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add_impl(a, b, +1);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add_impl(a, b, -1);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if ((a.exact_ && a.is_zero()) || (b.exact_ && b.is_zero())) return TruncatedSeries::zero();
    long la = a.exact_ ? kInf : a.order();
    long lb = b.exact_ ? kInf : b.order();
    long len = std::min(la, lb);
    if (len >= kInf) len = a.order() + b.order() - 1;  // both exact: full product
    Vec c = conv(a.coeffs_, b.coeffs_, len);
    return TruncatedSeries(a.exponent_ + b.exponent_, std::move(c), a.exact_ && b.exact_);
}

TruncatedSeries inverse(const TruncatedSeries& b, int order_hint) {
    return divide(TruncatedSeries::constant(Rational(1)), b, order_hint);
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b, int order_hint) {
    if (b.is_zero())
        throw DivisionByZeroSeries("division by a series that is zero to its order");
    if (a.exact() && a.is_zero()) return TruncatedSeries::zero();

    TruncatedSeries bt = b.trimmed();
    long la = a.exact() ? kInf : a.order();
    long lb = bt.exact() ? kInf : bt.order();
    long len = std::min(la, lb);
    if (len >= kInf) {
        len = order_hint > 0 ? order_hint : TruncatedSeries::kDefaultOrder;
        if (bt.order() == 1) len = std::max<long>(a.order(), 1);  // monomial divisor stays exact
    }
    bool ex = a.exact() && bt.order() == 1;
    Vec binv = inv(bt.coeffs(), ex ? std::max<long>(a.order(), 1) : len);
    Vec c = conv(a.coeffs(), binv, ex ? std::max<long>(a.order(), 1) : len);
    return TruncatedSeries(a.exponent() - bt.exponent(), std::move(c), ex);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return divide(a, b, -1);
}

TruncatedSeries TruncatedSeries::theta() const {
    Vec c = coeffs_;
    for (long n = 0; n < static_cast<long>(c.size()); ++n)
        c[static_cast<size_t>(n)] *= exponent_ + n;
    return TruncatedSeries(exponent_, std::move(c), exact_);
}

TruncatedSeries TruncatedSeries::derivative() const {
    return theta().shifted(Rational(-1));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries ta = a.trimmed(), tb = b.trimmed();
    bool za = ta.is_zero(), zb = tb.is_zero();
    if (za && zb) return true;
    if (za || zb) {
        // a window-limited zero agrees with anything supported past its window
        const TruncatedSeries& z = za ? ta : tb;
        const TruncatedSeries& f = za ? tb : ta;
        if (z.exact()) return false;
        return f.exponent() >= z.exponent() + z.order();
    }
    if (ta.exponent() != tb.exponent()) return false;
    long la = ta.exact() ? kInf : ta.order();
    long lb = tb.exact() ? kInf : tb.order();
    long len = std::min(la, lb);
    if (len >= kInf) len = std::max(ta.order(), tb.order());
    for (long i = 0; i < len; ++i)
        if (at(ta.coeffs(), i) != at(tb.coeffs(), i)) return false;
    return true;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries ft = f.trimmed();
    if (ft.is_zero()) return ft.exact() ? TruncatedSeries::zero() : ft;
    if (!is_integer(ft.exponent()))
        throw CompositionDomain("cannot compose a series with fractional leading exponent " +
                                rational_str(ft.exponent()));
    long rho = to_long(ft.exponent());

    TruncatedSeries gt = g.trimmed();
    if (gt.is_zero()) {
        if (rho > 0) return TruncatedSeries::zero();
        if (rho < 0) throw CompositionDomain("composition with zero inner series at a pole");
        return TruncatedSeries::constant(ft.coeffs().front());
    }
    if (!is_integer(gt.exponent()) || gt.exponent() < 1) {
        if (!(ft.exact() && rho >= 0))
            throw CompositionDomain("inner series has a constant term and outer series is not polynomial");
        if (!is_integer(gt.exponent()))
            throw CompositionDomain("inner series has a fractional leading exponent");
    }
    long m = to_long(gt.exponent());

    // knowledge windows: truncating f costs O(g^{end_f}) = O(z^{m*end_f});
    // truncating g costs O(f'(g) z^{end_g})
    long res_exp = m * rho;
    long lead_fprime = (rho == 0) ? 0 : rho - 1;
    long end = kInf;
    if (!ft.exact()) {
        long end_f = to_long(Rational(ft.exponent())) + ft.order();
        end = std::min(end, m * end_f);
    }
    if (!gt.exact()) {
        long end_g = to_long(Rational(gt.exponent())) + gt.order();
        end = std::min(end, m * lead_fprime + end_g);
    }
    bool ex = ft.exact() && gt.exact() && rho >= 0;
    long len;
    if (end >= kInf) {
        // both operands exact: polynomial result when rho >= 0
        len = ex ? (ft.order() - 1 + rho) * (m + gt.order() - 1) + 1 - res_exp
                 : TruncatedSeries::kDefaultOrder;
    } else {
        len = end - res_exp;
    }
    if (len <= 0) return TruncatedSeries::inexact_zero(Rational(res_exp), 0);

    // raw vector of g including its z^m shift (no constant term)
    Vec gv(static_cast<size_t>(m + gt.order()), Rational(0));
    for (long i = 0; i < gt.order(); ++i)
        gv[static_cast<size_t>(m + i)] = gt.coeffs()[static_cast<size_t>(i)];

    long work = len;  // relative truncation for the polynomial part
    Vec acc(1, Rational(0));
    for (long n = ft.order() - 1; n >= 0; --n) {
        acc = conv(acc, gv, work);
        if (acc.empty()) acc.assign(1, Rational(0));
        acc[0] += ft.coeffs()[static_cast<size_t>(n)];
    }
    acc.resize(static_cast<size_t>(work), Rational(0));

    if (rho != 0) {
        // g^rho = z^{m*rho} * u^rho with u = g / z^m
        Vec u(gt.coeffs().begin(), gt.coeffs().end());
        Vec up = pow_int(u, rho, work);
        acc = conv(acc, up, work);
    }
    return TruncatedSeries(Rational(res_exp), std::move(acc), ex);
}

TruncatedSeries reverse_series(const TruncatedSeries& f, int order_hint) {
    TruncatedSeries ft = f.trimmed();
    if (ft.is_zero() || ft.exponent() != 1)
        throw NotReversible("series must start with a nonzero multiple of z");
    long L;
    if (ft.exact())
        L = order_hint > 0 ? order_hint : TruncatedSeries::kDefaultOrder;
    else
        L = order_hint > 0 ? std::min<long>(order_hint, ft.order()) : ft.order();
    if (L < 1) L = 1;

    // working copy with exactly L coefficients from exponent 1
    Vec fw(ft.coeffs());
    fw.resize(static_cast<size_t>(L), Rational(0));
    TruncatedSeries fwork(Rational(1), fw, false);
    TruncatedSeries fprime = fwork.derivative();

    const Rational c1 = fw[0];
    Vec g0(static_cast<size_t>(L), Rational(0));
    g0[0] = Rational(1) / c1;
    TruncatedSeries g(Rational(1), std::move(g0), false);
    TruncatedSeries q = TruncatedSeries(Rational(1), Vec(static_cast<size_t>(L), Rational(0)), false) +
                        TruncatedSeries::variable();

    long iters = 2;
    while ((1L << iters) < L + 2) ++iters;
    for (long it = 0; it <= iters; ++it) {
        TruncatedSeries num = compose(fwork, g) - q;
        TruncatedSeries den = compose(fprime, g);
        g = (g - divide(num, den, static_cast<int>(L))).truncated(static_cast<int>(L));
    }
    return g;
}

namespace {

// expands an argument into L coefficients based at z^0, checking domain
Vec elementary_vector(const TruncatedSeries& f, long L, bool need_unit, const char* what) {
    TruncatedSeries ft = f.trimmed();
    if (!ft.is_zero()) {
        if (!is_integer(ft.exponent()) || ft.exponent() < 0)
            throw ElementaryDomain(std::string(what) + ": argument has a pole or fractional exponent");
    }
    Vec v(static_cast<size_t>(L), Rational(0));
    long off = ft.is_zero() ? 0 : to_long(ft.exponent());
    for (long i = 0; i < ft.order() && off + i < L; ++i)
        v[static_cast<size_t>(off + i)] = ft.coeffs()[static_cast<size_t>(i)];
    if (need_unit) {
        if (L < 1 || v[0] != 1)
            throw ElementaryDomain(std::string(what) + ": constant term must be 1");
    } else {
        if (L >= 1 && v[0] != 0)
            throw ElementaryDomain(std::string(what) + ": constant term must vanish");
    }
    return v;
}

long elementary_length(const TruncatedSeries& f, int order_hint) {
    if (order_hint > 0) return order_hint;
    TruncatedSeries ft = f.trimmed();
    if (ft.exact() || ft.is_zero()) return TruncatedSeries::kDefaultOrder;
    return to_long(Rational(ft.exponent())) + ft.order();
}

}  // namespace

TruncatedSeries exp_series(const TruncatedSeries& f, int order_hint) {
    long L = elementary_length(f, order_hint);
    Vec fv = elementary_vector(f, L, false, "exp");
    Vec h(static_cast<size_t>(L), Rational(0));
    h[0] = 1;
    for (long n = 1; n < L; ++n) {
        Rational s(0);
        for (long k = 1; k <= n; ++k) s += Rational(k) * fv[static_cast<size_t>(k)] * h[static_cast<size_t>(n - k)];
        h[static_cast<size_t>(n)] = s / n;
    }
    return TruncatedSeries(Rational(0), std::move(h), false);
}

TruncatedSeries log_series(const TruncatedSeries& f, int order_hint) {
    long L = elementary_length(f, order_hint);
    Vec fv = elementary_vector(f, L, true, "log");
    Vec g(static_cast<size_t>(L), Rational(0));
    for (long n = 1; n < L; ++n) {
        Rational s(0);
        for (long k = 1; k < n; ++k) s += Rational(k) * g[static_cast<size_t>(k)] * fv[static_cast<size_t>(n - k)];
        g[static_cast<size_t>(n)] = fv[static_cast<size_t>(n)] - s / n;
    }
    return TruncatedSeries(Rational(0), std::move(g), false);
}

TruncatedSeries pow_series(const TruncatedSeries& f, const Rational& r, int order_hint) {
    long L = elementary_length(f, order_hint);
    Vec fv = elementary_vector(f, L, true, "pow");
    Vec h(static_cast<size_t>(L), Rational(0));
    h[0] = 1;
    for (long n = 1; n < L; ++n) {
        Rational s(0);
        for (long k = 1; k <= n; ++k)
            s += ((r + 1) * k - n) * fv[static_cast<size_t>(k)] * h[static_cast<size_t>(n - k)];
        h[static_cast<size_t>(n)] = s / n;
    }
    return TruncatedSeries(Rational(0), std::move(h), false);
}

TruncatedSeries hypergeometric_series(const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower, int order) {
    for (const auto& b : lower) {
        if (is_integer(b) && b <= 0)
            throw PoleInParameters("lower parameter " + rational_str(b) +
                                   " is a non-positive integer");
    }
    if (order < 1) order = 1;
    Vec c(static_cast<size_t>(order), Rational(0));
    c[0] = 1;
    for (long n = 0; n + 1 < order; ++n) {
        Rational num(1), den(1);
        for (const auto& a : upper) num *= a + n;
        for (const auto& b : lower) den *= b + n;
        den *= (n + 1);
        c[static_cast<size_t>(n + 1)] = c[static_cast<size_t>(n)] * num / den;
    }
    return TruncatedSeries(Rational(0), std::move(c), false);
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (long n = 0; n < order(); ++n) {
        const Rational& c = coeffs_[static_cast<size_t>(n)];
        if (c == 0) continue;
        Rational e = exponent_ + n;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational ac = abs(c);
        bool unit = (ac == 1) && e != 0;
        if (!unit) os << rational_str(ac);
        if (e != 0) {
            if (!unit) os << "*";
            os << var;
            if (e != 1) os << "^" << rational_str(e);
        }
        first = false;
    }
    if (first) os << "0";
    if (!exact_) os << " + O(" << var << "^" << rational_str(exponent_ + order()) << ")";
    return os.str();
}

}  // namespace pe
