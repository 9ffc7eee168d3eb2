#include "periods/continuation.hpp"

#include <algorithm>
#include <cmath>

#include "periods/errors.hpp"

namespace pe {

namespace {

// complex Horner
Complex poly_eval(const std::vector<Complex>& c, const Complex& z) {
    Complex r;
    for (size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

std::vector<Complex> to_complex_coeffs(const Poly& p) {
    std::vector<Complex> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (long i = 0; i <= p.degree(); ++i) c.push_back(Complex(p.coeff(i)));
    return c;
}

// p(z0 + w) by repeated synthetic division
std::vector<Complex> taylor_shift(const std::vector<Complex>& p, const Complex& z0) {
    std::vector<Complex> a = p;
    size_t n = a.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j > i; --j) a[j - 1] = a[j - 1] + a[j] * z0;
    return a;
}

Real segment_distance(const Complex& a, const Complex& b, const Complex& p) {
    Complex d = b - a;
    Real dd = norm2(d);
    if (dd == 0) return abs(p - a);
    Real t = ((p.re - a.re) * d.re + (p.im - a.im) * d.im) / dd;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Complex proj(a.re + t * d.re, a.im + t * d.im);
    return abs(p - proj);
}

}  // namespace

int series_order_for(double r, unsigned digits) {
    if (r <= 0 || r >= 1) throw MathError("series basepoint must satisfy 0 < |z| < 1");
    double per_term = -std::log10(r);
    return static_cast<int>(static_cast<double>(digits) / per_term) + 40;
}

std::vector<Complex> numeric_singularities(const ThetaOperator& L) {
    std::vector<Complex> out;
    if (L.order() < 0) return out;
    for (const auto& s : singular_points(L)) {
        if (s.kind == SingularPoint::Finite) {
            out.push_back(Complex(s.value));
        } else if (s.kind == SingularPoint::NumericApprox) {
            // refine the double seed by Newton at working precision
            Poly lead = L.coeff(L.order());
            auto pc = to_complex_coeffs(lead);
            auto dc = to_complex_coeffs(lead.derivative());
            Complex z = Complex::from_doubles(s.approx.first, s.approx.second);
            int settled = 0;
            for (int it = 0; it < 200 && settled < 4; ++it) {
                Complex f = poly_eval(pc, z);
                Complex df = poly_eval(dc, z);
                if (norm2(df) == 0) break;
                Complex step = f / df;
                z = z - step;
                if (abs(step) < Real("1e-10") * (abs(z) + 1)) ++settled;
            }
            out.push_back(z);
        }
    }
    return out;
}

Real path_clearance(const PathPolyline& path, const std::vector<Complex>& singular) {
    if (path.vertices.size() < 1) throw MathError("empty path");
    for (size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (norm2(path.vertices[i + 1] - path.vertices[i]) == 0)
            throw MathError("path has coincident consecutive vertices");
    Real clearance(-1);
    for (const auto& s : singular) {
        for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
            Real d = segment_distance(path.vertices[i], path.vertices[i + 1], s);
            if (clearance < 0 || d < clearance) clearance = d;
        }
        if (path.vertices.size() == 1) {
            Real d = abs(path.vertices[0] - s);
            if (clearance < 0 || d < clearance) clearance = d;
        }
    }
    if (clearance == 0)
        throw PathTooCloseToSingularity("path touches the singular set");
    if (clearance < 0) clearance = Real(1);  // no finite singularities at all
    return clearance;
}

namespace {

struct Stepper {
    std::vector<Poly> acoeffs;  // polynomial d-form coefficients
    std::vector<Complex> singular;
    int n;
    Real eps;       // per-step error target
    long max_terms;

    // one Taylor step: frame rows are derivatives 0..n-1 at z0; returns frame at z0+h
    CMatrix step(const Complex& z0, const Complex& h, const CMatrix& frame) const {
        size_t cols = frame[0].size();
        std::vector<std::vector<Complex>> shifted;  // a_k(z0 + w)
        shifted.reserve(acoeffs.size());
        for (const auto& p : acoeffs) shifted.push_back(taylor_shift(to_complex_coeffs(p), z0));
        const std::vector<Complex>& an = shifted[static_cast<size_t>(n)];
        if (norm2(an[0]) == 0) throw PathTooCloseToSingularity("Taylor step at a singular point");

        CMatrix out(static_cast<size_t>(n), std::vector<Complex>(cols));
        for (size_t col = 0; col < cols; ++col) {
            std::vector<Complex> c;  // Taylor coefficients y_m
            c.reserve(64);
            Real mfac(1);
            for (int m = 0; m < n; ++m) {
                c.push_back(frame[static_cast<size_t>(m)][col] / mfac);
                mfac *= (m + 1);
            }
            // running sums for y^{(i)}(z0+h), seeded with the first n terms
            std::vector<Complex> sum(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                Complex hp(Real(1), Real(0));
                for (long m = i; m < n; ++m) {
                    Real fall(1);
                    for (int t = 0; t < i; ++t) fall *= (m - t);
                    sum[static_cast<size_t>(i)] = sum[static_cast<size_t>(i)] + c[static_cast<size_t>(m)] * hp * fall;
                    hp = hp * h;
                }
            }
            Real scale(1);
            int quiet = 0;
            long m = 0;  // c_{m+n} is produced each round
            Complex h_lowpow(Real(1), Real(0));  // h^{(m+n)-(n-1)} = h^{m+1}
            h_lowpow = h_lowpow * h;
            while (true) {
                // coefficient of w^m: sum over k,j of a_{k,j} c_{m-j+k} (m-j+k)!/(m-j)!
                Complex acc;
                for (int k = 0; k <= n; ++k) {
                    const auto& ak = shifted[static_cast<size_t>(k)];
                    for (long j = 0; j < static_cast<long>(ak.size()); ++j) {
                        if (k == n && j == 0) continue;
                        long idx = m - j + k;
                        if (idx < 0 || idx >= static_cast<long>(c.size())) continue;
                        if (norm2(ak[static_cast<size_t>(j)]) == 0) continue;
                        Real fall(1);
                        for (int t = 0; t < k; ++t) fall *= (m - j + k - t);
                        acc = acc + ak[static_cast<size_t>(j)] * c[static_cast<size_t>(idx)] * fall;
                    }
                }
                Real fall(1);
                for (int t = 0; t < n; ++t) fall *= (m + n - t);
                Complex cnew = -(acc / (an[0] * fall));
                c.push_back(cnew);
                long mi = m + n;  // index of the new coefficient

                // accumulate into the derivative sums and watch the tail
                Real tailmax(0);
                std::vector<Complex> hpows(static_cast<size_t>(n));  // h^{mi-i}
                Complex hlow = h_lowpow;
                for (int i = n - 1; i >= 0; --i) {
                    hpows[static_cast<size_t>(i)] = hlow;
                    hlow = hlow * h;
                }
                h_lowpow = h_lowpow * h;
                for (int i = 0; i < n; ++i) {
                    Real fal(1);
                    for (int t = 0; t < i; ++t) fal *= (mi - t);
                    Complex term = cnew * hpows[static_cast<size_t>(i)] * fal;
                    sum[static_cast<size_t>(i)] = sum[static_cast<size_t>(i)] + term;
                    Real a = abs(term);
                    if (a > tailmax) tailmax = a;
                    Real s = abs(sum[static_cast<size_t>(i)]);
                    if (s > scale) scale = s;
                }
                if (tailmax < eps * scale)
                    ++quiet;
                else
                    quiet = 0;
                if (quiet >= 4 && mi >= 2 * n + 4) break;
                ++m;
                if (m > max_terms)
                    throw PrecisionExhausted("Taylor step did not meet its error budget");
            }
            for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)][col] = sum[static_cast<size_t>(i)];
        }
        return out;
    }
};

}  // namespace

CMatrix taylor_continue(const ThetaOperator& L, const PathPolyline& path, CMatrix frame,
                        unsigned digits) {
    int n = L.order();
    if (n < 1) throw MathError("cannot continue a constant operator");
    if (frame.size() != static_cast<size_t>(n))
        throw MathError("initial frame has wrong number of derivative rows");
    if (path.vertices.size() < 2) return frame;  // zero-length path

    DerivOperator d = theta_to_deriv(L);
    Stepper st;
    st.n = n;
    for (int k = 0; k <= n; ++k) st.acoeffs.push_back(d.coeff(k).num());  // denominators are 1
    st.singular = numeric_singularities(L);
    path_clearance(path, st.singular);
    st.eps = pow(Real(10), -static_cast<long>(digits) - 10);
    st.max_terms = 400 + 12L * static_cast<long>(digits);

    for (size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
        Complex a = path.vertices[seg], b = path.vertices[seg + 1];
        Complex pos = a;
        while (true) {
            Complex rem = b - pos;
            Real rlen = abs(rem);
            if (rlen == 0) break;
            Real dmin(-1);
            for (const auto& s : st.singular) {
                Real ds = abs(pos - s);
                if (dmin < 0 || ds < dmin) dmin = ds;
            }
            if (dmin < 0) dmin = rlen * 2 + 1;
            if (dmin == 0) throw PathTooCloseToSingularity("step from a singular point");
            Real hlen = dmin / 2;  // step radius <= half distance to the singular set
            Complex h = rem;
            if (hlen < rlen) h = rem * (hlen / rlen);
            frame = st.step(pos, h, frame);
            pos = pos + h;
            if (hlen >= rlen) break;
        }
    }
    return frame;
}

std::vector<Complex> evaluate_log_solution(const LogSolution& sol, int nderivs, const Complex& z) {
    std::vector<Complex> out;
    Complex logz = log(z);
    LogSolution cur = sol;
    for (int d = 0; d < nderivs; ++d) {
        if (d > 0) cur = cur.deriv();
        Complex val;
        Complex logpow(Real(1), Real(0));
        for (size_t j = 0; j < cur.parts().size(); ++j) {
            const TruncatedSeries& part = cur.parts()[j];
            // Horner over the stored coefficients, then the z^exponent factor
            Complex s;
            const auto& cs = part.coeffs();
            for (size_t i = cs.size(); i-- > 0;) s = s * z + Complex(cs[i]);
            s = s * pow(z, part.exponent());
            val = val + s * logpow;
            logpow = logpow * logz;
        }
        out.push_back(val);
    }
    return out;
}

CMatrix frobenius_frame(const FrobeniusBasis& basis, const Complex& z) {
    int n = static_cast<int>(basis.solutions.size());
    CMatrix frame(static_cast<size_t>(n), std::vector<Complex>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) {
        auto col = evaluate_log_solution(basis.solutions[static_cast<size_t>(j)], n, z);
        for (int i = 0; i < n; ++i) frame[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
    }
    return frame;
}

namespace {

// the z = 0 Frobenius series only converges up to the nearest nonzero
// singularity; reject evaluation points too close to that circle
void check_in_reference_disk(const ThetaOperator& L, const Complex& b) {
    Real radius(-1);
    for (const auto& s : numeric_singularities(L)) {
        Real a = abs(s);
        if (a == 0) continue;
        if (radius < 0 || a < radius) radius = a;
    }
    if (radius < 0) return;
    if (!(abs(b) < radius * Real("0.95")))
        throw MathError("series basepoint " + complex_str(b, 6) +
                        " is not safely inside the reference disk at 0");
}

}  // namespace

MonodromyMatrix monodromy_along(const ThetaOperator& L, const PathPolyline& loop,
                                unsigned digits, int series_order) {
    PrecisionGuard guard(digits + 25);
    if (loop.vertices.size() < 2 ||
        norm2(loop.vertices.front() - loop.vertices.back()) != 0)
        throw MathError("monodromy loop must return to its basepoint");
    check_in_reference_disk(L, loop.vertices.front());
    FrobeniusBasis basis = frobenius_basis(L, ExpansionPoint::zero(), series_order);
    CMatrix start = frobenius_frame(basis, loop.vertices.front());
    CMatrix end = taylor_continue(L, loop, start, digits + 15);
    MonodromyMatrix out;
    out.entries = cmatrix_solve(start, end);
    out.determinant = cmatrix_det(out.entries);
    out.basepoint = loop.vertices.front();
    out.loop = "polyline";
    return out;
}

MonodromyMatrix monodromy(const ThetaOperator& L, const Complex& basepoint,
                          const ExpansionPoint& around, unsigned digits, int series_order) {
    PrecisionGuard guard(digits + 25);
    PathPolyline loop;
    if (around.at_infinity) {
        // clockwise in the plane = counterclockwise around infinity
        Real r = abs(basepoint);
        int K = 32;
        Real theta0 = atan2(basepoint.im, basepoint.re);
        Real two_pi = 2 * const_pi();
        for (int k = 0; k <= K; ++k) {
            Real t = theta0 - two_pi * k / K;
            loop.vertices.push_back(Complex(r * cos(t), r * sin(t)));
        }
    } else {
        Complex c(around.value);
        Complex rvec = basepoint - c;
        Real r = abs(rvec);
        if (r == 0) throw MathError("basepoint coincides with the singularity");
        // the circle through the basepoint must enclose only this singularity
        for (const auto& s : numeric_singularities(L)) {
            Real d = abs(s - c);
            if (d != 0 && d <= r)
                throw MathError("loop through the basepoint would also enclose the singularity "
                                "near " + complex_str(s, 4));
        }
        int K = 32;
        Real theta0 = atan2(rvec.im, rvec.re);
        Real two_pi = 2 * const_pi();
        for (int k = 0; k <= K; ++k) {
            Real t = theta0 + two_pi * k / K;
            loop.vertices.push_back(c + Complex(r * cos(t), r * sin(t)));
        }
    }
    // close exactly: cos/sin round-off would otherwise break the loop check
    loop.vertices.front() = basepoint;
    loop.vertices.back() = basepoint;
    MonodromyMatrix m = monodromy_along(L, loop, digits, series_order);
    m.loop = "loop around " + around.str();
    return m;
}

CMatrix log_gauge(const CMatrix& m, const FrobeniusBasis& basis) {
    Complex two_pi_i(Real(0), 2 * const_pi());
    size_t n = m.size();
    std::vector<Complex> d(n, Complex(Real(1), Real(0)));
    for (size_t j = 0; j < n && j < basis.solutions.size(); ++j) {
        Complex f(Real(1), Real(0));
        for (int t = 0; t < basis.solutions[j].log_degree(); ++t) f = f * two_pi_i;
        d[j] = f;
    }
    // solution j is rescaled by (2 pi i)^{-logdeg_j}: M^_ij = M_ij d_i / d_j
    CMatrix out = m;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[i][j] * d[i] / d[j];
    return out;
}

Complex normalized_period_value(const ThetaOperator& L, const PathPolyline& path,
                                unsigned digits, const Rational& gauge_shift, int series_order) {
    PrecisionGuard guard(digits + 25);
    if (L.order() != 2) throw MathError("normalized period values need an order-2 operator");
    if (path.vertices.empty()) throw MathError("empty continuation path");
    check_in_reference_disk(L, path.vertices.front());
    FrobeniusBasis basis = frobenius_basis(L, ExpansionPoint::zero(), series_order);
    CMatrix frame = frobenius_frame(basis, path.vertices.front());
    CMatrix end = taylor_continue(L, path, frame, digits + 15);
    Complex ratio = end[0][1] / end[0][0];
    Complex two_pi_i(Real(0), 2 * const_pi());
    if (gauge_shift <= 0) throw MathError("gauge shift must be a positive rational");
    Complex shift = log(Complex(gauge_shift));
    return (ratio - shift) / two_pi_i;
}

CayleyResult cayley_fixed_point(const ThetaOperator& L, unsigned digits,
                                const Rational& gauge_shift, int series_order) {
    PrecisionGuard guard(digits + 30);
    // orbifold point at infinity: rational exponents, distinct mod 1
    IndicialData ind = indicial_roots(L, ExpansionPoint::infinity());
    if (ind.roots.size() != 2 || ind.roots[0].second != 1 ||
        is_integer(ind.roots[1].first - ind.roots[0].first))
        throw NoOrbifoldPoint("operator has no order-2 orbifold structure at infinity");

    FrobeniusBasis basis0 = frobenius_basis(L, ExpansionPoint::zero(), series_order);
    FrobeniusBasis basisw = frobenius_basis(L, ExpansionPoint::infinity(), series_order);

    Complex b0(Rational(1, 10));
    Complex target(Real(0), Real(8));  // alpha = 8i, i.e. w = -i/8
    PathPolyline p1, p2;
    p1.vertices = {b0, Complex(Real("0.1"), Real("1.6")), target};
    p2.vertices = {b0, Complex(Real("1.3"), Real("0.9")), Complex(Real("2.2"), Real("2.4")), target};

    Complex two_pi_i(Real(0), 2 * const_pi());
    Complex shift = log(Complex(gauge_shift));

    Complex w = Complex(Real(1), Real(0)) / target;
    CMatrix wframe(2, std::vector<Complex>(2));
    for (int j = 0; j < 2; ++j) {
        auto col = evaluate_log_solution(basisw.solutions[static_cast<size_t>(j)], 2, w);
        wframe[0][static_cast<size_t>(j)] = col[0];
        wframe[1][static_cast<size_t>(j)] = col[1];
    }

    auto tau_star_along = [&](const PathPolyline& path) {
        CMatrix frame = frobenius_frame(basis0, b0);
        CMatrix end = taylor_continue(L, path, frame, digits + 20);
        // convert d/dalpha to d/dw at the matching point: d/dw = -alpha^2 d/dalpha
        CMatrix rhs(2, std::vector<Complex>(2));
        Complex malpha2 = -(target * target);
        for (int j = 0; j < 2; ++j) {
            rhs[0][static_cast<size_t>(j)] = end[0][static_cast<size_t>(j)];
            rhs[1][static_cast<size_t>(j)] = end[1][static_cast<size_t>(j)] * malpha2;
        }
        CMatrix conn = cmatrix_solve(wframe, rhs);  // pi_j = conn[0][j] g1 + conn[1][j] g2
        Complex tau_raw = conn[0][1] / conn[0][0];
        Complex tau_star = (tau_raw - shift) / two_pi_i;
        Complex tau_here = ((end[0][1] / end[0][0]) - shift) / two_pi_i;
        Complex tau_orb = (tau_here - tau_star) / (tau_here - tau_star.conj());
        return std::make_pair(tau_star, abs(tau_orb));
    };

    auto [t1, r1] = tau_star_along(p1);
    auto [t2, r2] = tau_star_along(p2);
    CayleyResult out;
    out.tau_star = t1;
    out.path_discrepancy = abs(t1 - t2);
    out.orbifold_residual = r1 > r2 ? r1 : r2;
    return out;
}

}  // namespace pe
