#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "periods/builtin.hpp"
#include "periods/continuation.hpp"
#include "periods/errors.hpp"
#include "periods/identity_suite.hpp"
#include "periods/json_io.hpp"
#include "periods/mirror.hpp"
#include "periods/special_geometry.hpp"

namespace py = pybind11;
using namespace pe;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

std::vector<Rational> rats(const std::vector<std::string>& ss) {
    std::vector<Rational> out;
    out.reserve(ss.size());
    for (const auto& s : ss) out.push_back(rat(s));
    return out;
}

std::vector<std::string> coeff_strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    out.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) out.push_back(rational_str(c));
    return out;
}

ThetaOperator op_from_json_str(const std::string& text) {
    return theta_from_json(Json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Picard-Fuchs period engine";

    py::register_exception<SchemaError>(m, "SchemaError");
    py::register_exception<MathError>(m, "MathError");

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init([](const std::string& exponent, const std::vector<std::string>& coeffs) {
                 return TruncatedSeries(rat(exponent), rats(coeffs), false);
             }),
             py::arg("exponent") = "0", py::arg("coeffs") = std::vector<std::string>{})
        .def_static("variable", []() { return TruncatedSeries::variable(); })
        .def_static("constant", [](const std::string& c) { return TruncatedSeries::constant(rat(c)); })
        .def_property_readonly("exponent", [](const TruncatedSeries& s) { return rational_str(s.exponent()); })
        .def_property_readonly("order", &TruncatedSeries::order)
        .def_property_readonly("coeffs", &coeff_strings)
        .def("coeff", [](const TruncatedSeries& s, long k) { return rational_str(s.coeff_at(Rational(k))); })
        .def("__add__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; })
        .def("__sub__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; })
        .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; })
        .def("__truediv__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a / b; })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("compose", [](const TruncatedSeries& f, const TruncatedSeries& g) { return compose(f, g); })
        .def("reverse", [](const TruncatedSeries& f, int order) { return reverse_series(f, order); },
             py::arg("order") = -1)
        .def("theta", &TruncatedSeries::theta)
        .def("exp", [](const TruncatedSeries& f) { return exp_series(f); })
        .def("log", [](const TruncatedSeries& f) { return log_series(f); })
        .def("pow", [](const TruncatedSeries& f, const std::string& r) { return pow_series(f, rat(r)); })
        .def("to_json", [](const TruncatedSeries& s) { return series_to_json(s).dump(); })
        .def("__repr__", [](const TruncatedSeries& s) { return s.str(); });

    m.def("hypergeometric",
          [](const std::vector<std::string>& upper, const std::vector<std::string>& lower, int order) {
              return hypergeometric_series(rats(upper), rats(lower), order);
          },
          py::arg("upper"), py::arg("lower"), py::arg("order") = 20);

    py::class_<ThetaOperator>(m, "ThetaOperator")
        .def(py::init(&op_from_json_str))
        .def_property_readonly("order", &ThetaOperator::order)
        .def("__eq__", [](const ThetaOperator& a, const ThetaOperator& b) { return a == b; })
        .def("apply", [](const ThetaOperator& L, const TruncatedSeries& f) { return apply(L, f); })
        .def("pullback_affine",
             [](const ThetaOperator& L, const std::string& a, const std::string& b) {
                 return pullback(L, AffineSubstitution{rat(a), rat(b)});
             })
        .def("pullback_reciprocal",
             [](const ThetaOperator& L) { return pullback(L, ReciprocalSubstitution{}); })
        .def("pullback_poly",
             [](const ThetaOperator& L, const std::vector<std::string>& coeffs) {
                 return pullback(L, PolynomialSubstitution{Poly(rats(coeffs))});
             })
        .def("symmetric_square",
             [](const ThetaOperator& L) {
                 return deriv_to_theta(symmetric_square(theta_to_deriv(L)), L.var());
             })
        .def("is_symmetric_square",
             [](const ThetaOperator& L) -> py::object {
                 auto w = is_symmetric_square(theta_to_deriv(L));
                 if (!w) return py::none();
                 return py::str(deriv_to_json(*w).dump());
             })
        .def("singular_points",
             [](const ThetaOperator& L) {
                 std::vector<std::string> out;
                 for (const auto& s : singular_points(L)) out.push_back(s.str());
                 return out;
             })
        .def("to_json", [](const ThetaOperator& L) { return theta_to_json(L).dump(); })
        .def("__repr__", &ThetaOperator::str);

    m.def("builtin_operator", [](const std::string& name) {
        if (name == "lpf") return builtin::lpf();
        if (name == "lk3") return builtin::lk3();
        if (name == "ltriangular") return builtin::ltriangular();
        if (name == "lelliptic") return builtin::lelliptic();
        if (name == "le8") return builtin::le8();
        throw SchemaError("unknown builtin operator: " + name);
    });

    m.def("frobenius_basis_json", [](const ThetaOperator& L, const std::string& point, int order) {
        ExpansionPoint p = (point == "inf") ? ExpansionPoint::infinity()
                                            : ExpansionPoint::finite(rat(point));
        return basis_to_json(frobenius_basis(L, p, order)).dump();
    });

    m.def("mirror_map", [](const ThetaOperator& L, int order) {
        MirrorMap mm = mirror_map(L, order);
        return py::make_tuple(mm.q_of_z, mm.z_of_q);
    });

    m.def("yukawa", [](const ThetaOperator& L, int order) {
        YukawaCoupling y = yukawa_flat(L, order);
        return yukawa_to_json(y).dump();
    });

    m.def("prepotential_instantons",
          [](const TruncatedSeries& flat, const std::string& kappa) {
              Prepotential F = prepotential_from_yukawa(flat, rat(kappa));
              std::vector<std::string> out;
              for (const auto& c : F.instanton) out.push_back(rational_str(c));
              return out;
          });

    m.def("polar_dual", [](const std::vector<std::pair<long, long>>& verts) {
        std::vector<LatticeVec> vs;
        for (auto [x, y] : verts) vs.push_back({x, y});
        LatticePolytope2D dual = polar_dual(LatticePolytope2D(vs));
        std::vector<std::pair<long, long>> out;
        for (const auto& v : dual.vertices()) out.emplace_back(v[0], v[1]);
        return out;
    });

    m.def("lattice_point_count", [](const std::vector<std::pair<long, long>>& verts) {
        std::vector<LatticeVec> vs;
        for (auto [x, y] : verts) vs.push_back({x, y});
        return LatticePolytope2D(vs).lattice_points().size();
    });

    m.def("anticanonical_monomials", [](const std::vector<std::pair<long, long>>& verts) {
        std::vector<LatticeVec> vs;
        for (auto [x, y] : verts) vs.push_back({x, y});
        return anticanonical_sections(LatticePolytope2D(vs)).rendered;
    });

    m.def("fricke_residual",
          [](const ThetaOperator& L, const std::string& alpha, unsigned digits,
             const std::string& gauge_shift) {
              PrecisionGuard guard(digits + 25);
              Rational a = rat(alpha);
              Rational C = rat(gauge_shift);
              int order = series_order_for(0.1, digits + 20);
              auto tau_at = [&](const Rational& x) {
                  PathPolyline p;
                  p.vertices = {Complex(Rational(1, 10)), Complex(x)};
                  return normalized_period_value(L, p, digits, C, order);
              };
              Complex prod = tau_at(a) * tau_at(Rational(1) - a);
              return real_str(abs(prod + Complex(Rational(1, 3))), 8);
          },
          py::arg("op"), py::arg("alpha"), py::arg("digits") = 50, py::arg("gauge_shift") = "27");

    m.def("cayley", [](const ThetaOperator& L, unsigned digits, const std::string& gauge_shift) {
        int order = series_order_for(0.125, digits + 25);
        CayleyResult c = cayley_fixed_point(L, digits, rat(gauge_shift), order);
        PrecisionGuard guard(digits + 25);
        return py::make_tuple(real_str(c.tau_star.re, digits), real_str(c.tau_star.im, digits),
                              real_str(c.path_discrepancy, 6));
    });

    m.def("run_identity", [](const std::string& id) {
        CheckResult r = run_identity(id);
        return py::make_tuple(r.id, r.pass, r.detail);
    });
    m.def("identity_names", &identity_names);
}
