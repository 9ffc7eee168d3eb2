#include "periods/json_io.hpp"

#include <fstream>

#include "periods/errors.hpp"

namespace pe {

Json series_to_json(const TruncatedSeries& s) {
    Json j;
    j["exponent"] = rational_str(s.exponent());
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_str(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("exponent") || !j.contains("coeffs"))
        throw SchemaError("series object needs 'exponent' and 'coeffs'");
    Rational e = parse_rational(j.at("exponent").get<std::string>());
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(parse_rational(c.get<std::string>()));
    if (j.contains("order") && j.at("order").get<long>() != static_cast<long>(cs.size()))
        throw SchemaError("series 'order' disagrees with the coefficient count");
    return TruncatedSeries(e, std::move(cs), false);
}

Json theta_to_json(const ThetaOperator& L) {
    Json j;
    j["var"] = L.var();
    Json cs = Json::array();
    for (const auto& p : L.coeffs()) {
        Json one = Json::array();
        for (long i = 0; i <= p.degree(); ++i) {
            if (!is_integer(p.coeff(i)))
                throw SchemaError("operator coefficients must be integral");
            one.push_back(to_integer(p.coeff(i)).str());
        }
        if (one.empty()) one.push_back("0");
        cs.push_back(std::move(one));
    }
    j["theta_coeffs"] = std::move(cs);
    return j;
}

ThetaOperator theta_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("theta_coeffs"))
        throw SchemaError("operator object needs 'theta_coeffs'");
    std::string var = j.value("var", "z");
    std::vector<Poly> coeffs;
    for (const auto& row : j.at("theta_coeffs")) {
        std::vector<Rational> cs;
        for (const auto& c : row) {
            if (c.is_number_integer())
                cs.push_back(Rational(c.get<long>()));
            else
                cs.push_back(parse_rational(c.get<std::string>()));
        }
        coeffs.emplace_back(std::move(cs));
    }
    return ThetaOperator(var, std::move(coeffs));
}

Rational gauge_shift_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gauge_shift")) return Rational(1);
    const auto& g = j.at("gauge_shift");
    if (g.is_number_integer()) return Rational(g.get<long>());
    return parse_rational(g.get<std::string>());
}

Json log_solution_to_json(const LogSolution& s) {
    Json j;
    j["exponent"] = rational_str(s.exponent());
    j["log_degree"] = s.log_degree();
    Json parts = Json::array();
    for (const auto& p : s.parts()) parts.push_back(series_to_json(p));
    j["parts"] = std::move(parts);
    return j;
}

Json basis_to_json(const FrobeniusBasis& b) {
    Json j;
    j["point"] = b.point.str();
    j["order"] = b.order;
    Json sols = Json::array();
    for (const auto& s : b.solutions) sols.push_back(log_solution_to_json(s));
    j["solutions"] = std::move(sols);
    return j;
}

namespace {

Json poly_int_list(const Poly& p) {
    Json a = Json::array();
    for (long i = 0; i <= p.degree(); ++i) a.push_back(to_integer(p.coeff(i)).str());
    if (a.empty()) a.push_back("0");
    return a;
}

}  // namespace

Json yukawa_to_json(const YukawaCoupling& y) {
    Json j;
    Json alg;
    alg["exponent"] = rational_str(y.algebraic.exponent);
    if (y.algebraic.closed_rational()) {
        // clear both polynomials by the same factor so num(0)/den(0) stays 1
        Poly num0 = y.algebraic.num(), den0 = y.algebraic.den();
        Integer lcm_all = 1;
        for (const Poly* p : {&num0, &den0})
            for (long i = 0; i <= p->degree(); ++i) lcm_all = lcm(lcm_all, denominator(p->coeff(i)));
        alg["num"] = poly_int_list(num0 * Rational(lcm_all));
        alg["den"] = poly_int_list(den0 * Rational(lcm_all));
    } else {
        Json factors = Json::array();
        for (const auto& f : y.algebraic.factors)
            factors.push_back({{"root", rational_str(f.root)}, {"power", rational_str(f.power)}});
        alg["factors"] = std::move(factors);
    }
    j["algebraic"] = std::move(alg);
    j["flat"] = series_to_json(y.flat);
    j["normalization"] = {{"flat_constant", rational_str(y.flat_constant)}};
    return j;
}

Json deriv_to_json(const DerivOperator& d) {
    Json cs = Json::array();
    for (const auto& f : d.coeffs()) {
        Json one;
        auto [ns, np] = f.num().primitive();
        auto [ds, dp] = f.den().primitive();
        Rational scale = ns / ds;
        one["scale"] = rational_str(scale);
        one["num"] = poly_int_list(np);
        one["den"] = poly_int_list(dp);
        cs.push_back(std::move(one));
    }
    Json j;
    j["deriv_coeffs"] = std::move(cs);
    return j;
}

Json polytope_to_json(const LatticePolytope2D& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back({v[0], v[1]});
    Json j;
    j["vertices"] = std::move(verts);
    return j;
}

LatticePolytope2D polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw SchemaError("polytope object needs 'vertices'");
    std::vector<LatticeVec> verts;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw SchemaError("vertex must be an integer pair");
        verts.push_back({v[0].get<long>(), v[1].get<long>()});
    }
    return LatticePolytope2D(std::move(verts));
}

PathPolyline path_from_json(const Json& j, unsigned* digits_out) {
    if (!j.is_object() || !j.contains("vertices"))
        throw SchemaError("path object needs 'vertices'");
    if (digits_out) *digits_out = j.value("precision_digits", 50u);
    PathPolyline p;
    auto leg = [](const Json& x) {
        if (x.is_string()) return Real(x.get<std::string>());
        return Real(x.get<double>());
    };
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2) throw SchemaError("path vertex must be [re, im]");
        p.vertices.push_back(Complex(leg(v[0]), leg(v[1])));
    }
    return p;
}

Json cmatrix_to_json(const CMatrix& m, unsigned digits) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& z : row) r.push_back({real_str(z.re, digits), real_str(z.im, digits)});
        rows.push_back(std::move(r));
    }
    return rows;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
}

}  // namespace pe
