#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "periods/builtin.hpp"
#include "periods/errors.hpp"
#include "periods/identity_suite.hpp"
#include "periods/json_io.hpp"
#include "periods/special_geometry.hpp"

namespace {

using namespace pe;

struct GlobalOpts {
    std::string out;
    std::string format = "json";
};

void emit(const GlobalOpts& g, const Json& j) {
    std::string text;
    if (g.format == "tsv") {
        std::ostringstream os;
        std::function<void(const std::string&, const Json&)> walk = [&](const std::string& key,
                                                                        const Json& v) {
            if (v.is_object()) {
                for (auto it = v.begin(); it != v.end(); ++it)
                    walk(key.empty() ? it.key() : key + "." + it.key(), it.value());
            } else if (v.is_array()) {
                os << key;
                for (const auto& x : v) os << "\t" << (x.is_string() ? x.get<std::string>() : x.dump());
                os << "\n";
            } else {
                os << key << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        };
        walk("", j);
        text = os.str();
    } else {
        text = j.dump(2) + "\n";
    }
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        if (!f) throw SchemaError("cannot write output file: " + g.out);
        f << text;
    }
}

unsigned default_precision() {
    if (const char* env = std::getenv("PERIOD_ENGINE_PRECISION")) {
        long v = std::atol(env);
        if (v >= 16) return static_cast<unsigned>(v);
    }
    return 50;
}

void validate_order(int order) {
    if (order < 4) throw SchemaError("--order must be at least 4");
}

void validate_precision(unsigned p) {
    if (p < 16) throw SchemaError("--precision must be at least 16 digits");
}

ExpansionPoint parse_point(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return ExpansionPoint::infinity();
    return ExpansionPoint::finite(parse_rational(s));
}

int run(int argc, char** argv) {
    CLI::App app{"exact Picard-Fuchs period engine: Frobenius bases, mirror maps, Yukawa "
                 "couplings, monodromy, toric duals"};
    app.require_subcommand(1);
    app.fallthrough();  // --out/--format may follow the subcommand
    GlobalOpts g;
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv"}));

    std::string op_file, in_file, point_str = "0", around_str = "0", base_str = "1/10";
    int order = 20;
    unsigned precision = default_precision();
    std::string gauge_shift_str;
    std::string name;
    std::string path_file;
    Rational kappa_opt;
    std::string kappa_str;
    bool construct = false, detect = false;
    std::string affine_str, poly_str;
    bool reciprocal = false;

    auto add_op = [&](CLI::App* c) {
        c->add_option("--op", op_file, "operator JSON file")->required();
    };

    auto* frob = app.add_subcommand("frobenius", "Frobenius log-solution basis");
    add_op(frob);
    frob->add_option("--point", point_str, "expansion point (rational or inf)");
    frob->add_option("--order", order, "truncation order");

    auto* mm = app.add_subcommand("mirror-map", "flat coordinate q(z) and its inverse");
    add_op(mm);
    mm->add_option("--order", order, "truncation order");
    mm->add_option("--gauge-shift", gauge_shift_str,
                   "also emit the maps in the arithmetic gauge q -> q/shift");

    auto* yk = app.add_subcommand("yukawa", "algebraic and flat Yukawa coupling");
    add_op(yk);
    yk->add_option("--order", order, "truncation order");

    auto* prep = app.add_subcommand("prepotential", "instanton coefficients from the flat Yukawa");
    add_op(prep);
    prep->add_option("--order", order, "truncation order");
    prep->add_option("--kappa", kappa_str, "classical triple intersection (default: flat constant)");

    auto* symsq = app.add_subcommand("symsq", "symmetric-square construction / detection");
    add_op(symsq);
    symsq->add_flag("--construct", construct, "emit the symmetric square of an order-2 operator");
    symsq->add_flag("--detect", detect, "test an order-3 operator and emit a witness");

    auto* pull = app.add_subcommand("pullback", "operator under a change of variable");
    add_op(pull);
    pull->add_option("--affine", affine_str, "a,b for phi(z) = a z + b");
    pull->add_flag("--reciprocal", reciprocal, "phi(z) = 1/z");
    pull->add_option("--poly", poly_str, "comma-separated coefficients of phi, lowest first");

    auto* mono = app.add_subcommand("monodromy", "monodromy matrix in the Frobenius basis");
    add_op(mono);
    mono->add_option("--around", around_str, "singular point the loop encircles (rational or inf)");
    mono->add_option("--base", base_str, "real rational basepoint");
    mono->add_option("--precision", precision, "working digits");
    mono->add_option("--path-file", path_file, "closed polyline JSON overriding the loop");

    auto* fricke = app.add_subcommand("fricke-check", "tau(a) tau(1-a) = -1/3 residuals");
    add_op(fricke);
    fricke->add_option("--alpha", point_str, "comma-separated rational sample points in (0,1)");
    fricke->add_option("--precision", precision, "working digits");
    fricke->add_option("--gauge-shift", gauge_shift_str, "arithmetic gauge constant");

    auto* cayley = app.add_subcommand("cayley", "normalized period at the orbifold point");
    add_op(cayley);
    cayley->add_option("--precision", precision, "working digits");
    cayley->add_option("--gauge-shift", gauge_shift_str, "arithmetic gauge constant");

    auto* toric = app.add_subcommand("toric", "reflexive polygon operations");
    toric->require_subcommand(1);
    auto* tp = toric->add_subcommand("polar", "polar dual polytope");
    auto* tl = toric->add_subcommand("points", "lattice points");
    auto* ts = toric->add_subcommand("sections", "anticanonical section monomials");
    for (auto* t : {tp, tl, ts}) t->add_option("--in", in_file, "polytope JSON file")->required();

    auto* suite = app.add_subcommand("identity-suite", "run the named acceptance identities");
    suite->add_option("--name", name, "run a single identity by id");

    CLI11_PARSE(app, argc, argv);
    validate_precision(precision);
    validate_order(order);

    auto load_op = [&]() {
        Json j = load_json_file(op_file);
        return std::make_pair(theta_from_json(j), gauge_shift_from_json(j));
    };
    Rational gauge_shift(1);
    auto resolve_gauge = [&](const Rational& from_file) {
        if (!gauge_shift_str.empty()) return parse_rational(gauge_shift_str);
        return from_file;
    };

    if (*frob) {
        auto [L, shift] = load_op();
        FrobeniusBasis b = frobenius_basis(L, parse_point(point_str), order);
        emit(g, basis_to_json(b));
    } else if (*mm) {
        auto [L, shift] = load_op();
        MirrorMap m = mirror_map(L, order);
        Json j;
        j["q_of_z"] = series_to_json(m.q_of_z);
        j["z_of_q"] = series_to_json(m.z_of_q);
        if (!gauge_shift_str.empty()) {
            // z as a series in the rescaled coordinate q/shift
            Rational C = parse_rational(gauge_shift_str);
            std::vector<Rational> scaled = m.z_of_q.coeffs();
            for (size_t k = 0; k < scaled.size(); ++k)
                scaled[k] *= pow_rational(C, static_cast<long>(k) + 1);
            j["gauge_shift"] = rational_str(C);
            j["z_of_q_arithmetic"] = series_to_json(TruncatedSeries(Rational(1), scaled, false));
        }
        emit(g, j);
    } else if (*yk) {
        auto [L, shift] = load_op();
        YukawaCoupling y = yukawa_flat(L, order);
        emit(g, yukawa_to_json(y));
    } else if (*prep) {
        auto [L, shift] = load_op();
        YukawaCoupling y = yukawa_flat(L, order);
        Rational kappa = kappa_str.empty() ? y.flat_constant : parse_rational(kappa_str);
        Prepotential F = prepotential_from_yukawa(y.flat, kappa);
        Json j;
        j["kappa"] = rational_str(F.kappa);
        j["quadratic_part"] = {{"c2", F.c2_label}, {"c1", F.c1_label}, {"constant", F.constant_label}};
        Json inst = Json::array();
        for (const auto& c : F.instanton) inst.push_back(rational_str(c));
        j["instanton"] = std::move(inst);
        emit(g, j);
    } else if (*symsq) {
        auto [L, shift] = load_op();
        if (construct == detect)
            throw SchemaError("symsq needs exactly one of --construct / --detect");
        if (construct) {
            ThetaOperator built = deriv_to_theta(symmetric_square(theta_to_deriv(L)), L.var());
            emit(g, theta_to_json(built));
        } else {
            auto witness = is_symmetric_square(theta_to_deriv(L));
            Json j;
            j["is_symmetric_square"] = witness.has_value();
            if (witness) j["witness"] = deriv_to_json(*witness);
            emit(g, j);
        }
    } else if (*pull) {
        auto [L, shift] = load_op();
        int chosen = (!affine_str.empty()) + reciprocal + (!poly_str.empty());
        if (chosen != 1) throw SchemaError("pullback needs exactly one of --affine/--reciprocal/--poly");
        Substitution sub = ReciprocalSubstitution{};
        if (!affine_str.empty()) {
            auto comma = affine_str.find(',');
            if (comma == std::string::npos) throw SchemaError("--affine expects 'a,b'");
            sub = AffineSubstitution{parse_rational(affine_str.substr(0, comma)),
                                     parse_rational(affine_str.substr(comma + 1))};
        } else if (!poly_str.empty()) {
            std::vector<Rational> cs;
            std::stringstream ss(poly_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) cs.push_back(parse_rational(tok));
            sub = PolynomialSubstitution{Poly(std::move(cs))};
        }
        emit(g, theta_to_json(pullback(L, sub)));
    } else if (*mono) {
        auto [L, shift] = load_op();
        MonodromyMatrix m;
        PrecisionGuard sizing_guard(precision + 25);
        if (!path_file.empty()) {
            unsigned d = precision;
            PathPolyline loop = path_from_json(load_json_file(path_file), &d);
            double r = abs(loop.vertices.front()).convert_to<double>();
            m = monodromy_along(L, loop, precision, series_order_for(r, precision + 20));
        } else {
            Complex base(parse_rational(base_str));
            double r = abs(base).convert_to<double>();
            m = monodromy(L, base, parse_point(around_str), precision,
                          series_order_for(r, precision + 20));
        }
        PrecisionGuard guard(precision + 25);
        Json j;
        j["matrix"] = cmatrix_to_json(m.entries, precision);
        j["determinant"] = {real_str(m.determinant.re, precision), real_str(m.determinant.im, precision)};
        j["loop"] = m.loop;
        FrobeniusBasis basis = frobenius_basis(L, ExpansionPoint::zero(), 4);
        j["log_gauge_matrix"] = cmatrix_to_json(log_gauge(m.entries, basis), precision);
        // Fuchsian loops have unimodular determinant exp(2 pi i sum of exponents)
        j["residuals"] = {{"abs_det_minus_one", real_str(abs(abs(m.determinant) - 1), 6)}};
        emit(g, j);
    } else if (*fricke) {
        auto [L, shift] = load_op();
        Rational C = resolve_gauge(shift);
        PrecisionGuard guard(precision + 25);
        int sorder = series_order_for(0.1, precision + 20);
        Json arr = Json::array();
        std::stringstream ss(point_str == "0" ? std::string("1/5,1/3,2/5") : point_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            Rational a = parse_rational(tok);
            if (a <= 0 || a >= 1) throw SchemaError("fricke sample points must lie in (0,1)");
            auto tau_at = [&](const Rational& x) {
                PathPolyline p;
                p.vertices = {Complex(Rational(1, 10)), Complex(x)};
                return normalized_period_value(L, p, precision, C, sorder);
            };
            Complex ta = tau_at(a), tb = tau_at(Rational(1) - a);
            Complex prod = ta * tb;
            Json one;
            one["alpha"] = rational_str(a);
            one["tau"] = {real_str(ta.re, precision), real_str(ta.im, precision)};
            one["tau_beta"] = {real_str(tb.re, precision), real_str(tb.im, precision)};
            one["product"] = {real_str(prod.re, precision), real_str(prod.im, precision)};
            one["residual"] = real_str(abs(prod + Complex(Rational(1, 3))), 6);
            arr.push_back(std::move(one));
        }
        Json j;
        j["gauge_shift"] = rational_str(C);
        j["samples"] = std::move(arr);
        emit(g, j);
    } else if (*cayley) {
        auto [L, shift] = load_op();
        Rational C = resolve_gauge(shift);
        int sorder = series_order_for(0.125, precision + 25);
        CayleyResult c = cayley_fixed_point(L, precision, C, sorder);
        PrecisionGuard guard(precision + 25);
        Json j;
        j["tau_star"] = {real_str(c.tau_star.re, precision), real_str(c.tau_star.im, precision)};
        j["path_discrepancy"] = real_str(c.path_discrepancy, 6);
        j["orbifold_residual"] = real_str(c.orbifold_residual, 6);
        emit(g, j);
    } else if (*toric) {
        LatticePolytope2D P = polytope_from_json(load_json_file(in_file));
        if (*tp) {
            emit(g, polytope_to_json(polar_dual(P)));
        } else if (*tl) {
            Json pts = Json::array();
            auto points = P.lattice_points();
            for (const auto& p : points) pts.push_back({p[0], p[1]});
            Json j;
            j["count"] = points.size();
            j["points"] = std::move(pts);
            emit(g, j);
        } else {
            MonomialList m = anticanonical_sections(P);
            Json rays = Json::array();
            for (const auto& r : P.inner_normals()) rays.push_back({r[0], r[1]});
            Json entries = Json::array();
            for (size_t i = 0; i < m.points.size(); ++i) {
                Json one;
                one["point"] = {m.points[i][0], m.points[i][1]};
                one["exponents"] = m.exponents[i];
                one["monomial"] = m.rendered[i];
                entries.push_back(std::move(one));
            }
            Json j;
            j["rays"] = std::move(rays);
            j["monomials"] = std::move(entries);
            emit(g, j);
        }
    } else if (*suite) {
        std::vector<CheckResult> results;
        if (!name.empty())
            results.push_back(run_identity(name));
        else
            results = run_all_identities();
        bool all = true;
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << "  " << r.detail << "\n";
            if (!r.pass) all = false;
        }
        return all ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pe::SchemaError& e) {
        std::cerr << pe::Json{{"error", {{"type", "schema"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const pe::MathError& e) {
        std::cerr << pe::Json{{"error", {{"type", "precondition"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << pe::Json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }
}
