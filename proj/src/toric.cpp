#include "periods/toric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "periods/errors.hpp"

namespace pe {

namespace {

long cross(const LatticeVec& a, const LatticeVec& b) {
    return a[0] * b[1] - a[1] * b[0];
}

long dot(const LatticeVec& a, const LatticeVec& b) {
    return a[0] * b[0] + a[1] * b[1];
}

LatticeVec sub(const LatticeVec& a, const LatticeVec& b) {
    return {a[0] - b[0], a[1] - b[1]};
}

}  // namespace

LatticePolytope2D::LatticePolytope2D(std::vector<LatticeVec> vertices) : verts_(std::move(vertices)) {
    size_t n = verts_.size();
    if (n < 3) throw InvalidPolytope("a 2d polytope needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        LatticeVec e1 = sub(verts_[(i + 1) % n], verts_[i]);
        LatticeVec e2 = sub(verts_[(i + 2) % n], verts_[(i + 1) % n]);
        long c = cross(e1, e2);
        if (c == 0) throw InvalidPolytope("three consecutive vertices are collinear");
        if (c < 0) throw InvalidPolytope("vertices must be ordered counterclockwise (convex)");
    }
    // origin strictly interior: strictly left of every directed edge
    for (size_t i = 0; i < n; ++i) {
        LatticeVec e = sub(verts_[(i + 1) % n], verts_[i]);
        LatticeVec to_origin = {-verts_[i][0], -verts_[i][1]};
        if (cross(e, to_origin) <= 0)
            throw InvalidPolytope("origin is not strictly interior");
    }
    // canonical rotation
    size_t best = 0;
    for (size_t i = 1; i < n; ++i)
        if (verts_[i] < verts_[best]) best = i;
    std::rotate(verts_.begin(), verts_.begin() + static_cast<long>(best), verts_.end());
}

bool LatticePolytope2D::contains(const LatticeVec& p) const {
    size_t n = verts_.size();
    for (size_t i = 0; i < n; ++i) {
        LatticeVec e = sub(verts_[(i + 1) % n], verts_[i]);
        if (cross(e, sub(p, verts_[i])) < 0) return false;
    }
    return true;
}

std::vector<LatticeVec> LatticePolytope2D::lattice_points() const {
    long xmin = verts_[0][0], xmax = xmin, ymin = verts_[0][1], ymax = ymin;
    for (const auto& v : verts_) {
        xmin = std::min(xmin, v[0]);
        xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]);
        ymax = std::max(ymax, v[1]);
    }
    std::vector<LatticeVec> pts;
    for (long x = xmin; x <= xmax; ++x)
        for (long y = ymin; y <= ymax; ++y)
            if (contains({x, y})) pts.push_back({x, y});
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<LatticeVec> LatticePolytope2D::inner_normals() const {
    std::vector<LatticeVec> out;
    size_t n = verts_.size();
    for (size_t i = 0; i < n; ++i) {
        LatticeVec e = sub(verts_[(i + 1) % n], verts_[i]);
        LatticeVec normal = {-e[1], e[0]};  // left-hand normal points inward for ccw
        long g = std::gcd(std::abs(normal[0]), std::abs(normal[1]));
        if (g > 1) {
            normal[0] /= g;
            normal[1] /= g;
        }
        out.push_back(normal);
    }
    return out;
}

LatticePolytope2D polar_dual(const LatticePolytope2D& P) {
    // dual vertex u per edge (v_i, v_j): <u, v_i> = <u, v_j> = -1
    std::vector<LatticeVec> dual;
    const auto& vs = P.vertices();
    size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
        const LatticeVec& a = vs[i];
        const LatticeVec& b = vs[(i + 1) % n];
        long det = cross(a, b);
        if (det == 0) throw NotReflexive("edge through the origin");
        long ux_num = -(b[1] - a[1]);
        long uy_num = b[0] - a[0];
        if (ux_num % det != 0 || uy_num % det != 0)
            throw NotReflexive("polar dual has a non-integral vertex");
        dual.push_back({ux_num / det, uy_num / det});
    }
    return LatticePolytope2D(std::move(dual));
}

namespace {

std::string render_monomial(const std::vector<long>& exps) {
    std::ostringstream os;
    bool first = true;
    for (size_t r = 0; r < exps.size(); ++r) {
        if (exps[r] == 0) continue;
        if (!first) os << "*";
        os << "z" << (r + 1);
        if (exps[r] != 1) os << "^" << exps[r];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

MonomialList anticanonical_sections(const LatticePolytope2D& P,
                                    const std::vector<LatticeVec>& rays) {
    // rays must be exactly the inner facet normals (as a set)
    auto expected = P.inner_normals();
    auto sorted_rays = rays;
    std::sort(expected.begin(), expected.end());
    std::sort(sorted_rays.begin(), sorted_rays.end());
    if (expected != sorted_rays)
        throw RaysMismatch("supplied rays are not the inner facet normals of the polytope");

    MonomialList out;
    out.points = P.lattice_points();
    for (const auto& m : out.points) {
        std::vector<long> exps;
        exps.reserve(rays.size());
        for (const auto& u : rays) {
            long e = dot(m, u) + 1;
            if (e < 0)
                throw RaysMismatch("negative exponent <m,u>+1 for an interior lattice point");
            exps.push_back(e);
        }
        out.rendered.push_back(render_monomial(exps));
        out.exponents.push_back(std::move(exps));
    }
    return out;
}

MonomialList anticanonical_sections(const LatticePolytope2D& P) {
    return anticanonical_sections(P, P.inner_normals());
}

}  // namespace pe
