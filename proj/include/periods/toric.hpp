#pragma once

#include <array>
#include <string>
#include <vector>

#include "periods/rational.hpp"

namespace pe {

using LatticeVec = std::array<long, 2>;

// Convex lattice polygon, counterclockwise, origin strictly interior,
// stored in canonical rotation (lexicographically minimal vertex first).
class LatticePolytope2D {
public:
    explicit LatticePolytope2D(std::vector<LatticeVec> vertices);

    const std::vector<LatticeVec>& vertices() const { return verts_; }
    int num_vertices() const { return static_cast<int>(verts_.size()); }

    bool contains(const LatticeVec& p) const;
    std::vector<LatticeVec> lattice_points() const;  // boundary included, lex sorted
    // primitive inner facet normals, one per edge (v_i, v_{i+1})
    std::vector<LatticeVec> inner_normals() const;

    friend bool operator==(const LatticePolytope2D& a, const LatticePolytope2D& b) {
        return a.verts_ == b.verts_;
    }

private:
    std::vector<LatticeVec> verts_;
};

LatticePolytope2D polar_dual(const LatticePolytope2D& P);

struct MonomialList {
    std::vector<LatticeVec> points;                 // lattice points of P
    std::vector<std::vector<long>> exponents;       // <m, u_rho> + 1 per ray
    std::vector<std::string> rendered;              // e.g. "z1^3", "z1*z2*z3"
};

// exponent vectors of anticanonical sections; rays must be the inner facet
// normals of P (validated)
MonomialList anticanonical_sections(const LatticePolytope2D& P,
                                    const std::vector<LatticeVec>& rays);
// same with the rays derived from P itself
MonomialList anticanonical_sections(const LatticePolytope2D& P);

}  // namespace pe
