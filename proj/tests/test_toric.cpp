#include <doctest.h>

#include <algorithm>

#include "periods/builtin.hpp"
#include "periods/errors.hpp"
#include "periods/toric.hpp"

using namespace pe;

TEST_CASE("polar dual of the P^2 polytope") {
    LatticePolytope2D delta = builtin::p2_polytope();
    LatticePolytope2D dual = polar_dual(delta);
    CHECK(dual == builtin::p2_dual_polytope());
    CHECK(polar_dual(dual) == delta);
}

TEST_CASE("polar duality is an involution on reflexive examples") {
    for (const auto& verts : std::vector<std::vector<LatticeVec>>{
             {{1, 0}, {0, 1}, {-1, -1}},
             {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
             {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}}) {
        LatticePolytope2D p(verts);
        CHECK(polar_dual(polar_dual(p)) == p);
    }
}

TEST_CASE("lattice point counts of the mirror pair") {
    CHECK(builtin::p2_polytope().lattice_points().size() == 10);
    CHECK(builtin::p2_dual_polytope().lattice_points().size() == 4);
}

TEST_CASE("degenerate polytopes are rejected") {
    CHECK_THROWS_AS(LatticePolytope2D({{0, 0}}), InvalidPolytope);
    CHECK_THROWS_AS(LatticePolytope2D({{0, 1}, {1, 0}, {2, -1}}), InvalidPolytope);
    // origin on the boundary
    CHECK_THROWS_AS(LatticePolytope2D({{0, 1}, {-1, 1}, {-1, -1}, {0, -1}}), InvalidPolytope);
}

TEST_CASE("non-reflexive polytopes have non-integral duals") {
    LatticePolytope2D twice({{4, -2}, {-2, 4}, {-2, -2}});
    CHECK_THROWS_AS(polar_dual(twice), NotReflexive);
}

TEST_CASE("anticanonical sections of the dual produce the mirror cubic monomials") {
    MonomialList m = anticanonical_sections(builtin::p2_dual_polytope());
    REQUIRE(m.points.size() == 4);
    std::vector<std::string> rendered = m.rendered;
    std::sort(rendered.begin(), rendered.end());
    CHECK(rendered == std::vector<std::string>{"z1*z2*z3", "z1^3", "z2^3", "z3^3"});
}

TEST_CASE("anticanonical sections of the P^2 polytope are the ten cubics") {
    LatticePolytope2D delta = builtin::p2_polytope();
    MonomialList m = anticanonical_sections(delta);
    CHECK(m.points.size() == 10);
    // all entries share total degree 3
    for (const auto& exps : m.exponents) {
        long total = 0;
        for (long e : exps) {
            CHECK(e >= 0);
            total += e;
        }
        CHECK(total == 3);
    }
    // the vertex (2,-1) gives z1^3 and the interior point gives z1*z2*z3 with
    // rays e1, e2, -e1-e2
    std::vector<LatticeVec> rays{{1, 0}, {0, 1}, {-1, -1}};
    MonomialList explicit_rays = anticanonical_sections(delta, rays);
    for (size_t i = 0; i < explicit_rays.points.size(); ++i) {
        if (explicit_rays.points[i] == LatticeVec{2, -1})
            CHECK(explicit_rays.exponents[i] == std::vector<long>{3, 0, 0});
        if (explicit_rays.points[i] == LatticeVec{0, 0})
            CHECK(explicit_rays.exponents[i] == std::vector<long>{1, 1, 1});
    }
}

TEST_CASE("wrong rays are rejected") {
    std::vector<LatticeVec> wrong{{1, 0}, {0, 1}, {1, 1}};
    CHECK_THROWS_AS(anticanonical_sections(builtin::p2_polytope(), wrong), RaysMismatch);
}
