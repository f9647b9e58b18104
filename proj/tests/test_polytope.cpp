#include "support.hpp"

#include "toric/error.hpp"
#include "toric/fsignature.hpp"
#include "toric/polytope.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace toric;
using namespace toric::testing;

namespace {

// lo <= normal·x < hi (or <= hi when closed_top)
void band(HPolyhedron& h, const IntVector& normal, const char* lo, const char* hi, bool strict_top = true)
{
    h.add(Inequality{normal, q(lo), false});
    IntVector neg = normal;
    for (auto& x : neg)
        x = -x;
    h.add(Inequality{neg, -q(hi), strict_top});
}

HalfOpenPolytope unit_cube(std::size_t n, const Lattice& lattice)
{
    HPolyhedron h(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        band(h, e, "0", "1");
    }
    return HalfOpenPolytope(h, lattice);
}

HalfOpenPolytope quadric_p()
{
    HPolyhedron h(2);
    band(h, make_int_vector({0, 1}), "0", "1");
    band(h, make_int_vector({2, -1}), "0", "1");
    return HalfOpenPolytope(h, Lattice::standard(2));
}

HalfOpenPolytope triangle(bool strict)
{
    HPolyhedron h(2);
    h.add(Inequality{make_int_vector({1, 0}), q("0"), false});
    h.add(Inequality{make_int_vector({0, 1}), q("0"), false});
    h.add(Inequality{make_int_vector({-1, -1}), q("-1"), strict});
    return HalfOpenPolytope(h, Lattice::standard(2));
}

HalfOpenPolytope flip_all(const HalfOpenPolytope& p, bool strict)
{
    HPolyhedron h(p.ambient_rank());
    for (auto ineq : p.base().inequalities()) {
        ineq.strict = strict;
        h.add(ineq);
    }
    return HalfOpenPolytope(h, p.lattice());
}

// Image of p under the unimodular map x -> A x (A integer, det ±1), where
// a_inv_t = A^{-T} carries normals: (A^{-T} n)·(A x) = n·x.
HalfOpenPolytope transform(const HalfOpenPolytope& p, const IntMatrix& a, const IntMatrix& a_inv_t)
{
    HPolyhedron h(p.ambient_rank());
    for (auto ineq : p.base().inequalities()) {
        ineq.normal = toric::apply(a_inv_t, ineq.normal);
        h.add(ineq);
    }
    IntMatrix basis;
    for (const auto& b : p.lattice().basis())
        basis.push_back(toric::apply(a, b));
    return HalfOpenPolytope(h, hermite_basis(basis));
}

}  // namespace

TEST_CASE("vertices examples")
{
    CHECK(vertices(unit_cube(2, Lattice::standard(2))) ==
          std::vector<RatVector>{rvec({"0", "0"}), rvec({"0", "1"}), rvec({"1", "0"}), rvec({"1", "1"})});
    CHECK(vertices(quadric_p()) ==
          std::vector<RatVector>{rvec({"0", "0"}), rvec({"1/2", "0"}), rvec({"1/2", "1"}), rvec({"1", "1"})});

    HPolyhedron h(2);
    band(h, make_int_vector({0, 1}), "0", "0");  // 0 <= y < 0
    band(h, make_int_vector({1, 0}), "0", "1");
    HalfOpenPolytope empty(h, Lattice::standard(2));
    CHECK(vertices(empty).empty());
    CHECK(volume(empty) == 0);
    CHECK(count_scaled_lattice_points(empty, 5) == 0);
}

TEST_CASE("unbounded input is rejected")
{
    HPolyhedron h(2);
    h.add(Inequality{make_int_vector({1, 0}), q("0"), false});
    h.add(Inequality{make_int_vector({0, 1}), q("0"), false});
    HalfOpenPolytope p(h, Lattice::standard(2));
    CHECK_THROWS_AS(vertices(p), UnboundedError);
    CHECK_THROWS_AS(volume(p), UnboundedError);
}

TEST_CASE("half-open polytopes need a full-rank lattice")
{
    CHECK_THROWS_AS(HalfOpenPolytope(HPolyhedron(2), hermite_basis(mat({{1, 0}}), 2)), InputError);
}

TEST_CASE("volume examples")
{
    CHECK(volume(quadric_p()) == q("1/2"));
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(volume(unit_cube(n, Lattice::standard(n))) == 1);
    Lattice even = hermite_basis(mat({{1, 1}, {2, 0}}));
    CHECK(volume(unit_cube(2, even)) == q("1/2"));
    CHECK(volume(triangle(true)) == q("1/2"));

    HPolyhedron simplex(3);
    for (int i = 0; i < 3; ++i) {
        IntVector e(3, 0);
        e[i] = 1;
        simplex.add(Inequality{e, q("0"), false});
    }
    simplex.add(Inequality{make_int_vector({-1, -1, -1}), q("-1"), true});
    CHECK(volume(HalfOpenPolytope(simplex, Lattice::standard(3))) == q("1/6"));
}

TEST_CASE("count_scaled_lattice_points examples")
{
    CHECK(count_scaled_lattice_points(unit_cube(2, Lattice::standard(2)), 3) == 9);
    CHECK(count_scaled_lattice_points(quadric_p(), 2) == 2);
    CHECK(scaled_lattice_points(quadric_p(), 2) == mat({{0, 0}, {1, 1}}));
    CHECK(count_scaled_lattice_points(triangle(true), 2) == 3);
    CHECK(count_scaled_lattice_points(triangle(true), 4) == 10);
    CHECK(count_scaled_lattice_points(triangle(true), 8) == 36);
    CHECK(count_scaled_lattice_points(triangle(false), 2) == 6);
}

TEST_CASE("counting respects a sublattice")
{
    Lattice even = hermite_basis(mat({{1, 1}, {2, 0}}));
    HalfOpenPolytope p = unit_cube(2, even);
    for (std::uint64_t qq : {2u, 4u, 8u, 16u}) {
        std::uint64_t brute = 0;
        for (std::uint64_t a = 0; a < qq; ++a)
            for (std::uint64_t b = 0; b < qq; ++b)
                brute += (a + b) % 2 == 0 ? 1 : 0;
        CHECK(count_scaled_lattice_points(p, qq) == brute);
    }
}

TEST_CASE("strictness never changes volume")
{
    std::vector<HalfOpenPolytope> shapes = {quadric_p(), triangle(true), unit_cube(3, Lattice::standard(3))};
    shapes.push_back(build_p_polytope(ring_of(3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}))));
    for (const auto& p : shapes) {
        HalfOpenPolytope closed = flip_all(p, false);
        HalfOpenPolytope open = flip_all(p, true);
        CHECK(volume(closed) == volume(p));
        CHECK(volume(open) == volume(p));
        for (std::uint64_t qq : {2u, 4u}) {
            std::uint64_t c = count_scaled_lattice_points(closed, qq);
            std::uint64_t o = count_scaled_lattice_points(open, qq);
            std::uint64_t m = count_scaled_lattice_points(p, qq);
            CHECK(o <= m);
            CHECK(m <= c);
        }
    }
}

TEST_CASE("unimodular changes of coordinates preserve volume and counts")
{
    const IntMatrix a = mat({{2, 1}, {1, 1}});
    const IntMatrix a_inv_t = mat({{1, -1}, {-1, 2}});
    const IntMatrix b = mat({{1, -2, 0}, {0, 1, 3}, {0, 0, 1}});
    const IntMatrix b_inv_t = mat({{1, 0, 0}, {2, 1, 0}, {-6, -3, 1}});

    for (const auto& p : {quadric_p(), triangle(true), unit_cube(2, hermite_basis(mat({{1, 1}, {2, 0}})))}) {
        HalfOpenPolytope img = transform(p, a, a_inv_t);
        CHECK(volume(img) == volume(p));
        for (std::uint64_t qq : {1u, 2u, 3u, 4u, 8u})
            CHECK(count_scaled_lattice_points(img, qq) == count_scaled_lattice_points(p, qq));
    }
    HalfOpenPolytope conifold = build_p_polytope(ring_of(3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})));
    HalfOpenPolytope img = transform(conifold, b, b_inv_t);
    CHECK(volume(img) == volume(conifold));
    for (std::uint64_t qq : {2u, 3u, 4u})
        CHECK(count_scaled_lattice_points(img, qq) == count_scaled_lattice_points(conifold, qq));
}

TEST_CASE("product rule for volume and counts")
{
    HalfOpenPolytope a = quadric_p();
    HalfOpenPolytope b = triangle(true);
    HalfOpenPolytope ab = product(a, b);
    CHECK(ab.ambient_rank() == 4);
    CHECK(volume(ab) == volume(a) * volume(b));
    for (std::uint64_t qq : {2u, 3u, 4u})
        CHECK(count_scaled_lattice_points(ab, qq) ==
              count_scaled_lattice_points(a, qq) * count_scaled_lattice_points(b, qq));
}

TEST_CASE("thread count does not change counts")
{
    HalfOpenPolytope p = build_p_polytope(ring_of(3, mat({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})));
    std::uint64_t base = count_scaled_lattice_points(p, 16);
    setenv("TORIC_FSIG_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    CHECK(count_scaled_lattice_points(p, 16) == base);
    setenv("TORIC_FSIG_THREADS", "3", 1);
    CHECK(count_scaled_lattice_points(p, 16) == base);
    unsetenv("TORIC_FSIG_THREADS");
}

TEST_CASE("minkowski_sum_intersect examples")
{
    ToricRing ring = quadric();
    DualCone dual = dual_cone(ring.sigma());
    HalfOpenPolytope p = build_p_polytope(ring);

    // scale 0 with q = {0} + sigma^vee rays gives p itself
    VPolyhedron unit(2, {rvec({"0", "0"})}, dual.cone.rays());
    HalfOpenPolytope same = minkowski_sum_intersect(p, unit, q("0"), dual.halfspaces);
    CHECK(volume(same) == volume(p));
    for (std::uint64_t qq : {2u, 4u, 8u})
        CHECK(count_scaled_lattice_points(same, qq) == count_scaled_lattice_points(p, qq));

    // the unit ideal at positive scale still gives p
    HalfOpenPolytope also = minkowski_sum_intersect(p, unit, q("3/2"), dual.halfspaces);
    CHECK(volume(also) == volume(p));
    CHECK(count_scaled_lattice_points(also, 4) == count_scaled_lattice_points(p, 4));

    // a = (x) in the quadric ring: x pairs to 1 with (2,-1), so t = 1/2 already
    // exhausts P and smaller t leaves a positive volume
    MonomialIdeal ideal{mat({{1, 0}})};
    VPolyhedron newt = newton_polyhedron(ideal, ring);
    CHECK(volume(minkowski_sum_intersect(p, newt, q("1/2"), dual.halfspaces)) == 0);
    HalfOpenPolytope tri = minkowski_sum_intersect(p, newt, q("1/4"), dual.halfspaces);
    CHECK(volume(tri) < volume(p));
    CHECK(volume(tri) > 0);
    CHECK(volume(tri) == f_signature_triple(TripleProblem{ring, TorusDivisor::zero(ring), ideal, q("1/4")}).value);

    CHECK_THROWS_AS(minkowski_sum_intersect(p, newt, q("-1"), dual.halfspaces), RangeError);
}

TEST_CASE("minkowski sum with a non-strongly-convex cone is unbounded")
{
    ToricRing ring = quadric();
    HalfOpenPolytope p = build_p_polytope(ring);
    VPolyhedron newt(2, {rvec({"0", "0"})}, mat({{1, 0}, {-1, 0}, {0, 1}}));
    HPolyhedron half(2, {Inequality{make_int_vector({0, 1}), q("0"), false}});
    CHECK_THROWS_AS(volume(minkowski_sum_intersect(p, newt, q("1"), half)), UnboundedError);
}
