#include "support.hpp"

#include "toric/cone.hpp"
#include "toric/double_description.hpp"
#include "toric/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace toric;
using namespace toric::testing;

namespace {

IntMatrix sorted(IntMatrix m)
{
    std::sort(m.begin(), m.end());
    return m;
}

bool has_inequality(const HPolyhedron& h, const IntVector& normal, const char* offset)
{
    for (const auto& ineq : h.inequalities())
        if (ineq.normal == normal && ineq.offset == q(offset))
            return true;
    return false;
}

bool v_contains(const VPolyhedron& v, const RatVector& x)
{
    // x = sum l_j p_j + sum m_k r_k, l >= 0, sum l = 1, m >= 0; small cases by a
    // DD-free test: use the H-representation of the homogenized cone.
    IntMatrix gens;
    for (const auto& p : v.vertices()) {
        Integer den = 1;
        for (const auto& c : p)
            den = lcm(den, c.get_den());
        IntVector g;
        g.push_back(den);
        for (const auto& c : p)
            g.push_back(Integer(c * den));
        gens.push_back(g);
    }
    for (const auto& r : v.rays()) {
        IntVector g{Integer(0)};
        g.insert(g.end(), r.begin(), r.end());
        gens.push_back(g);
    }
    Cone c = Cone::generated_by(v.ambient_rank() + 1, gens);
    DualCone d = dual_cone(c);
    RatVector hx{Rational(1)};
    hx.insert(hx.end(), x.begin(), x.end());
    for (const auto& r : d.cone.rays())
        if (dot(r, hx) < 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("cone generators are primitive and minimal")
{
    Cone c = Cone::generated_by(2, mat({{2, 0}, {1, 1}, {0, 3}, {1, 0}}));
    CHECK(sorted(c.rays()) == sorted(mat({{1, 0}, {0, 1}})));
    CHECK_THROWS_AS(Cone::generated_by(2, mat({{0, 0}})), InputError);
    CHECK_THROWS_AS(Cone::generated_by(2, mat({{1, 0, 0}})), InputError);
}

TEST_CASE("dual_cone examples")
{
    DualCone orth = dual_cone(Cone::generated_by(2, mat({{1, 0}, {0, 1}})));
    CHECK(sorted(orth.cone.rays()) == sorted(mat({{1, 0}, {0, 1}})));

    DualCone quad = dual_cone(Cone::generated_by(2, mat({{0, 1}, {2, -1}})));
    CHECK(sorted(quad.cone.rays()) == sorted(mat({{1, 0}, {1, 2}})));
    CHECK(quad.halfspaces.inequalities().size() == 2);

    DualCone ray = dual_cone(Cone::generated_by(2, mat({{1, 0}})));
    CHECK(sorted(ray.cone.rays()) == sorted(mat({{1, 0}, {0, 1}, {0, -1}})));
    CHECK(has_inequality(ray.halfspaces, make_int_vector({1, 0}), "0"));
}

TEST_CASE("double dualization returns the input rays")
{
    const std::pair<std::size_t, IntMatrix> cases[] = {
        {2, mat({{0, 1}, {2, -1}})},
        {2, mat({{1, 0}, {1, 5}})},
        {3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})},
        {3, mat({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})},
        {3, mat({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})},
        {4, mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, -1, 1}, {0, 0, 0, 1}})},
    };
    for (const auto& [n, rays] : cases) {
        Cone c = Cone::generated_by(n, rays);
        Cone back = dual_cone(dual_cone(c).cone).cone;
        CHECK(sorted(back.rays()) == sorted(c.rays()));
    }
    for (const auto& cc : load_corpus()) {
        Cone c = Cone::generated_by(cc.rank, cc.rays);
        CHECK(sorted(dual_cone(dual_cone(c).cone).cone.rays()) == sorted(c.rays()));
    }
}

TEST_CASE("classify_cone examples")
{
    CHECK(classify_cone(Cone::generated_by(3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))) == ConeClass{true, true, 3});
    CHECK(classify_cone(Cone::generated_by(2, mat({{1, 0}}))) == ConeClass{true, false, 1});
    CHECK(classify_cone(Cone::generated_by(2, mat({{1, 0}, {-1, 0}}))) == ConeClass{false, false, 1});
}

TEST_CASE("full-dimensional iff the dual is strongly convex")
{
    const std::pair<std::size_t, IntMatrix> cases[] = {
        {2, mat({{1, 0}})},
        {2, mat({{1, 0}, {-1, 0}})},
        {2, mat({{0, 1}, {2, -1}})},
        {3, mat({{1, 1, 0}, {1, -1, 0}})},
        {3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
        {3, mat({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}})},
        {2, mat({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})},
    };
    for (const auto& [n, rays] : cases) {
        Cone c = Cone::generated_by(n, rays);
        ConeClass a = classify_cone(c);
        ConeClass b = classify_cone(dual_cone(c).cone);
        CHECK(a.full_dimensional == b.strongly_convex);
        CHECK(b.full_dimensional == a.strongly_convex);
    }
}

TEST_CASE("split_torus_factors examples")
{
    TorusSplit s = split_torus_factors(Cone::generated_by(2, mat({{1, 0}})), Lattice::standard(2));
    CHECK(s.torus_rank == 1);
    CHECK(s.cone.ambient_rank() == 1);
    CHECK(s.cone.rays() == mat({{1}}));

    Cone quad = Cone::generated_by(2, mat({{0, 1}, {2, -1}}));
    TorusSplit u = split_torus_factors(quad, Lattice::standard(2));
    CHECK(u.torus_rank == 0);
    CHECK(u.cone.rays() == quad.rays());
    CHECK(u.lattice == Lattice::standard(2));

    TorusSplit t = split_torus_factors(Cone::generated_by(3, mat({{1, 1, 0}, {1, -1, 0}})), Lattice::standard(3));
    CHECK(t.torus_rank == 1);
    CHECK(t.cone.ambient_rank() == 2);
    CHECK(classify_cone(t.cone).full_dimensional);
    // N' is the saturated lattice Z^2 x {0}, not the span of the rays
    CHECK(t.lattice == hermite_basis(mat({{1, 0, 0}, {0, 1, 0}})));

    CHECK_THROWS_AS(split_torus_factors(Cone::generated_by(2, mat({{1, 0}, {-1, 0}})), Lattice::standard(2)),
                    InvalidConeError);
}

TEST_CASE("split_torus_factors reconstructs the rays")
{
    const std::pair<std::size_t, IntMatrix> cases[] = {
        {3, mat({{1, 1, 0}, {1, -1, 0}})},
        {3, mat({{0, 1, 0}, {2, -1, 0}})},
        {3, mat({{1, 2, 3}})},
        {4, mat({{1, 0, 1, 0}, {0, 1, 1, 0}, {2, 1, 0, 0}})},
        {3, mat({{2, 0, 2}, {0, 3, 3}})},
    };
    for (const auto& [n, rays] : cases) {
        Cone c = Cone::generated_by(n, rays);
        TorusSplit s = split_torus_factors(c, Lattice::standard(n));
        CHECK(s.torus_rank == n - s.lattice.rank());
        IntMatrix rebuilt;
        for (const auto& r : s.cone.rays()) {
            IntVector v(n, 0);
            for (std::size_t j = 0; j < r.size(); ++j)
                for (std::size_t k = 0; k < n; ++k)
                    v[k] += r[j] * s.lattice.basis()[j][k];
            rebuilt.push_back(v);
        }
        CHECK(sorted(rebuilt) == sorted(c.rays()));
    }
}

TEST_CASE("hull_to_halfspaces examples")
{
    VPolyhedron square(2, {rvec({"0", "0"}), rvec({"1", "0"}), rvec({"0", "1"}), rvec({"1", "1"})}, {});
    CHECK(hull_to_halfspaces(square).inequalities().size() == 4);

    VPolyhedron quad_dual(2, {rvec({"0", "0"})}, mat({{1, 0}, {1, 2}}));
    HPolyhedron h = hull_to_halfspaces(quad_dual);
    CHECK(h.inequalities().size() == 2);
    CHECK(has_inequality(h, make_int_vector({0, 1}), "0"));
    CHECK(has_inequality(h, make_int_vector({2, -1}), "0"));

    VPolyhedron point(3, {rvec({"1/2", "-1", "3"})}, {});
    HPolyhedron hp = hull_to_halfspaces(point);
    CHECK(hp.inequalities().size() == 6);
    CHECK(hp.contains(rvec({"1/2", "-1", "3"})));
    CHECK_FALSE(hp.contains(rvec({"1/2", "-1", "4"})));

    HPolyhedron empty = hull_to_halfspaces(VPolyhedron(1, {}, {}));
    CHECK_FALSE(empty.contains(rvec({"0"})));
}

TEST_CASE("halfspaces_to_hull of an empty system is empty")
{
    HPolyhedron h(2, {Inequality{make_int_vector({1, 0}), q("0"), false},
                      Inequality{make_int_vector({-1, 0}), q("1"), false}});
    CHECK(halfspaces_to_hull(h).empty());
}

TEST_CASE("H to V round trip agrees on sampled points")
{
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 7);

    std::vector<VPolyhedron> shapes = {
        VPolyhedron(2, {rvec({"0", "0"}), rvec({"1/2", "0"}), rvec({"1/2", "1"}), rvec({"1", "1"})}, {}),
        VPolyhedron(2, {rvec({"0", "0"})}, mat({{1, 0}, {1, 2}})),
        VPolyhedron(2, {rvec({"1", "1"}), rvec({"3", "0"})}, mat({{1, 0}, {0, 1}})),
        VPolyhedron(3, {rvec({"0", "0", "0"}), rvec({"1", "0", "0"}), rvec({"0", "1", "0"}), rvec({"0", "0", "1"})},
                    {}),
        VPolyhedron(3, {rvec({"1", "0", "0"})}, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})),
        VPolyhedron(2, {rvec({"0", "0"})}, mat({{1, 0}, {-1, 0}, {0, 1}})),
    };
    for (const auto& v : shapes) {
        HPolyhedron h = hull_to_halfspaces(v);
        VPolyhedron back = halfspaces_to_hull(h);
        HPolyhedron h2 = hull_to_halfspaces(back);
        for (int i = 0; i < 100; ++i) {
            RatVector x;
            for (std::size_t j = 0; j < v.ambient_rank(); ++j)
                x.push_back(make_rational(num(rng), den(rng)) / 8);
            bool in_h = h.contains(x);
            CHECK(in_h == v_contains(v, x));
            CHECK(in_h == v_contains(back, x));
            CHECK(in_h == h2.contains(x));
        }
    }
}

TEST_CASE("double description finds lineality")
{
    ConeGenerators g = double_description(mat({{1, 0, 0}}), 3);
    CHECK(g.rays.size() == 1);
    CHECK(g.lines.size() == 2);
    ConeGenerators z = double_description(mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 2);
    CHECK(z.rays.empty());
    CHECK(z.lines.empty());
}

TEST_CASE("HPolyhedron rejects zero normals and dedupes")
{
    HPolyhedron h(2);
    h.add(Inequality{make_int_vector({1, 0}), q("0"), false});
    h.add(Inequality{make_int_vector({1, 0}), q("0"), false});
    CHECK(h.inequalities().size() == 1);
    CHECK_THROWS_AS(h.add(Inequality{make_int_vector({0, 0}), q("0"), false}), InputError);
    Inequality strict{make_int_vector({-1, 0}), q("-1"), true};
    CHECK(strict.satisfied_by(rvec({"1/2", "0"})));
    CHECK_FALSE(strict.satisfied_by(rvec({"1", "0"})));
}
