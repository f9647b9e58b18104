#include "toric/cone.hpp"

#include "toric/double_description.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace toric {

bool Inequality::satisfied_by(const RatVector& x) const {
    const Rational lhs = dot(normal, x);
    return strict ? lhs > offset : lhs >= offset;
}

HPolyhedron::HPolyhedron(std::size_t ambient_rank, std::vector<Inequality> inequalities) : ambient_rank_(ambient_rank) {
    for (auto& inequality : inequalities) {
        add(std::move(inequality));
    }
}

void HPolyhedron::add(Inequality inequality) {
    if (inequality.normal.size() != ambient_rank_) {
        throw InputError("inequality normal has the wrong length");
    }
    if (is_zero(inequality.normal)) {
        throw InputError("inequality normal is zero");
    }
    if (std::find(inequalities_.begin(), inequalities_.end(), inequality) == inequalities_.end()) {
        inequalities_.push_back(std::move(inequality));
    }
}

bool HPolyhedron::contains(const RatVector& x) const {
    return std::all_of(inequalities_.begin(), inequalities_.end(),
                       [&](const Inequality& h) { return h.satisfied_by(x); });
}

bool HPolyhedron::closure_contains(const RatVector& x) const {
    return std::all_of(inequalities_.begin(), inequalities_.end(),
                       [&](const Inequality& h) { return dot(h.normal, x) >= h.offset; });
}

VPolyhedron::VPolyhedron(std::size_t ambient_rank, std::vector<RatVector> vertices, IntMatrix rays)
    : ambient_rank_(ambient_rank), vertices_(std::move(vertices)) {
    for (const auto& v : vertices_) {
        if (v.size() != ambient_rank_) {
            throw InputError("vertex has the wrong length");
        }
    }
    for (auto& r : rays) {
        if (r.size() != ambient_rank_) {
            throw InputError("ray has the wrong length");
        }
        IntVector p = primitivize(r);
        if (std::find(rays_.begin(), rays_.end(), p) == rays_.end()) {
            rays_.push_back(std::move(p));
        }
    }
}

namespace {

// r lies in cone(others) iff it pairs nonnegatively with the generators of
// the dual of cone(others) and vanishes on its lineality space.
bool in_cone(const IntVector& r, const IntMatrix& others, std::size_t n) {
    const ConeGenerators dual = double_description(others, n);
    for (const auto& u : dual.rays) {
        if (dot(u, r) < 0) {
            return false;
        }
    }
    for (const auto& l : dual.lines) {
        if (dot(l, r) != 0) {
            return false;
        }
    }
    return true;
}

std::string format(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].get_str();
    }
    return s + ")";
}

}  // namespace

Cone Cone::generated_by(std::size_t ambient_rank, const IntMatrix& generators) {
    IntMatrix rays;
    for (const auto& g : generators) {
        if (g.size() != ambient_rank) {
            throw InputError("cone generator " + format(g) + " does not have length " + std::to_string(ambient_rank));
        }
        if (is_zero(g)) {
            throw InputError("cone generator is the zero vector");
        }
        IntVector p = primitivize(g);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) {
            rays.push_back(std::move(p));
        }
    }
    for (std::size_t i = 0; i < rays.size();) {
        IntMatrix others;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            if (j != i) {
                others.push_back(rays[j]);
            }
        }
        if (in_cone(rays[i], others, ambient_rank)) {
            rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return Cone(ambient_rank, std::move(rays));
}

DualCone dual_cone(const Cone& c) {
    const std::size_t n = c.ambient_rank();
    HPolyhedron h(n);
    for (const auto& v : c.rays()) {
        h.add({v, Rational(0), false});
    }
    ConeGenerators g = double_description(c.rays(), n);
    IntMatrix rays = std::move(g.rays);
    for (const auto& l : g.lines) {
        rays.push_back(l);
        IntVector neg = l;
        for (auto& x : neg) {
            x = -x;
        }
        rays.push_back(std::move(neg));
    }
    return {std::move(h), Cone(n, std::move(rays))};
}

ConeClass classify_cone(const Cone& c) {
    const std::size_t n = c.ambient_rank();
    const ConeGenerators dual = double_description(c.rays(), n);
    IntMatrix all = dual.rays;
    all.insert(all.end(), dual.lines.begin(), dual.lines.end());
    ConeClass out;
    out.span_rank = rank(c.rays());
    out.full_dimensional = out.span_rank == n;
    // sigma is strongly convex iff its dual is full-dimensional.
    out.strongly_convex = rank(all) == n;
    return out;
}

TorusSplit split_torus_factors(const Cone& c, const Lattice& n_lattice) {
    const std::size_t n = c.ambient_rank();
    if (n_lattice.ambient_rank() != n || !n_lattice.full_rank()) {
        throw InputError("cocharacter lattice must be full rank in the cone's ambient space");
    }
    const ConeClass cls = classify_cone(c);
    if (!cls.strongly_convex) {
        throw InvalidConeError("cone contains a line; torus factors are only split off strongly convex cones");
    }
    if (cls.full_dimensional) {
        return {c, n_lattice, 0};
    }
    // Work in N-coordinates, where N is the standard lattice.
    IntMatrix ray_coords;
    for (const auto& r : c.rays()) {
        auto coords = n_lattice.coordinates(r);
        if (!coords) {
            throw ContainmentError("cone ray " + format(r) + " is not in the lattice N");
        }
        ray_coords.push_back(std::move(*coords));
    }
    const Lattice sub = saturation(ray_coords, n);
    IntMatrix sub_rays;
    for (const auto& r : ray_coords) {
        sub_rays.push_back(*sub.coordinates(r));
    }
    IntMatrix ambient_basis = multiply(sub.basis(), n_lattice.basis());
    Lattice lattice = hermite_basis(ambient_basis, n);
    // Re-express rays against the Hermite basis actually stored.
    IntMatrix rays;
    for (const auto& r : c.rays()) {
        rays.push_back(*lattice.coordinates(r));
    }
    return {Cone::generated_by(sub.rank(), rays), std::move(lattice), n - sub.rank()};
}

HPolyhedron hull_to_halfspaces(const VPolyhedron& v) {
    const std::size_t n = v.ambient_rank();
    HPolyhedron h(n);
    if (v.empty()) {
        if (n > 0) {
            IntVector e(n, Integer(0));
            e[0] = 1;
            h.add({e, Rational(1), false});
            e[0] = -1;
            h.add({e, Rational(0), false});
        }
        return h;
    }
    // Homogenize: the polyhedron is the slice lambda = 1 of cone{(v,1), (r,0)};
    // its facets are the generators of the dual of that cone.
    IntMatrix generators;
    for (const auto& p : v.vertices()) {
        Integer den = 1;
        for (const auto& x : p) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        IntVector g;
        for (const auto& x : p) {
            g.push_back(x.get_num() * (den / x.get_den()));
        }
        g.push_back(den);
        generators.push_back(std::move(g));
    }
    for (const auto& r : v.rays()) {
        IntVector g = r;
        g.push_back(0);
        generators.push_back(std::move(g));
    }
    const ConeGenerators dual = double_description(generators, n + 1);

    IntVector at_infinity(n + 1, Integer(0));
    at_infinity[n] = 1;
    IntMatrix with_lines = dual.lines;
    const std::size_t line_rank = rank(with_lines);
    for (const auto& g : dual.rays) {
        // Skip the facet lambda >= 0 (equal to e_{n+1} modulo the lineality space).
        IntMatrix test = with_lines;
        test.push_back(g);
        const std::size_t r1 = rank(test);
        test.push_back(at_infinity);
        if (r1 == line_rank + 1 && rank(test) == r1) {
            continue;
        }
        IntVector normal(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
        if (is_zero(normal)) {
            continue;
        }
        h.add({normal, Rational(-g[n]), false});
    }
    for (const auto& l : dual.lines) {
        IntVector normal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
        if (is_zero(normal)) {
            continue;
        }
        h.add({normal, Rational(-l[n]), false});
        for (auto& x : normal) {
            x = -x;
        }
        h.add({normal, Rational(l[n]), false});
    }
    return h;
}

VPolyhedron halfspaces_to_hull(const HPolyhedron& h) {
    const std::size_t n = h.ambient_rank();
    IntMatrix constraints;
    for (const auto& ineq : h.inequalities()) {
        const Integer& den = ineq.offset.get_den();
        IntVector row;
        for (const auto& a : ineq.normal) {
            row.push_back(a * den);
        }
        row.push_back(-ineq.offset.get_num());
        constraints.push_back(std::move(row));
    }
    IntVector lambda(n + 1, Integer(0));
    lambda[n] = 1;
    constraints.push_back(std::move(lambda));
    const ConeGenerators g = double_description(constraints, n + 1);

    std::vector<RatVector> vertices;
    IntMatrix rays;
    for (const auto& r : g.rays) {
        if (r[n] > 0) {
            RatVector p;
            for (std::size_t i = 0; i < n; ++i) {
                p.push_back(make_rational(r[i], r[n]));
            }
            vertices.push_back(std::move(p));
        } else {
            rays.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        }
    }
    if (vertices.empty()) {
        return VPolyhedron(n, {}, {});
    }
    for (const auto& l : g.lines) {
        // lambda >= 0 is a constraint, so every line lies in lambda = 0.
        IntVector dir(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
        rays.push_back(dir);
        for (auto& x : dir) {
            x = -x;
        }
        rays.push_back(std::move(dir));
    }
    std::sort(vertices.begin(), vertices.end());
    return VPolyhedron(n, std::move(vertices), std::move(rays));
}

}  // namespace toric
