#pragma once

#include "toric/lattice.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <vector>

namespace toric {

// normal·x >= offset, or normal·x > offset when strict.
struct Inequality {
    IntVector normal;
    Rational offset;
    bool strict = false;

    bool satisfied_by(const RatVector& x) const;
    bool operator==(const Inequality&) const = default;
};

class HPolyhedron {
public:
    HPolyhedron() = default;
    explicit HPolyhedron(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {}
    HPolyhedron(std::size_t ambient_rank, std::vector<Inequality> inequalities);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<Inequality>& inequalities() const { return inequalities_; }

    // Appends unless an identical inequality is already present. Throws
    // InputError for a zero or wrong-length normal.
    void add(Inequality inequality);

    bool contains(const RatVector& x) const;
    // Membership in the topological closure (strict flags ignored).
    bool closure_contains(const RatVector& x) const;

private:
    std::size_t ambient_rank_ = 0;
    std::vector<Inequality> inequalities_;
};

// conv(vertices) + cone(rays); no vertices means the empty set.
class VPolyhedron {
public:
    VPolyhedron() = default;
    VPolyhedron(std::size_t ambient_rank, std::vector<RatVector> vertices, IntMatrix rays);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const IntMatrix& rays() const { return rays_; }
    bool empty() const { return vertices_.empty(); }
    bool bounded() const { return rays_.empty(); }

private:
    std::size_t ambient_rank_ = 0;
    std::vector<RatVector> vertices_;
    IntMatrix rays_;
};

struct DualCone;

// A rational polyhedral cone in N = Z^n, stored by its minimal set of
// primitive generators.
class Cone {
public:
    // Primitivizes, then drops duplicates and every generator that is a
    // nonnegative combination of the others; survivors keep their input order.
    // Throws InputError on a zero or wrong-length generator.
    static Cone generated_by(std::size_t ambient_rank, const IntMatrix& generators);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const IntMatrix& rays() const { return rays_; }

private:
    Cone(std::size_t ambient_rank, IntMatrix rays) : ambient_rank_(ambient_rank), rays_(std::move(rays)) {}
    friend DualCone dual_cone(const Cone& c);

    std::size_t ambient_rank_ = 0;
    IntMatrix rays_;
};

struct DualCone {
    HPolyhedron halfspaces;  // {u : u·v_i >= 0}
    Cone cone;               // minimal generators; a lineality direction l appears as l and -l
};

DualCone dual_cone(const Cone& c);

struct ConeClass {
    bool strongly_convex = false;
    bool full_dimensional = false;
    std::size_t span_rank = 0;
    bool operator==(const ConeClass&) const = default;
};

ConeClass classify_cone(const Cone& c);

struct TorusSplit {
    Cone cone;            // the cone in coordinates of `lattice`, full-dimensional there
    Lattice lattice;      // N' = span(c) ∩ N, basis rows in the coordinates of N's ambient space
    std::size_t torus_rank = 0;
};

// Throws InvalidConeError for a cone that is not strongly convex.
TorusSplit split_torus_factors(const Cone& c, const Lattice& n);

HPolyhedron hull_to_halfspaces(const VPolyhedron& v);
VPolyhedron halfspaces_to_hull(const HPolyhedron& h);

}  // namespace toric
