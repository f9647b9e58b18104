#pragma once

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace toric {

// A bounded H-polytope whose inequalities individually may be strict, paired
// with the full-rank lattice that fixes volume normalization and counting.
class HalfOpenPolytope {
public:
    HalfOpenPolytope(HPolyhedron base, Lattice lattice);

    std::size_t ambient_rank() const { return base_.ambient_rank(); }
    const HPolyhedron& base() const { return base_; }
    const Lattice& lattice() const { return lattice_; }

    bool contains(const RatVector& x) const { return base_.contains(x); }

private:
    HPolyhedron base_;
    Lattice lattice_;
};

// Vertices of the closure, sorted; empty when the half-open set is empty.
// Throws UnboundedError naming a recession ray.
std::vector<RatVector> vertices(const HalfOpenPolytope& p);

// Volume of the closure, normalized so a fundamental cell of p.lattice() has
// volume 1.
Rational volume(const HalfOpenPolytope& p);

// #(p ∩ (1/q)·lattice), honoring strict inequalities.
std::uint64_t count_scaled_lattice_points(const HalfOpenPolytope& p, std::uint64_t q);

// The points counted above, as q·x in ambient integer coordinates, sorted.
IntMatrix scaled_lattice_points(const HalfOpenPolytope& p, std::uint64_t q);

// (p - scale·q) ∩ cone. Facets of the Minkowski sum are strict exactly when
// the face of cl(p) that supports them misses p; facets of `cone` stay closed.
// Throws UnboundedError when the result is unbounded.
HalfOpenPolytope minkowski_sum_intersect(const HalfOpenPolytope& p, const VPolyhedron& q, const Rational& scale,
                                         const HPolyhedron& cone);

// Cartesian product; the lattice is the direct sum.
HalfOpenPolytope product(const HalfOpenPolytope& a, const HalfOpenPolytope& b);

// Worker threads used by lattice-point counting: hardware concurrency,
// capped by TORIC_FSIG_THREADS when set.
std::size_t worker_count();

}  // namespace toric
