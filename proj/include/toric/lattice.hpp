#pragma once

#include "toric/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

// A subgroup of Z^n given by linearly independent rows kept in row-style
// Hermite normal form, so two lattices are equal iff their bases are equal.
class Lattice {
public:
    // Z^n itself.
    static Lattice standard(std::size_t ambient_rank);

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t rank() const { return basis_.size(); }
    bool full_rank() const { return basis_.size() == ambient_rank_; }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntVector& v) const;

    // Integer coordinates of v in the stored basis, or nullopt if v is not in
    // the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;

    // Rational coordinates of a point of the real span (nullopt off the span).
    std::optional<RatVector> rational_coordinates(const RatVector& v) const;

    // |det(basis)|; only defined for full rank.
    Integer covolume() const;

    bool operator==(const Lattice&) const = default;

private:
    Lattice(std::size_t ambient_rank, IntMatrix basis) : ambient_rank_(ambient_rank), basis_(std::move(basis)) {}

    friend Lattice hermite_basis(const IntMatrix& generators);
    friend Lattice hermite_basis(const IntMatrix& generators, std::size_t ambient_rank);

    std::size_t ambient_rank_ = 0;
    IntMatrix basis_;
};

// Lattice generated by the rows of `generators`. Throws InputError for an
// empty or ragged generator list.
Lattice hermite_basis(const IntMatrix& generators);

// As above, but an empty generator list yields the zero lattice in Z^ambient_rank.
Lattice hermite_basis(const IntMatrix& generators, std::size_t ambient_rank);

struct LatticeIndex {
    bool infinite = false;
    Integer value = 0;  // meaningful only when !infinite
};

// |ambient / sub|, or infinite when sub has smaller rank. Throws
// ContainmentError when sub is not a subgroup of ambient.
LatticeIndex lattice_index(const Lattice& sub, const Lattice& ambient);

// v divided by the gcd of its coordinates. Throws InputError for v = 0.
IntVector primitivize(const IntVector& v);

// Positive generator of {u·v : u in L}. Throws DegeneratePairingError when the
// pairing vanishes on L.
Integer min_positive_pairing(const Lattice& lattice, const IntVector& v);

// Basis (Hermite form) of {x in Z^n : row·x = 0 for every row}.
Lattice integer_kernel(const IntMatrix& rows, std::size_t ambient_rank);

// Saturation (span ∩ Z^n) of the lattice spanned by the given vectors.
Lattice saturation(const IntMatrix& generators, std::size_t ambient_rank);

// Rows U·basis for a matrix U; used to move lattices under GL(n, Z).
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector apply(const IntMatrix& m, const IntVector& v);       // m·v (column convention)
IntMatrix transpose(const IntMatrix& m);

}  // namespace toric
