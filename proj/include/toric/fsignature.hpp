#pragma once

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

// k[sigma^vee ∩ L] with N = Z^n and M = Z^n its dual; L defaults to M.
class ToricRing {
public:
    // Throws InvalidConeError unless sigma is strongly convex, and InputError
    // unless `sublattice` (when given) is a full-rank lattice in Z^n.
    explicit ToricRing(Cone sigma, std::optional<Lattice> sublattice = std::nullopt);

    std::size_t rank() const { return sigma_.ambient_rank(); }
    const Cone& sigma() const { return sigma_; }
    const std::optional<Lattice>& sublattice() const { return sublattice_; }
    // L when given, otherwise M = Z^n.
    Lattice character_lattice() const;
    bool full_dimensional() const { return full_dimensional_; }

private:
    Cone sigma_;
    std::optional<Lattice> sublattice_;
    bool full_dimensional_ = false;
};

// D = sum_i a_i D_i, one coefficient per ray of sigma in the cone's ray order.
struct TorusDivisor {
    std::vector<Rational> coefficients;

    static TorusDivisor zero(const ToricRing& ring);
};

// Exponent vectors of monomial generators.
struct MonomialIdeal {
    IntMatrix generators;

    static MonomialIdeal unit(const ToricRing& ring);
};

struct TripleProblem {
    ToricRing ring;
    TorusDivisor divisor;
    MonomialIdeal ideal;
    Rational t;
};

struct FSignatureResult {
    Rational value;
    HalfOpenPolytope polytope;
    std::size_t torus_rank = 0;
    std::optional<RatVector> qgorenstein_vector;
    // Volume of P^D ∩ t·Newt(a), when the reflection cross-check ran.
    std::optional<Rational> reflection_value;
};

// Checks lengths and effectivity (a_i >= 0). Throws InputError / EffectivityError.
void validate(const ToricRing& ring, const TorusDivisor& divisor);
// Checks that every generator lies in sigma^vee ∩ L.
void validate(const ToricRing& ring, const MonomialIdeal& ideal);

// {w : 0 <= w·v_i < bound_i}: bound_i = 1 - a_i for a divisor, otherwise c_i
// (the minimal positive pairing of L with v_i, which is 1 for L = M).
// Requires a full-dimensional sigma (PreconditionError otherwise) and, with a
// divisor, L = M.
HalfOpenPolytope build_p_polytope(const ToricRing& ring, const std::optional<TorusDivisor>& divisor = std::nullopt);

// s(R) = Vol(P_sigma) (or Vol_L(P_sigma^L)), splitting torus factors first.
FSignatureResult f_signature(const ToricRing& ring);

// conv(generators) + sigma^vee, pruned to its extreme points.
VPolyhedron newton_polyhedron(const MonomialIdeal& ideal, const ToricRing& ring);

// s(R, D) = Vol(P_sigma^D).
FSignatureResult f_signature_pair(const ToricRing& ring, const TorusDivisor& divisor);

struct TripleOptions {
    bool reflection_check = true;
};

// s(R, D, a^t) = Vol((P_sigma^D - t·Newt(a)) ∩ sigma^vee). When (R, D) is
// Q-Gorenstein the value is recomputed as Vol(P_sigma^D ∩ t·Newt(a)) and the
// two must agree exactly (std::logic_error otherwise).
FSignatureResult f_signature_triple(const TripleProblem& problem, const TripleOptions& options = {});

// w with w·v_i = -1 + a_i for every ray, when one exists.
std::optional<RatVector> q_gorenstein_vector(const ToricRing& ring, const TorusDivisor& divisor);

// t·Newt(a) in H-representation (closed); t = 0 gives sigma^vee.
HPolyhedron scaled_newton_halfspaces(const MonomialIdeal& ideal, const ToricRing& ring, const Rational& t);

struct SinghPresentation {
    bool full = false;
    bool property_star = false;
};

// S = semigroup generated by nonnegative exponent vectors inside k[x_1..x_n].
// full: Lattice(S) ∩ Z^n_{>=0} = S. property_star: for each i, Lattice(S)
// has a vector with i-th coordinate -1.
SinghPresentation check_singh_presentation(const IntMatrix& generators, std::size_t ambient_rank);

// #{v in Lattice(S) : 0 <= v_i < q for all i}. Requires a full presentation
// with property (*).
std::uint64_t singh_count(const IntMatrix& generators, std::size_t ambient_rank, std::uint64_t q);

// The first orthant with L = Lattice(S), the ring a Singh presentation describes.
ToricRing singh_ring(const IntMatrix& generators, std::size_t ambient_rank);

}  // namespace toric
