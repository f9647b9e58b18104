#include "toric/fsignature.hpp"

#include "toric/double_description.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

namespace {

ConeClass checked_class(const Cone& sigma) {
    const ConeClass cls = classify_cone(sigma);
    if (!cls.strongly_convex) {
        throw InvalidConeError("cone sigma contains a line (not strongly convex)");
    }
    return cls;
}

void require_full_dimensional(const ToricRing& ring, const char* what) {
    if (!ring.full_dimensional()) {
        throw PreconditionError(std::string(what) +
                                " needs a full-dimensional cone; split torus factors first (split_torus_factors)");
    }
}

bool is_standard(const ToricRing& ring) {
    return !ring.sublattice() || *ring.sublattice() == Lattice::standard(ring.rank());
}

bool in_cone(const IntVector& x, const IntMatrix& generators, std::size_t n) {
    const ConeGenerators dual = double_description(generators, n);
    return std::all_of(dual.rays.begin(), dual.rays.end(), [&](const IntVector& u) { return dot(u, x) >= 0; }) &&
           std::all_of(dual.lines.begin(), dual.lines.end(), [&](const IntVector& l) { return dot(l, x) == 0; });
}

}  // namespace

ToricRing::ToricRing(Cone sigma, std::optional<Lattice> sublattice)
    : sigma_(std::move(sigma)), sublattice_(std::move(sublattice)) {
    full_dimensional_ = checked_class(sigma_).full_dimensional;
    if (sublattice_ && (sublattice_->ambient_rank() != rank() || !sublattice_->full_rank())) {
        throw InputError("sublattice L must be a full-rank lattice in M");
    }
}

Lattice ToricRing::character_lattice() const { return sublattice_ ? *sublattice_ : Lattice::standard(rank()); }

TorusDivisor TorusDivisor::zero(const ToricRing& ring) {
    return {std::vector<Rational>(ring.sigma().rays().size(), Rational(0))};
}

MonomialIdeal MonomialIdeal::unit(const ToricRing& ring) { return {{IntVector(ring.rank(), Integer(0))}}; }

void validate(const ToricRing& ring, const TorusDivisor& divisor) {
    if (divisor.coefficients.size() != ring.sigma().rays().size()) {
        throw InputError("divisor has " + std::to_string(divisor.coefficients.size()) + " coefficients but the cone has " +
                         std::to_string(ring.sigma().rays().size()) + " rays");
    }
    for (std::size_t i = 0; i < divisor.coefficients.size(); ++i) {
        if (divisor.coefficients[i] < 0) {
            throw EffectivityError("divisor coefficient a_" + std::to_string(i + 1) + " = " +
                                   to_string(divisor.coefficients[i]) + " is negative");
        }
    }
}

void validate(const ToricRing& ring, const MonomialIdeal& ideal) {
    if (ideal.generators.empty()) {
        throw InputError("monomial ideal needs at least one generator");
    }
    const Lattice lattice = ring.character_lattice();
    for (const auto& g : ideal.generators) {
        if (g.size() != ring.rank()) {
            throw InputError("ideal generator has the wrong length");
        }
        for (const auto& v : ring.sigma().rays()) {
            if (dot(g, v) < 0) {
                throw InputError("ideal generator lies outside sigma^vee");
            }
        }
        if (!lattice.contains(g)) {
            throw InputError("ideal generator lies outside the lattice L");
        }
    }
}

HalfOpenPolytope build_p_polytope(const ToricRing& ring, const std::optional<TorusDivisor>& divisor) {
    require_full_dimensional(ring, "the signature polytope");
    if (divisor) {
        validate(ring, *divisor);
        if (!is_standard(ring)) {
            throw PreconditionError("divisors are only supported with the full character lattice L = M");
        }
    }
    const Lattice lattice = ring.character_lattice();
    const auto& rays = ring.sigma().rays();
    HPolyhedron h(ring.rank());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Rational bound = divisor ? Rational(1 - divisor->coefficients[i])
                                       : Rational(min_positive_pairing(lattice, rays[i]));
        h.add({rays[i], Rational(0), false});
        IntVector neg = rays[i];
        for (auto& x : neg) {
            x = -x;
        }
        h.add({std::move(neg), Rational(-bound), true});
    }
    return HalfOpenPolytope(std::move(h), lattice);
}

FSignatureResult f_signature(const ToricRing& ring) {
    if (ring.full_dimensional()) {
        HalfOpenPolytope p = build_p_polytope(ring);
        Rational value = volume(p);
        return {std::move(value), std::move(p), 0, std::nullopt, std::nullopt};
    }
    if (!is_standard(ring)) {
        throw PreconditionError("torus factors with a proper sublattice L are not supported");
    }
    const TorusSplit split = split_torus_factors(ring.sigma(), Lattice::standard(ring.rank()));
    const ToricRing reduced(split.cone);
    HalfOpenPolytope p = build_p_polytope(reduced);
    Rational value = volume(p);
    return {std::move(value), std::move(p), split.torus_rank, std::nullopt, std::nullopt};
}

VPolyhedron newton_polyhedron(const MonomialIdeal& ideal, const ToricRing& ring) {
    validate(ring, ideal);
    std::vector<RatVector> points;
    for (const auto& g : ideal.generators) {
        points.push_back(to_rational(g));
    }
    const DualCone dual = dual_cone(ring.sigma());
    const VPolyhedron raw(ring.rank(), std::move(points), dual.cone.rays());
    return halfspaces_to_hull(hull_to_halfspaces(raw));
}

FSignatureResult f_signature_pair(const ToricRing& ring, const TorusDivisor& divisor) {
    require_full_dimensional(ring, "the F-signature of a pair");
    HalfOpenPolytope p = build_p_polytope(ring, divisor);
    Rational value = volume(p);
    return {std::move(value), std::move(p), 0, q_gorenstein_vector(ring, divisor), std::nullopt};
}

HPolyhedron scaled_newton_halfspaces(const MonomialIdeal& ideal, const ToricRing& ring, const Rational& t) {
    const HPolyhedron newt = hull_to_halfspaces(newton_polyhedron(ideal, ring));
    HPolyhedron out(ring.rank());
    for (const auto& h : newt.inequalities()) {
        out.add({h.normal, h.offset * t, false});
    }
    return out;
}

FSignatureResult f_signature_triple(const TripleProblem& problem, const TripleOptions& options) {
    if (problem.t < 0) {
        throw RangeError("exponent t = " + to_string(problem.t) + " is negative");
    }
    const ToricRing& ring = problem.ring;
    require_full_dimensional(ring, "the F-signature of a triple");
    const HalfOpenPolytope pd = build_p_polytope(ring, problem.divisor);
    const VPolyhedron newt = newton_polyhedron(problem.ideal, ring);
    const DualCone dual = dual_cone(ring.sigma());

    HalfOpenPolytope polytope = minkowski_sum_intersect(pd, newt, problem.t, dual.halfspaces);
    Rational value = volume(polytope);
    auto w = q_gorenstein_vector(ring, problem.divisor);

    std::optional<Rational> reflected;
    if (w && options.reflection_check) {
        HPolyhedron h = pd.base();
        const HPolyhedron scaled_newt = scaled_newton_halfspaces(problem.ideal, ring, problem.t);
        for (const auto& ineq : scaled_newt.inequalities()) {
            h.add(ineq);
        }
        reflected = volume(HalfOpenPolytope(std::move(h), pd.lattice()));
        if (*reflected != value) {
            throw std::logic_error("reflection identity failed: Vol(P_{D,a,t}) = " + to_string(value) +
                                   " but Vol(P^D ∩ t·Newt) = " + to_string(*reflected));
        }
    }
    return {std::move(value), std::move(polytope), 0, std::move(w), std::move(reflected)};
}

std::optional<RatVector> q_gorenstein_vector(const ToricRing& ring, const TorusDivisor& divisor) {
    require_full_dimensional(ring, "the Q-Gorenstein test");
    validate(ring, divisor);
    RatMatrix a;
    RatVector b;
    const auto& rays = ring.sigma().rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        a.push_back(to_rational(rays[i]));
        b.push_back(divisor.coefficients[i] - 1);
    }
    RatVector w;
    if (!solve_linear(a, b, w)) {
        return std::nullopt;
    }
    return w;
}

namespace {

void validate_semigroup(const IntMatrix& generators, std::size_t n) {
    if (generators.empty()) {
        throw InputError("semigroup needs at least one generator");
    }
    for (const auto& g : generators) {
        if (g.size() != n) {
            throw InputError("semigroup generator has the wrong length");
        }
        for (const auto& x : g) {
            if (x < 0) {
                throw InputError("semigroup generator has a negative coordinate");
            }
        }
    }
}

// Points of the box [0, top] reachable as sums of generators.
std::set<IntVector> reachable(const IntMatrix& generators, const IntVector& top) {
    std::set<IntVector> seen{IntVector(top.size(), Integer(0))};
    std::vector<IntVector> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        IntVector x = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : generators) {
            IntVector y = x;
            bool ok = !is_zero(g);
            for (std::size_t i = 0; i < y.size() && ok; ++i) {
                y[i] += g[i];
                ok = y[i] <= top[i];
            }
            if (ok && seen.insert(y).second) {
                frontier.push_back(std::move(y));
            }
        }
    }
    return seen;
}

}  // namespace

SinghPresentation check_singh_presentation(const IntMatrix& generators, std::size_t ambient_rank) {
    validate_semigroup(generators, ambient_rank);
    const std::size_t n = ambient_rank;
    const Lattice lattice = hermite_basis(generators, n);

    SinghPresentation out;
    out.property_star = true;
    for (std::size_t i = 0; i < n; ++i) {
        Integer g = 0;
        for (const auto& b : lattice.basis()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b[i].get_mpz_t());
        }
        out.property_star = out.property_star && g == 1;
    }

    // T = Z^n_{>=0} ∩ span(L) must be covered by cone(S) ...
    IntMatrix constraints;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = 1;
        constraints.push_back(std::move(e));
    }
    const Lattice orthogonal = integer_kernel(lattice.basis(), n);
    for (const auto& k : orthogonal.basis()) {
        constraints.push_back(k);
        IntVector neg = k;
        for (auto& x : neg) {
            x = -x;
        }
        constraints.push_back(std::move(neg));
    }
    const ConeGenerators orthant_part = double_description(constraints, n);
    for (const auto& r : orthant_part.rays) {
        if (!in_cone(r, generators, n)) {
            return out;
        }
    }
    // ... and L ∩ cone(S) must equal S. Every such point differs from a point
    // of the zonotope sum [0,1]·g_i by an element of S, and the zonotope sits
    // inside the box [0, sum g_i].
    IntVector top(n, Integer(0));
    for (const auto& g : generators) {
        for (std::size_t i = 0; i < n; ++i) {
            top[i] += g[i];
        }
    }
    const std::set<IntVector> semigroup = reachable(generators, top);
    const ConeGenerators dual = double_description(generators, n);
    IntVector x(n, Integer(0));
    for (;;) {
        const bool in_c =
            std::all_of(dual.rays.begin(), dual.rays.end(), [&](const IntVector& u) { return dot(u, x) >= 0; }) &&
            std::all_of(dual.lines.begin(), dual.lines.end(), [&](const IntVector& l) { return dot(l, x) == 0; });
        if (in_c && lattice.contains(x) && !semigroup.count(x)) {
            return out;
        }
        std::size_t i = 0;
        while (i < n && x[i] == top[i]) {
            x[i] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
        x[i] += 1;
    }
    out.full = true;
    return out;
}

std::uint64_t singh_count(const IntMatrix& generators, std::size_t ambient_rank, std::uint64_t q) {
    const SinghPresentation pres = check_singh_presentation(generators, ambient_rank);
    if (!pres.full || !pres.property_star) {
        throw PreconditionError("Singh's formula needs a full presentation with property (*)");
    }
    if (q == 0) {
        throw InputError("q must be positive");
    }
    const Lattice lattice = hermite_basis(generators, ambient_rank);
    std::uint64_t count = 0;
    IntVector x(ambient_rank, Integer(0));
    const Integer last(static_cast<unsigned long>(q - 1));
    for (;;) {
        if (lattice.contains(x)) {
            ++count;
        }
        std::size_t i = 0;
        while (i < ambient_rank && x[i] == last) {
            x[i] = 0;
            ++i;
        }
        if (i == ambient_rank) {
            break;
        }
        x[i] += 1;
    }
    return count;
}

ToricRing singh_ring(const IntMatrix& generators, std::size_t ambient_rank) {
    validate_semigroup(generators, ambient_rank);
    const Lattice lattice = hermite_basis(generators, ambient_rank);
    if (!lattice.full_rank()) {
        throw PreconditionError("Lattice(S) is not full rank; the presentation has torus-like degeneracy");
    }
    return ToricRing(Cone::generated_by(ambient_rank, Lattice::standard(ambient_rank).basis()), lattice);
}

}  // namespace toric
