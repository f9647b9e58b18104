#pragma once

#include "toric/fsignature.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"

#include <cstdint>
#include <vector>

namespace toric {

struct OracleReport {
    std::vector<std::uint64_t> q_values;
    std::vector<std::uint64_t> counts;
    std::vector<Rational> normalized;  // count / q^n
    Rational target;                   // polytope volume
    std::vector<Rational> deviations;  // |normalized - target|
    Rational max_deviation;
    Rational fitted_constant;  // C in deviation <= C/q
    bool pass = false;
};

// Counts v in sigma^vee ∩ (1/q)M (inside the bounding box of P_sigma grown
// by 1) for which no k in M \ sigma^vee with |k_j| <= radius has v + k in
// sigma^vee. One-sided: too small a radius can only overcount.
std::uint64_t bruteforce_free_generators(const ToricRing& ring, std::uint64_t q, std::int64_t radius);

// Same search for pairs: v is discarded when some k in M \ sigma^vee within
// the radius has (v + k)·v_i >= -a_i for all i.
std::uint64_t bruteforce_pair_generators(const ToricRing& ring, const TorusDivisor& divisor, std::uint64_t q,
                                         std::int64_t radius);

struct TripleCounts {
    std::uint64_t a_e_frak = 0;   // #((P^D ∩ (1/q)M) - (t·Newt ∩ (1/q)M)) ∩ sigma^vee
    std::uint64_t a_prime_e = 0;  // #(P_{D,a,t} ∩ (1/q)M)
};

// Requires q·t and q·a_i integral (PreconditionError otherwise).
TripleCounts bruteforce_triple_count(const TripleProblem& problem, std::uint64_t q);

// Counts p at each q and compares count/q^n with Vol(p). C is fitted on the
// first two q values (the least C with deviation <= C/q there); the report
// passes when every later q also satisfies deviation <= C/q and the
// deviation never increases from q to a multiple of q listed next.
OracleReport ehrhart_convergence(const HalfOpenPolytope& p, const std::vector<std::uint64_t>& q_values);

struct TripleDecayReport {
    std::vector<std::uint64_t> q_values;
    std::vector<TripleCounts> counts;
    std::vector<Rational> errors;  // (a'_e - a_e)/q^n
    Rational fitted_constant;
    bool pass = false;
};

// (a'_e - a_e)/q^n along q_values: nonincreasing (between nested q) and
// <= C/q for C fitted on the first two q values; also a_e <= a'_e.
TripleDecayReport triple_error_decay(const TripleProblem& problem, const std::vector<std::uint64_t>& q_values);

// Direct sum sigma_1 × sigma_2 in N_1 ⊕ N_2 (lattices combined likewise).
ToricRing product_ring(const ToricRing& a, const ToricRing& b);

// f_signature(a × b) == f_signature(a) · f_signature(b), exactly.
bool product_check(const ToricRing& a, const ToricRing& b);

}  // namespace toric
