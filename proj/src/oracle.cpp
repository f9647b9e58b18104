#include "toric/oracle.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

namespace toric {

namespace {

using SmallVector = std::vector<std::int64_t>;

std::int64_t small(const Integer& x) {
    if (!x.fits_slong_p()) {
        throw PreconditionError("oracle coordinates exceed 64-bit range");
    }
    return x.get_si();
}

std::int64_t small_dot(const SmallVector& a, const SmallVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

std::vector<SmallVector> small_rays(const ToricRing& ring) {
    std::vector<SmallVector> out;
    for (const auto& r : ring.sigma().rays()) {
        SmallVector v;
        for (const auto& x : r) {
            v.push_back(small(x));
        }
        out.push_back(std::move(v));
    }
    return out;
}

void require_plain_lattice(const ToricRing& ring) {
    if (!ring.full_dimensional()) {
        throw PreconditionError("brute-force oracles need a full-dimensional cone");
    }
    if (ring.sublattice() && *ring.sublattice() != Lattice::standard(ring.rank())) {
        throw PreconditionError("brute-force oracles work over M = Z^n");
    }
}

// Integer box q·[lo - grow, hi + grow] around the closure of p, in M-coordinates.
std::pair<SmallVector, SmallVector> scaled_box(const HalfOpenPolytope& p, std::uint64_t q, std::int64_t grow) {
    const auto verts = vertices(p);
    const std::size_t n = p.ambient_rank();
    SmallVector lo(n, 0);
    SmallVector hi(n, -1);
    if (verts.empty()) {
        return {lo, hi};
    }
    const Integer scale(static_cast<unsigned long>(q));
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = verts.front()[j];
        Rational mx = verts.front()[j];
        for (const auto& v : verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = small((floor(mn) - grow) * scale);
        hi[j] = small((ceil(mx) + grow) * scale);
    }
    return {lo, hi};
}

template <typename Fn>
void for_each_in_box(const SmallVector& lo, const SmallVector& hi, Fn&& fn) {
    const std::size_t n = lo.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (lo[j] > hi[j]) {
            return;
        }
    }
    SmallVector x = lo;
    for (;;) {
        fn(x);
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == n) {
            return;
        }
        ++x[i];
    }
}

// Counts scaled points V (v = V/q) in sigma^vee and the box such that no
// lattice k outside sigma^vee within the radius has
// (V + q·k)·v_i >= threshold_i for every ray.
std::uint64_t count_unkillable(const ToricRing& ring, std::uint64_t q, std::int64_t radius,
                               const SmallVector& threshold) {
    if (radius < 1) {
        throw InputError("search radius must be at least 1");
    }
    if (q == 0) {
        throw InputError("q must be positive");
    }
    const auto rays = small_rays(ring);
    const std::size_t n = ring.rank();
    const auto qs = static_cast<std::int64_t>(q);

    // Pairings q·(k·v_i) of every candidate k in M \ sigma^vee, shortest first.
    std::vector<std::pair<std::int64_t, SmallVector>> killers;
    for_each_in_box(SmallVector(n, -radius), SmallVector(n, radius), [&](const SmallVector& k) {
        SmallVector pairing;
        bool outside = false;
        for (const auto& v : rays) {
            const std::int64_t d = small_dot(k, v);
            outside = outside || d < 0;
            pairing.push_back(qs * d);
        }
        if (outside) {
            std::int64_t norm = 0;
            for (auto x : k) {
                norm += std::abs(x);
            }
            killers.emplace_back(norm, std::move(pairing));
        }
    });
    std::stable_sort(killers.begin(), killers.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    const auto [lo, hi] = scaled_box(build_p_polytope(ring), q, 1);
    std::uint64_t count = 0;
    SmallVector pairing(rays.size());
    for_each_in_box(lo, hi, [&](const SmallVector& point) {
        for (std::size_t i = 0; i < rays.size(); ++i) {
            pairing[i] = small_dot(point, rays[i]);
            if (pairing[i] < 0) {
                return;
            }
        }
        for (const auto& [norm, kp] : killers) {
            bool lands = true;
            for (std::size_t i = 0; i < kp.size() && lands; ++i) {
                lands = pairing[i] + kp[i] >= threshold[i];
            }
            if (lands) {
                return;
            }
        }
        ++count;
    });
    return count;
}

void require_integral(const Rational& x, std::uint64_t q, const std::string& what) {
    const Rational scaled = x * Rational(Integer(static_cast<unsigned long>(q)));
    if (scaled.get_den() != 1) {
        throw PreconditionError(what + " = " + to_string(x) + " is not in (1/" + std::to_string(q) + ")Z");
    }
}

Rational power(std::uint64_t q, std::size_t n) {
    Integer p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p *= static_cast<unsigned long>(q);
    }
    return Rational(p);
}

// Least C with value_k <= C / q_k over the first two entries.
Rational fit_constant(const std::vector<std::uint64_t>& qs, const std::vector<Rational>& values) {
    Rational c = 0;
    for (std::size_t k = 0; k < std::min<std::size_t>(2, qs.size()); ++k) {
        c = std::max(c, Rational(values[k] * Rational(Integer(static_cast<unsigned long>(qs[k])))));
    }
    return c;
}

bool decays(const std::vector<std::uint64_t>& qs, const std::vector<Rational>& values, const Rational& c) {
    for (std::size_t k = 0; k < qs.size(); ++k) {
        if (values[k] > c / Rational(Integer(static_cast<unsigned long>(qs[k])))) {
            return false;
        }
        // Monotonicity is only meaningful between nested grids.
        if (k > 0 && qs[k] % qs[k - 1] == 0 && values[k] > values[k - 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::uint64_t bruteforce_free_generators(const ToricRing& ring, std::uint64_t q, std::int64_t radius) {
    require_plain_lattice(ring);
    return count_unkillable(ring, q, radius, SmallVector(ring.sigma().rays().size(), 0));
}

std::uint64_t bruteforce_pair_generators(const ToricRing& ring, const TorusDivisor& divisor, std::uint64_t q,
                                         std::int64_t radius) {
    require_plain_lattice(ring);
    validate(ring, divisor);
    SmallVector threshold;
    const Rational scale(Integer(static_cast<unsigned long>(q)));
    for (const auto& a : divisor.coefficients) {
        threshold.push_back(small(ceil(-a * scale)));
    }
    return count_unkillable(ring, q, radius, threshold);
}

TripleCounts bruteforce_triple_count(const TripleProblem& problem, std::uint64_t q) {
    const ToricRing& ring = problem.ring;
    require_plain_lattice(ring);
    if (q == 0) {
        throw InputError("q must be positive");
    }
    if (problem.t < 0) {
        throw RangeError("exponent t is negative");
    }
    validate(ring, problem.divisor);
    require_integral(problem.t, q, "t");
    for (const auto& a : problem.divisor.coefficients) {
        require_integral(a, q, "divisor coefficient");
    }
    const auto rays = small_rays(ring);
    SmallVector upper;  // q·(1 - a_i)
    for (const auto& a : problem.divisor.coefficients) {
        upper.push_back(small(Rational((1 - a) * Rational(Integer(static_cast<unsigned long>(q)))).get_num()));
    }

    struct ScaledHalfspace {
        SmallVector normal;
        Integer rhs;  // normal·W >= rhs for W = q·w
    };
    std::vector<ScaledHalfspace> newt;
    const HPolyhedron scaled_newt = scaled_newton_halfspaces(problem.ideal, ring, problem.t);
    for (const auto& h : scaled_newt.inequalities()) {
        ScaledHalfspace s;
        for (const auto& x : h.normal) {
            s.normal.push_back(small(x));
        }
        s.rhs = ceil(h.offset * Rational(Integer(static_cast<unsigned long>(q))));
        newt.push_back(std::move(s));
    }

    const HalfOpenPolytope pd = build_p_polytope(ring, problem.divisor);
    const auto [lo, hi] = scaled_box(pd, q, 0);
    std::vector<SmallVector> in_pd;
    std::vector<SmallVector> in_newt;
    for_each_in_box(lo, hi, [&](const SmallVector& x) {
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const std::int64_t d = small_dot(x, rays[i]);
            if (d < 0 || d >= upper[i]) {
                return;
            }
        }
        in_pd.push_back(x);
        // Any w with x' - w in sigma^vee and x' in P^D lies in P^D itself, so
        // t·Newt(a) only matters inside P^D.
        for (const auto& h : newt) {
            if (Integer(static_cast<long>(small_dot(h.normal, x))) < h.rhs) {
                return;
            }
        }
        in_newt.push_back(x);
    });

    std::vector<SmallVector> differences;
    SmallVector d(ring.rank());
    for (const auto& x : in_pd) {
        for (const auto& w : in_newt) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                d[j] = x[j] - w[j];
            }
            bool in_dual = true;
            for (std::size_t i = 0; i < rays.size() && in_dual; ++i) {
                in_dual = small_dot(d, rays[i]) >= 0;
            }
            if (in_dual) {
                differences.push_back(d);
            }
        }
    }
    std::sort(differences.begin(), differences.end());
    differences.erase(std::unique(differences.begin(), differences.end()), differences.end());

    TripleCounts out;
    out.a_e_frak = differences.size();
    const FSignatureResult triple = f_signature_triple(problem, {.reflection_check = false});
    out.a_prime_e = count_scaled_lattice_points(triple.polytope, q);
    return out;
}

OracleReport ehrhart_convergence(const HalfOpenPolytope& p, const std::vector<std::uint64_t>& q_values) {
    OracleReport report;
    report.q_values = q_values;
    report.target = volume(p);
    const std::size_t n = p.ambient_rank();
    for (auto q : q_values) {
        const std::uint64_t c = count_scaled_lattice_points(p, q);
        const Rational normalized = Rational(Integer(static_cast<unsigned long>(c))) / power(q, n);
        report.counts.push_back(c);
        report.normalized.push_back(normalized);
        report.deviations.push_back(abs(normalized - report.target));
        report.max_deviation = std::max(report.max_deviation, report.deviations.back());
    }
    report.fitted_constant = fit_constant(q_values, report.deviations);
    report.pass = decays(q_values, report.deviations, report.fitted_constant);
    return report;
}

TripleDecayReport triple_error_decay(const TripleProblem& problem, const std::vector<std::uint64_t>& q_values) {
    TripleDecayReport report;
    report.q_values = q_values;
    bool ordered = true;
    for (auto q : q_values) {
        const TripleCounts c = bruteforce_triple_count(problem, q);
        ordered = ordered && c.a_e_frak <= c.a_prime_e;
        report.counts.push_back(c);
        const Rational diff = Rational(Integer(static_cast<unsigned long>(c.a_prime_e))) -
                              Rational(Integer(static_cast<unsigned long>(c.a_e_frak)));
        report.errors.push_back(diff / power(q, problem.ring.rank()));
    }
    report.fitted_constant = fit_constant(q_values, report.errors);
    report.pass = ordered && decays(q_values, report.errors, report.fitted_constant);
    return report;
}

ToricRing product_ring(const ToricRing& a, const ToricRing& b) {
    const std::size_t na = a.rank();
    const std::size_t nb = b.rank();
    IntMatrix rays;
    for (const auto& r : a.sigma().rays()) {
        IntVector v = r;
        v.resize(na + nb, Integer(0));
        rays.push_back(std::move(v));
    }
    for (const auto& r : b.sigma().rays()) {
        IntVector v(na, Integer(0));
        v.insert(v.end(), r.begin(), r.end());
        rays.push_back(std::move(v));
    }
    std::optional<Lattice> lattice;
    if (a.sublattice() || b.sublattice()) {
        IntMatrix basis;
        const Lattice la = a.character_lattice();
        const Lattice lb = b.character_lattice();
        for (const auto& r : la.basis()) {
            IntVector v = r;
            v.resize(na + nb, Integer(0));
            basis.push_back(std::move(v));
        }
        for (const auto& r : lb.basis()) {
            IntVector v(na, Integer(0));
            v.insert(v.end(), r.begin(), r.end());
            basis.push_back(std::move(v));
        }
        lattice = hermite_basis(basis, na + nb);
    }
    return ToricRing(Cone::generated_by(na + nb, rays), std::move(lattice));
}

bool product_check(const ToricRing& a, const ToricRing& b) {
    return f_signature(product_ring(a, b)).value == f_signature(a).value * f_signature(b).value;
}

}  // namespace toric
