#include "toric/polytope.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <thread>
#include <utility>

namespace toric {

HalfOpenPolytope::HalfOpenPolytope(HPolyhedron base, Lattice lattice) : base_(std::move(base)), lattice_(std::move(lattice)) {
    if (lattice_.ambient_rank() != base_.ambient_rank() || !lattice_.full_rank()) {
        throw InputError("polytope lattice must be full rank in the polytope's ambient space");
    }
}

namespace {

std::string format(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].get_str();
    }
    return s + ")";
}

RatVector barycenter(const std::vector<RatVector>& points, const std::vector<std::size_t>& which) {
    RatVector c(points.front().size());
    for (std::size_t k : which) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] += points[k][i];
        }
    }
    for (auto& x : c) {
        x /= static_cast<long>(which.size());
    }
    return c;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    return idx;
}

}  // namespace

std::vector<RatVector> vertices(const HalfOpenPolytope& p) {
    const VPolyhedron hull = halfspaces_to_hull(p.base());
    if (hull.empty()) {
        return {};
    }
    if (!hull.bounded()) {
        throw UnboundedError("polytope is unbounded along recession ray " + format(hull.rays().front()));
    }
    // A strict inequality that is tight at a relative-interior point of the
    // closure is tight on all of it, and then the half-open set is empty.
    const RatVector center = barycenter(hull.vertices(), all_indices(hull.vertices().size()));
    for (const auto& h : p.base().inequalities()) {
        if (h.strict && dot(h.normal, center) == h.offset) {
            return {};
        }
    }
    return hull.vertices();
}

namespace {

class Triangulator {
public:
    Triangulator(const std::vector<RatVector>& verts, const HPolyhedron& h) : verts_(verts) {
        for (const auto& ineq : h.inequalities()) {
            std::vector<bool> tight(verts.size());
            for (std::size_t k = 0; k < verts.size(); ++k) {
                tight[k] = dot(ineq.normal, verts[k]) == ineq.offset;
            }
            tight_.push_back(std::move(tight));
        }
    }

    std::size_t affine_rank(const std::vector<std::size_t>& face) const {
        RatMatrix diffs;
        for (std::size_t k = 1; k < face.size(); ++k) {
            RatVector d(verts_[face[k]]);
            for (std::size_t i = 0; i < d.size(); ++i) {
                d[i] -= verts_[face[0]][i];
            }
            diffs.push_back(std::move(d));
        }
        return rank(diffs);
    }

    // Pulling triangulation of a face of dimension `dim`, coning from its
    // lowest-index vertex over the subfaces that avoid it.
    std::vector<std::vector<std::size_t>> triangulate(const std::vector<std::size_t>& face, std::size_t dim) const {
        if (dim == 0) {
            return {{face.front()}};
        }
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::vector<std::size_t>> simplices;
        for (const auto& tight : tight_) {
            if (tight[apex]) {
                continue;
            }
            std::vector<std::size_t> sub;
            for (std::size_t k : face) {
                if (tight[k]) {
                    sub.push_back(k);
                }
            }
            if (sub.size() < dim || !seen.insert(sub).second || affine_rank(sub) != dim - 1) {
                continue;
            }
            for (auto& s : triangulate(sub, dim - 1)) {
                s.push_back(apex);
                simplices.push_back(std::move(s));
            }
        }
        return simplices;
    }

private:
    const std::vector<RatVector>& verts_;
    std::vector<std::vector<bool>> tight_;
};

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        f *= static_cast<unsigned long>(k);
    }
    return f;
}

}  // namespace

Rational volume(const HalfOpenPolytope& p) {
    const std::size_t n = p.ambient_rank();
    const auto verts = vertices(p);
    if (verts.empty()) {
        return 0;
    }
    if (n == 0) {
        return 1;
    }
    const Triangulator tri(verts, p.base());
    const auto all = all_indices(verts.size());
    if (tri.affine_rank(all) < n) {
        return 0;
    }
    Rational total = 0;
    for (const auto& s : tri.triangulate(all, n)) {
        RatMatrix m;
        for (std::size_t k = 1; k < s.size(); ++k) {
            RatVector d(verts[s[k]]);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] -= verts[s[0]][i];
            }
            m.push_back(std::move(d));
        }
        total += abs(determinant(std::move(m)));
    }
    return total / Rational(factorial(n) * p.lattice().covolume());
}

namespace {

// Inequalities rewritten over integer lattice coordinates z, where the
// point is x = (1/q) sum_j z_j b_j: coefficient·z >= rhs (or > when strict).
template <typename Int>
struct ScaledSystem {
    std::vector<std::vector<Int>> coefficients;
    std::vector<Int> rhs;
    std::vector<bool> strict;
    std::vector<Int> lo;
    std::vector<Int> hi;

    bool inside(const std::vector<Int>& z) const {
        for (std::size_t k = 0; k < rhs.size(); ++k) {
            Int s = 0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                s += coefficients[k][j] * z[j];
            }
            if (strict[k] ? !(s > rhs[k]) : !(s >= rhs[k])) {
                return false;
            }
        }
        return true;
    }

    // Visits the inside points whose first coordinate lies in [first_lo, first_hi].
    void scan(const Int& first_lo, const Int& first_hi, const std::function<void(const std::vector<Int>&)>& visit) const {
        const std::size_t n = lo.size();
        if (n == 0) {
            if (inside({})) {
                visit({});
            }
            return;
        }
        std::vector<Int> z = lo;
        z[0] = first_lo;
        if (first_lo > first_hi) {
            return;
        }
        for (;;) {
            if (inside(z)) {
                visit(z);
            }
            std::size_t i = n;
            while (i-- > 0) {
                const Int& top = i == 0 ? first_hi : hi[i];
                if (z[i] < top) {
                    z[i] += 1;
                    break;
                }
                z[i] = i == 0 ? first_lo : lo[i];
                if (i == 0) {
                    return;
                }
            }
        }
    }
};

struct Prepared {
    IntMatrix coefficients;
    IntVector rhs;
    std::vector<bool> strict;
    IntVector lo;
    IntVector hi;
    bool empty = false;
};

Prepared prepare(const HalfOpenPolytope& p, std::uint64_t q) {
    Prepared out;
    const auto verts = vertices(p);
    if (verts.empty()) {
        out.empty = true;
        return out;
    }
    const std::size_t n = p.ambient_rank();
    const Lattice& lattice = p.lattice();
    const Integer scale(static_cast<unsigned long>(q));
    out.lo.assign(n, Integer(0));
    out.hi.assign(n, Integer(0));
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const RatVector y = *lattice.rational_coordinates(verts[k]);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational z = y[j] * scale;
            const Integer lo = ceil(z);
            const Integer hi = floor(z);
            if (k == 0 || lo < out.lo[j]) {
                out.lo[j] = lo;
            }
            if (k == 0 || hi > out.hi[j]) {
                out.hi[j] = hi;
            }
        }
    }
    for (const auto& h : p.base().inequalities()) {
        const Integer& den = h.offset.get_den();
        IntVector row;
        for (const auto& b : lattice.basis()) {
            row.push_back(dot(h.normal, b) * den);
        }
        out.coefficients.push_back(std::move(row));
        out.rhs.push_back(h.offset.get_num() * scale);
        out.strict.push_back(h.strict);
    }
    return out;
}

bool fits_int64(const Prepared& p) {
    // Bound every partial sum of coefficient·z by sum |c_j| * max|z_j| + |rhs|.
    Integer zmax = 0;
    for (std::size_t j = 0; j < p.lo.size(); ++j) {
        zmax = std::max({zmax, Integer(abs(p.lo[j])), Integer(abs(p.hi[j]))});
    }
    const Integer limit = Integer(1) << 62;
    for (std::size_t k = 0; k < p.rhs.size(); ++k) {
        Integer bound = abs(p.rhs[k]);
        for (const auto& c : p.coefficients[k]) {
            bound += abs(c) * (zmax + 1);
        }
        if (bound >= limit) {
            return false;
        }
    }
    return true;
}

template <typename Int>
Int convert(const Integer& x);

template <>
std::int64_t convert<std::int64_t>(const Integer& x) {
    return x.get_si();
}

template <>
Integer convert<Integer>(const Integer& x) {
    return x;
}

template <typename Int>
ScaledSystem<Int> lower(const Prepared& p) {
    ScaledSystem<Int> s;
    for (const auto& row : p.coefficients) {
        std::vector<Int> r;
        for (const auto& c : row) {
            r.push_back(convert<Int>(c));
        }
        s.coefficients.push_back(std::move(r));
    }
    for (const auto& x : p.rhs) {
        s.rhs.push_back(convert<Int>(x));
    }
    s.strict = p.strict;
    for (const auto& x : p.lo) {
        s.lo.push_back(convert<Int>(x));
    }
    for (const auto& x : p.hi) {
        s.hi.push_back(convert<Int>(x));
    }
    return s;
}

template <typename Int>
std::uint64_t parallel_count(const ScaledSystem<Int>& s) {
    if (s.lo.empty()) {
        return s.inside({}) ? 1 : 0;
    }
    const Int first_lo = s.lo[0];
    const Int first_hi = s.hi[0];
    if (first_lo > first_hi) {
        return 0;
    }
    const Int span = first_hi - first_lo + 1;
    std::size_t workers = worker_count();
    if (Int(static_cast<long>(workers)) > span) {
        workers = static_cast<std::size_t>(convert<std::int64_t>(Integer(span)));
    }
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        const Int a = first_lo + (span * Int(static_cast<long>(w))) / Int(static_cast<long>(workers));
        const Int b = first_lo + (span * Int(static_cast<long>(w + 1))) / Int(static_cast<long>(workers)) - 1;
        auto job = [&s, &partial, w, a, b] { s.scan(a, b, [&](const std::vector<Int>&) { ++partial[w]; }); };
        if (workers == 1) {
            job();
        } else {
            threads.emplace_back(job);
        }
    }
    for (auto& t : threads) {
        t.join();
    }
    std::uint64_t total = 0;
    for (auto c : partial) {
        total += c;
    }
    return total;
}

}  // namespace

std::uint64_t count_scaled_lattice_points(const HalfOpenPolytope& p, std::uint64_t q) {
    if (q == 0) {
        throw InputError("scaling factor q must be positive");
    }
    const Prepared prepared = prepare(p, q);
    if (prepared.empty) {
        return 0;
    }
    if (fits_int64(prepared)) {
        return parallel_count(lower<std::int64_t>(prepared));
    }
    return parallel_count(lower<Integer>(prepared));
}

IntMatrix scaled_lattice_points(const HalfOpenPolytope& p, std::uint64_t q) {
    if (q == 0) {
        throw InputError("scaling factor q must be positive");
    }
    const Prepared prepared = prepare(p, q);
    IntMatrix out;
    if (prepared.empty) {
        return out;
    }
    const ScaledSystem<Integer> s = lower<Integer>(prepared);
    const auto& basis = p.lattice().basis();
    const std::size_t n = p.ambient_rank();
    auto visit = [&](const std::vector<Integer>& z) {
        IntVector x(n, Integer(0));
        for (std::size_t j = 0; j < z.size(); ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                x[i] += z[j] * basis[j][i];
            }
        }
        out.push_back(std::move(x));
    };
    if (n == 0) {
        s.scan(0, 0, visit);
    } else {
        s.scan(s.lo[0], s.hi[0], visit);
    }
    std::sort(out.begin(), out.end());
    return out;
}

HalfOpenPolytope minkowski_sum_intersect(const HalfOpenPolytope& p, const VPolyhedron& q, const Rational& scale,
                                         const HPolyhedron& cone) {
    const std::size_t n = p.ambient_rank();
    if (scale < 0) {
        throw RangeError("Minkowski scale must be nonnegative");
    }
    if (q.ambient_rank() != n || cone.ambient_rank() != n) {
        throw InputError("Minkowski operands live in different ambient ranks");
    }
    const auto pv = vertices(p);
    if (pv.empty() || q.empty()) {
        return HalfOpenPolytope(hull_to_halfspaces(VPolyhedron(n, {}, {})), p.lattice());
    }
    std::vector<RatVector> sum_vertices;
    for (const auto& x : pv) {
        for (const auto& y : q.vertices()) {
            RatVector s(n);
            for (std::size_t i = 0; i < n; ++i) {
                s[i] = x[i] - scale * y[i];
            }
            sum_vertices.push_back(std::move(s));
        }
    }
    IntMatrix sum_rays;
    for (const auto& r : q.rays()) {
        IntVector neg = r;
        for (auto& x : neg) {
            x = -x;
        }
        sum_rays.push_back(std::move(neg));
    }
    const HPolyhedron sum = hull_to_halfspaces(VPolyhedron(n, std::move(sum_vertices), std::move(sum_rays)));

    HPolyhedron result(n);
    for (const auto& h : sum.inequalities()) {
        // The facet is attained iff the face of cl(p) minimizing the normal
        // meets p, i.e. no strict inequality of p is tight at its barycenter.
        Rational best = dot(h.normal, pv.front());
        for (const auto& x : pv) {
            best = std::min(best, dot(h.normal, x));
        }
        std::vector<std::size_t> face;
        for (std::size_t k = 0; k < pv.size(); ++k) {
            if (dot(h.normal, pv[k]) == best) {
                face.push_back(k);
            }
        }
        const RatVector c = barycenter(pv, face);
        bool strict = false;
        for (const auto& g : p.base().inequalities()) {
            strict = strict || (g.strict && dot(g.normal, c) == g.offset);
        }
        result.add({h.normal, h.offset, strict});
    }
    for (const auto& h : cone.inequalities()) {
        result.add({h.normal, h.offset, false});
    }
    HalfOpenPolytope out(std::move(result), p.lattice());
    vertices(out);  // rejects unbounded results
    return out;
}

HalfOpenPolytope product(const HalfOpenPolytope& a, const HalfOpenPolytope& b) {
    const std::size_t na = a.ambient_rank();
    const std::size_t nb = b.ambient_rank();
    HPolyhedron h(na + nb);
    for (const auto& ineq : a.base().inequalities()) {
        IntVector normal = ineq.normal;
        normal.resize(na + nb, Integer(0));
        h.add({std::move(normal), ineq.offset, ineq.strict});
    }
    for (const auto& ineq : b.base().inequalities()) {
        IntVector normal(na, Integer(0));
        normal.insert(normal.end(), ineq.normal.begin(), ineq.normal.end());
        h.add({std::move(normal), ineq.offset, ineq.strict});
    }
    IntMatrix basis;
    for (const auto& r : a.lattice().basis()) {
        IntVector row = r;
        row.resize(na + nb, Integer(0));
        basis.push_back(std::move(row));
    }
    for (const auto& r : b.lattice().basis()) {
        IntVector row(na, Integer(0));
        row.insert(row.end(), r.begin(), r.end());
        basis.push_back(std::move(row));
    }
    return HalfOpenPolytope(std::move(h), hermite_basis(basis, na + nb));
}

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TORIC_FSIG_THREADS")) {
        std::size_t cap = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc() && cap > 0) {
            n = std::min(n, cap);
        }
    }
    return n;
}

}  // namespace toric
