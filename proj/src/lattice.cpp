#include "toric/lattice.hpp"

#include "toric/error.hpp"

#include <utility>

namespace toric {

namespace {

void add_multiple(IntVector& target, const IntVector& source, const Integer& factor) {
    for (std::size_t i = 0; i < target.size(); ++i) {
        target[i] += factor * source[i];
    }
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Row-style Hermite normal form by unimodular row operations. Returns the
// number of nonzero rows, which come first. When `transform` is non-null it
// starts as the identity and accumulates the same row operations.
std::size_t hermite_reduce(IntMatrix& m, IntMatrix* transform) {
    if (m.empty()) {
        return 0;
    }
    const std::size_t cols = m.front().size();
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        if (transform) {
            std::swap((*transform)[a], (*transform)[b]);
        }
    };
    auto axpy = [&](std::size_t target, std::size_t source, const Integer& factor) {
        add_multiple(m[target], m[source], factor);
        if (transform) {
            add_multiple((*transform)[target], (*transform)[source], factor);
        }
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t r = row; r < m.size(); ++r) {
                if (m[r][col] != 0 && (best == m.size() || abs(m[r][col]) < abs(m[best][col]))) {
                    best = r;
                }
            }
            if (best == m.size()) {
                break;
            }
            swap_rows(row, best);
            bool clean = true;
            for (std::size_t r = row + 1; r < m.size(); ++r) {
                if (m[r][col] != 0) {
                    axpy(r, row, -floor_div(m[r][col], m[row][col]));
                    clean = clean && m[r][col] == 0;
                }
            }
            if (clean) {
                break;
            }
        }
        if (m[row][col] == 0) {
            continue;
        }
        if (m[row][col] < 0) {
            for (auto& x : m[row]) {
                x = -x;
            }
            if (transform) {
                for (auto& x : (*transform)[row]) {
                    x = -x;
                }
            }
        }
        for (std::size_t r = 0; r < row; ++r) {
            if (m[r][col] != 0) {
                axpy(r, row, -floor_div(m[r][col], m[row][col]));
            }
        }
        ++row;
    }
    return row;
}

std::size_t pivot_column(const IntVector& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != 0) {
            return i;
        }
    }
    return row.size();
}

}  // namespace

Lattice Lattice::standard(std::size_t ambient_rank) {
    IntMatrix basis(ambient_rank, IntVector(ambient_rank, Integer(0)));
    for (std::size_t i = 0; i < ambient_rank; ++i) {
        basis[i][i] = 1;
    }
    return Lattice(ambient_rank, std::move(basis));
}

Lattice hermite_basis(const IntMatrix& generators, std::size_t ambient_rank) {
    for (const auto& g : generators) {
        if (g.size() != ambient_rank) {
            throw InputError("lattice generators have inconsistent lengths");
        }
    }
    IntMatrix m = generators;
    const std::size_t r = hermite_reduce(m, nullptr);
    m.resize(r);
    return Lattice(ambient_rank, std::move(m));
}

Lattice hermite_basis(const IntMatrix& generators) {
    if (generators.empty()) {
        throw InputError("lattice needs at least one generator");
    }
    return hermite_basis(generators, generators.front().size());
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
    if (v.size() != ambient_rank_) {
        throw InputError("vector length does not match lattice ambient rank");
    }
    IntVector rest = v;
    IntVector coords(basis_.size(), Integer(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivot_column(basis_[i]);
        if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_[i][p].get_mpz_t())) {
            return std::nullopt;
        }
        coords[i] = rest[p] / basis_[i][p];
        add_multiple(rest, basis_[i], -coords[i]);
    }
    if (!is_zero(rest)) {
        return std::nullopt;
    }
    return coords;
}

std::optional<RatVector> Lattice::rational_coordinates(const RatVector& v) const {
    RatVector rest = v;
    RatVector coords(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivot_column(basis_[i]);
        coords[i] = rest[p] / Rational(basis_[i][p]);
        for (std::size_t j = 0; j < rest.size(); ++j) {
            rest[j] -= coords[i] * basis_[i][j];
        }
    }
    if (!is_zero(rest)) {
        return std::nullopt;
    }
    return coords;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

Integer Lattice::covolume() const {
    if (!full_rank()) {
        throw PreconditionError("covolume of a lattice that is not full rank");
    }
    Integer d = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        d *= basis_[i][i];  // triangular with positive pivots
    }
    return d;
}

LatticeIndex lattice_index(const Lattice& sub, const Lattice& ambient) {
    if (sub.ambient_rank() != ambient.ambient_rank()) {
        throw InputError("lattices live in different ambient ranks");
    }
    IntMatrix coords;
    for (const auto& b : sub.basis()) {
        auto c = ambient.coordinates(b);
        if (!c) {
            throw ContainmentError("sublattice is not contained in the ambient lattice");
        }
        coords.push_back(std::move(*c));
    }
    if (sub.rank() < ambient.rank()) {
        return {true, 0};
    }
    return {false, abs(determinant(coords))};
}

IntVector primitivize(const IntVector& v) {
    const Integer g = content(v);
    if (g == 0) {
        throw InputError("cannot primitivize the zero vector");
    }
    IntVector out = v;
    for (auto& x : out) {
        x /= g;
    }
    return out;
}

Integer min_positive_pairing(const Lattice& lattice, const IntVector& v) {
    if (is_zero(v)) {
        throw InputError("pairing with the zero vector");
    }
    Integer g = 0;
    for (const auto& b : lattice.basis()) {
        const Integer d = dot(b, v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
    if (g == 0) {
        throw DegeneratePairingError("pairing is identically zero on the lattice");
    }
    return g;
}

Lattice integer_kernel(const IntMatrix& rows, std::size_t ambient_rank) {
    // Row-reduce the transpose; zero rows of the result carry kernel vectors
    // in the transform.
    IntMatrix t(ambient_rank, IntVector(rows.size(), Integer(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < ambient_rank; ++j) {
            t[j][i] = rows[i][j];
        }
    }
    IntMatrix u = Lattice::standard(ambient_rank).basis();
    const std::size_t r = rows.empty() ? 0 : hermite_reduce(t, &u);
    IntMatrix kernel(u.begin() + static_cast<std::ptrdiff_t>(r), u.end());
    return hermite_basis(kernel, ambient_rank);
}

Lattice saturation(const IntMatrix& generators, std::size_t ambient_rank) {
    const Lattice orthogonal = integer_kernel(generators, ambient_rank);
    return integer_kernel(orthogonal.basis(), ambient_rank);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size(), IntVector(b.empty() ? 0 : b.front().size(), Integer(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (std::size_t j = 0; j < out[i].size(); ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

IntVector apply(const IntMatrix& m, const IntVector& v) {
    IntVector out(m.size(), Integer(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i] = dot(m[i], v);
    }
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) {
        return {};
    }
    IntMatrix out(m.front().size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            out[j][i] = m[i][j];
        }
    }
    return out;
}

}  // namespace toric
