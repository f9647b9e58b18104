#include "toric/rational.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace toric {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw InputError("not an exact rational: \"" + std::string(text) + "\" (expected \"num/den\")");
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(r) * scale;
    Integer rounded = floor(scaled + Rational(1, 2));
    std::string s = rounded.get_str();
    if (static_cast<int>(s.size()) <= digits) {
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
    if (digits > 0) {
        out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
    }
    if (r < 0 && rounded != 0) {
        out.insert(0, "-");
    }
    return out;
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

IntVector make_int_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values) {
        v.emplace_back(x);
    }
    return v;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.emplace_back(x);
    }
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

IntVector primitive_on_ray(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.push_back(x.get_num() * (l / x.get_den()));
    }
    const Integer g = content(out);
    if (g == 0) {
        throw InputError("zero vector has no primitive direction");
    }
    for (auto& x : out) {
        x /= g;
    }
    return out;
}

namespace {

// Gaussian elimination in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != row && m[r][col] != 0) {
                const Rational f = m[r][col];
                for (std::size_t c = col; c < m[r].size(); ++c) {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& rows) {
    if (rows.empty()) {
        return 0;
    }
    RatMatrix m = rows;
    return row_reduce(m, m.front().size()).size();
}

std::size_t rank(const IntMatrix& rows) {
    RatMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        m.push_back(to_rational(r));
    }
    return rank(m);
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) {
    RatMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) {
        r.push_back(to_rational(row));
    }
    const Rational d = determinant(std::move(r));
    return d.get_num();
}

bool solve_linear(const RatMatrix& a, const RatVector& b, RatVector& solution) {
    const std::size_t unknowns = a.empty() ? 0 : a.front().size();
    RatMatrix m;
    m.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        RatVector row = a[i];
        row.push_back(b[i]);
        m.push_back(std::move(row));
    }
    const auto pivots = row_reduce(m, unknowns + 1);
    if (!pivots.empty() && pivots.back() == unknowns) {
        return false;
    }
    solution.assign(unknowns, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        solution[pivots[i]] = m[i][unknowns];
    }
    return true;
}

bool solve_combination(const RatMatrix& rows, const RatVector& target, RatVector& coefficients) {
    // sum_i x_i rows[i] = target  <=>  (rows^T) x = target
    RatMatrix transposed(target.size(), RatVector(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < target.size(); ++j) {
            transposed[j][i] = rows[i][j];
        }
    }
    return solve_linear(transposed, target, coefficients);
}

}  // namespace toric
