#pragma once

#include "toric/fsignature.hpp"
#include "toric/lattice.hpp"
#include "toric/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric::testing {

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix m;
    for (auto r : rows)
        m.push_back(make_int_vector(r));
    return m;
}

inline RatVector rvec(std::initializer_list<const char*> entries)
{
    RatVector v;
    for (auto e : entries)
        v.push_back(parse_rational(e));
    return v;
}

inline Rational q(const char* text) { return parse_rational(text); }

inline ToricRing ring_of(std::size_t n, const IntMatrix& rays)
{
    return ToricRing(Cone::generated_by(n, rays));
}

inline ToricRing quadric() { return ring_of(2, mat({{0, 1}, {2, -1}})); }

inline ToricRing orthant(std::size_t n)
{
    IntMatrix rays(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        rays[i][i] = 1;
    return ring_of(n, rays);
}

// {m in Z^n : m_1 + ... + m_n ≡ 0 mod n} on the first orthant.
inline ToricRing veronese(std::size_t n)
{
    IntMatrix gens;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector v(n, 0);
        v[i] = static_cast<long>(n);
        gens.push_back(v);
        if (i + 1 < n) {
            IntVector d(n, 0);
            d[i] = 1;
            d[i + 1] = -1;
            gens.push_back(d);
        }
    }
    return ToricRing(orthant(n).sigma(), hermite_basis(gens));
}

// Veronese semigroup generators: all exponent vectors of total degree n.
inline IntMatrix veronese_generators(std::size_t n)
{
    IntMatrix out;
    IntVector cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (long k = left; k >= 0; --k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, static_cast<long>(n));
    return out;
}

struct CorpusCone {
    std::string name;
    std::size_t rank = 0;
    IntMatrix rays;
    bool regular = false;
};

inline std::vector<CorpusCone> load_corpus()
{
    std::ifstream in(TORIC_CORPUS_PATH);
    if (!in)
        throw std::runtime_error("cannot open corpus " TORIC_CORPUS_PATH);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<CorpusCone> out;
    for (const auto& c : doc.at("cones")) {
        CorpusCone cc;
        cc.name = c.at("name").get<std::string>();
        cc.rank = c.at("rank").get<std::size_t>();
        for (const auto& r : c.at("rays")) {
            IntVector v;
            for (const auto& x : r)
                v.push_back(Integer(x.get<long>()));
            cc.rays.push_back(v);
        }
        cc.regular = c.at("regular").get<bool>();
        out.push_back(cc);
    }
    return out;
}

// Row-vector maps used for simultaneous changes of N and M: v -> U v on N,
// u -> U^{-T} u on M, so that pairings are preserved.
inline IntVector map_n(const IntMatrix& u, const IntVector& v) { return toric::apply(u, v); }

inline RatVector map_m(const IntMatrix& u_inv_t, const RatVector& w)
{
    RatVector out(u_inv_t.size(), Rational(0));
    for (std::size_t i = 0; i < u_inv_t.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            out[i] += Rational(u_inv_t[i][j]) * w[j];
    return out;
}

}  // namespace toric::testing
