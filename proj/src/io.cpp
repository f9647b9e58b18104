#include "toric/io.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace toric {

using nlohmann::json;

namespace {

Integer parse_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if (r.get_den() != 1) {
            throw InputError(where + ": expected an integer, got \"" + j.get<std::string>() + "\"");
        }
        return r.get_num();
    }
    throw InputError(where + ": expected an integer");
}

Rational parse_exact(const json& j, const std::string& where) {
    if (j.is_number_float()) {
        throw InputError(where + ": floating-point values are not accepted; write \"num/den\"");
    }
    if (j.is_number_integer()) {
        return Rational(parse_integer(j, where));
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected a rational \"num/den\"");
}

IntMatrix parse_matrix(const json& j, std::size_t rank, const std::string& where) {
    if (!j.is_array()) {
        throw InputError(where + ": expected a list of integer vectors");
    }
    IntMatrix out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string item = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) {
            throw InputError(item + ": expected an integer vector");
        }
        if (j[i].size() != rank) {
            throw InputError(item + ": has length " + std::to_string(j[i].size()) + ", expected rank " +
                             std::to_string(rank));
        }
        IntVector v;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            v.push_back(parse_integer(j[i][k], item));
        }
        out.push_back(std::move(v));
    }
    return out;
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) {
            r.push_back(integer_json(x));
        }
        out.push_back(std::move(r));
    }
    return out;
}

ProblemFile from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("problem must be a JSON object");
    }
    static const std::vector<std::string> known = {"rank", "rays", "lattice", "divisor", "ideal", "t", "generators", "factors"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw InputError("unknown field \"" + key + "\"");
        }
    }
    ProblemFile p;
    if (j.contains("factors")) {
        if (!j["factors"].is_array() || j["factors"].size() != 2) {
            throw InputError("factors: expected exactly two problems");
        }
        for (const auto& f : j["factors"]) {
            p.factors.push_back(from_json(f));
        }
        p.rank = p.factors[0].rank + p.factors[1].rank;
        return p;
    }
    if (!j.contains("rank")) {
        throw InputError("missing field \"rank\"");
    }
    const Integer rank = parse_integer(j["rank"], "rank");
    if (rank < 0 || rank > 64) {
        throw InputError("rank must be between 0 and 64");
    }
    p.rank = rank.get_ui();
    if (j.contains("generators")) {
        p.generators = parse_matrix(j["generators"], p.rank, "generators");
    }
    if (j.contains("rays")) {
        p.rays = parse_matrix(j["rays"], p.rank, "rays");
    } else if (!p.generators) {
        throw InputError("missing field \"rays\"");
    }
    if (j.contains("lattice")) {
        p.lattice = parse_matrix(j["lattice"], p.rank, "lattice");
    }
    if (j.contains("divisor")) {
        if (!j["divisor"].is_array()) {
            throw InputError("divisor: expected a list of rationals");
        }
        std::vector<Rational> d;
        for (std::size_t i = 0; i < j["divisor"].size(); ++i) {
            d.push_back(parse_exact(j["divisor"][i], "divisor[" + std::to_string(i) + "]"));
        }
        if (d.size() != p.rays.size()) {
            throw InputError("divisor has " + std::to_string(d.size()) + " entries but there are " +
                             std::to_string(p.rays.size()) + " rays");
        }
        p.divisor = std::move(d);
    }
    if (j.contains("ideal")) {
        p.ideal = parse_matrix(j["ideal"], p.rank, "ideal");
    }
    if (j.contains("t")) {
        p.t = parse_exact(j["t"], "t");
    }
    return p;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
    }
    return from_json(j);
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

json to_json(const ProblemFile& p) {
    json j;
    if (!p.factors.empty()) {
        j["factors"] = json::array({to_json(p.factors[0]), to_json(p.factors[1])});
        return j;
    }
    j["rank"] = p.rank;
    if (!p.rays.empty() || !p.generators) {
        j["rays"] = matrix_json(p.rays);
    }
    if (p.lattice) {
        j["lattice"] = matrix_json(*p.lattice);
    }
    if (p.divisor) {
        json d = json::array();
        for (const auto& a : *p.divisor) {
            d.push_back(rational_json(a));
        }
        j["divisor"] = std::move(d);
    }
    if (p.ideal) {
        j["ideal"] = matrix_json(*p.ideal);
    }
    if (p.t) {
        j["t"] = rational_json(*p.t);
    }
    if (p.generators) {
        j["generators"] = matrix_json(*p.generators);
    }
    return j;
}

ToricRing make_ring(const ProblemFile& p) {
    std::optional<Lattice> lattice;
    if (p.lattice) {
        if (p.lattice->empty()) {
            throw InputError("lattice: needs at least one basis vector");
        }
        lattice = hermite_basis(*p.lattice, p.rank);
        if (!lattice->full_rank()) {
            throw InputError("lattice: basis does not have full rank " + std::to_string(p.rank));
        }
    }
    Cone sigma = Cone::generated_by(p.rank, p.rays);
    if (p.divisor) {
        IntMatrix primitive;
        for (const auto& r : p.rays) {
            primitive.push_back(primitivize(r));
        }
        if (sigma.rays() != primitive) {
            throw InputError("rays must be a minimal generating set when a divisor is given (one coefficient per ray)");
        }
    }
    return ToricRing(std::move(sigma), std::move(lattice));
}

TorusDivisor make_divisor(const ProblemFile& p, const ToricRing& ring) {
    if (!p.divisor) {
        return TorusDivisor::zero(ring);
    }
    TorusDivisor d{*p.divisor};
    validate(ring, d);
    return d;
}

TripleProblem make_triple(const ProblemFile& p) {
    ToricRing ring = make_ring(p);
    TorusDivisor divisor = make_divisor(p, ring);
    if (!p.ideal) {
        throw InputError("a triple needs an \"ideal\"");
    }
    if (!p.t) {
        throw InputError("a triple needs an exponent \"t\"");
    }
    MonomialIdeal ideal{*p.ideal};
    validate(ring, ideal);
    return {std::move(ring), std::move(divisor), std::move(ideal), *p.t};
}

json rational_json(const Rational& r) { return to_string(r); }

json value_json(const Rational& r) {
    return {{"num", integer_json(r.get_num())}, {"den", integer_json(r.get_den())}};
}

json vector_json(const RatVector& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(rational_json(x));
    }
    return out;
}

json to_json(const OracleReport& report) {
    json normalized = json::array();
    json deviations = json::array();
    for (std::size_t k = 0; k < report.q_values.size(); ++k) {
        normalized.push_back(rational_json(report.normalized[k]));
        deviations.push_back(rational_json(report.deviations[k]));
    }
    return {{"q_values", report.q_values},
            {"counts", report.counts},
            {"normalized", normalized},
            {"target", rational_json(report.target)},
            {"deviations", deviations},
            {"max_deviation", rational_json(report.max_deviation)},
            {"fitted_constant", rational_json(report.fitted_constant)},
            {"pass", report.pass}};
}

json to_json(const TripleDecayReport& report) {
    json a_e = json::array();
    json a_prime = json::array();
    json errors = json::array();
    for (std::size_t k = 0; k < report.q_values.size(); ++k) {
        a_e.push_back(report.counts[k].a_e_frak);
        a_prime.push_back(report.counts[k].a_prime_e);
        errors.push_back(rational_json(report.errors[k]));
    }
    return {{"q_values", report.q_values},
            {"a_e_frak", a_e},
            {"a_prime_e", a_prime},
            {"errors", errors},
            {"fitted_constant", rational_json(report.fitted_constant)},
            {"pass", report.pass}};
}

}  // namespace toric
