#pragma once

#include "toric/fsignature.hpp"
#include "toric/oracle.hpp"
#include "toric/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toric {

// One problem per file. Integers may be JSON integers or decimal strings;
// rationals must be "num/den" strings (or integers). JSON floats are rejected.
struct ProblemFile {
    std::size_t rank = 0;
    IntMatrix rays;
    std::optional<IntMatrix> lattice;
    std::optional<std::vector<Rational>> divisor;
    std::optional<IntMatrix> ideal;
    std::optional<Rational> t;
    std::optional<IntMatrix> generators;  // semigroup generators (Singh presentations)
    std::vector<ProblemFile> factors;     // product checks
};

// Throws InputError; parse failures report line and column.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
nlohmann::json to_json(const ProblemFile& problem);

// Throws InputError when the rays are not a minimal primitive generating set
// while a divisor indexes them.
ToricRing make_ring(const ProblemFile& problem);
TorusDivisor make_divisor(const ProblemFile& problem, const ToricRing& ring);
TripleProblem make_triple(const ProblemFile& problem);

nlohmann::json rational_json(const Rational& r);      // "num/den"
nlohmann::json value_json(const Rational& r);         // {"num":..., "den":...}
nlohmann::json vector_json(const RatVector& v);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const TripleDecayReport& report);

}  // namespace toric
