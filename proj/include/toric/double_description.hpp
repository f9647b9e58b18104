#pragma once

#include "toric/rational.hpp"

#include <cstddef>

namespace toric {

// Generators of a polyhedral cone: cone(rays) + span(lines). Rays are
// primitive integer vectors and, modulo the lineality space, extreme.
struct ConeGenerators {
    IntMatrix rays;
    IntMatrix lines;
};

// Generators of {x in R^dim : a·x >= 0 for every row a of `constraints`},
// computed by the double description method with exact integer pivots.
ConeGenerators double_description(const IntMatrix& constraints, std::size_t dim);

}  // namespace toric
