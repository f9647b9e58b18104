#pragma once

#include "toric/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

namespace toric::cli {

struct ComputeOptions {
    bool pair = false;
    bool triple = false;
    bool reflection_check = true;
    bool lattice_volume = false;
};

// Plain, pair or triple signature depending on the fields present (or forced
// by the flags).
nlohmann::json run_compute(const ProblemFile& problem, const ComputeOptions& options);

struct VerifyOptions {
    std::string mode = "plain";  // plain | pair | triple | singh | product
    std::vector<std::uint64_t> q_values{2, 4, 8};
    std::int64_t radius = 6;
};

// Report with a top-level "pass" flag.
nlohmann::json run_verify(const ProblemFile& problem, const VerifyOptions& options);

// 2 for InputError (and anything unrecognized about the input), 3 for
// PreconditionError, 1 otherwise.
int exit_code(const std::exception& e);

// Parses "2,4,8".
std::vector<std::uint64_t> parse_q_list(const std::string& text);

}  // namespace toric::cli
