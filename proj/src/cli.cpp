#include "toric/cli.hpp"

#include "toric/error.hpp"

#include <charconv>
#include <utility>

namespace toric::cli {

using nlohmann::json;

namespace {

json check(const std::string& name, bool pass) { return {{"name", name}, {"pass", pass}}; }

json vertex_list(const HalfOpenPolytope& p) {
    json out = json::array();
    for (const auto& v : vertices(p)) {
        out.push_back(vector_json(v));
    }
    return out;
}

bool all_pass(const json& checks) {
    for (const auto& c : checks) {
        if (!c["pass"].get<bool>()) {
            return false;
        }
    }
    return true;
}

ToricRing ring_of(const ProblemFile& problem) {
    if (!problem.factors.empty()) {
        return product_ring(ring_of(problem.factors[0]), ring_of(problem.factors[1]));
    }
    if (problem.generators && problem.rays.empty()) {
        return singh_ring(*problem.generators, problem.rank);
    }
    return make_ring(problem);
}

json result_json(const std::string& mode, const FSignatureResult& r, json checks, const ComputeOptions& options) {
    json out;
    out["mode"] = mode;
    out["value"] = value_json(r.value);
    out["decimal"] = to_decimal(r.value, 20);
    out["polytope"] = vertex_list(r.polytope);
    out["torus_rank"] = r.torus_rank;
    out["qgorenstein"] = r.qgorenstein_vector ? vector_json(*r.qgorenstein_vector) : json(nullptr);
    out["checks"] = std::move(checks);
    if (options.lattice_volume) {
        const Lattice& lattice = r.polytope.lattice();
        const LatticeIndex index = lattice_index(lattice, Lattice::standard(lattice.ambient_rank()));
        out["lattice_index"] = index.value.get_str();
        out["lebesgue_volume"] = rational_json(r.value * Rational(lattice.covolume()));
    }
    return out;
}

}  // namespace

json run_compute(const ProblemFile& problem, const ComputeOptions& options) {
    if (options.pair && options.triple) {
        throw InputError("--pair and --triple are mutually exclusive");
    }
    const bool triple = options.triple || (problem.ideal.has_value() && !options.pair);
    const bool pair = !triple && (options.pair || problem.divisor.has_value());

    if (triple) {
        const TripleProblem tp = make_triple(problem);
        const FSignatureResult r = f_signature_triple(tp, {.reflection_check = options.reflection_check});
        json checks = json::array({check("value_in_unit_interval", r.value >= 0 && r.value <= 1)});
        if (r.reflection_value) {
            checks.push_back(check("reflection_identity", *r.reflection_value == r.value));
        }
        return result_json("triple", r, std::move(checks), options);
    }
    const ToricRing ring = ring_of(problem);
    if (pair) {
        const FSignatureResult r = f_signature_pair(ring, make_divisor(problem, ring));
        return result_json("pair", r, json::array({check("value_in_unit_interval", r.value >= 0 && r.value <= 1)}),
                           options);
    }
    const FSignatureResult r = f_signature(ring);
    return result_json("plain", r, json::array({check("value_in_unit_interval", r.value > 0 && r.value <= 1)}),
                       options);
}

json run_verify(const ProblemFile& problem, const VerifyOptions& options) {
    if (options.q_values.empty()) {
        throw InputError("--q needs at least one value");
    }
    json out;
    out["mode"] = options.mode;
    json checks = json::array();

    if (options.mode == "plain" || options.mode == "pair") {
        const ToricRing ring = make_ring(problem);
        const bool pair = options.mode == "pair";
        const TorusDivisor divisor = make_divisor(problem, ring);
        const FSignatureResult r = pair ? f_signature_pair(ring, divisor) : f_signature(ring);
        if (!ring.full_dimensional()) {
            throw PreconditionError("brute-force verification needs a full-dimensional cone");
        }
        json rows = json::array();
        for (auto q : options.q_values) {
            auto brute = [&](std::int64_t radius) {
                return pair ? bruteforce_pair_generators(ring, divisor, q, radius)
                            : bruteforce_free_generators(ring, q, radius);
            };
            const std::uint64_t found = brute(options.radius);
            const std::uint64_t doubled = brute(2 * options.radius);
            const std::uint64_t counted = count_scaled_lattice_points(r.polytope, q);
            rows.push_back({{"q", q}, {"bruteforce", found}, {"bruteforce_double_radius", doubled}, {"polytope_count", counted}});
            checks.push_back(check("oracle_equals_polytope_q" + std::to_string(q), found == counted));
            checks.push_back(check("radius_stable_q" + std::to_string(q), found == doubled));
        }
        const OracleReport ehrhart = ehrhart_convergence(r.polytope, options.q_values);
        checks.push_back(check("ehrhart_convergence", ehrhart.pass));
        out["value"] = value_json(r.value);
        out["radius"] = options.radius;
        out["oracle"] = std::move(rows);
        out["ehrhart"] = to_json(ehrhart);
    } else if (options.mode == "triple") {
        const TripleProblem tp = make_triple(problem);
        const FSignatureResult r = f_signature_triple(tp);
        const TripleDecayReport decay = triple_error_decay(tp, options.q_values);
        checks.push_back(check("triple_error_decay", decay.pass));
        if (r.reflection_value) {
            checks.push_back(check("reflection_identity", *r.reflection_value == r.value));
        }
        out["value"] = value_json(r.value);
        out["decay"] = to_json(decay);
    } else if (options.mode == "singh") {
        if (!problem.generators) {
            throw InputError("singh mode needs \"generators\"");
        }
        const SinghPresentation pres = check_singh_presentation(*problem.generators, problem.rank);
        checks.push_back(check("full", pres.full));
        checks.push_back(check("property_star", pres.property_star));
        if (pres.full && pres.property_star) {
            const ToricRing ring = singh_ring(*problem.generators, problem.rank);
            const FSignatureResult r = f_signature(ring);
            json rows = json::array();
            for (auto q : options.q_values) {
                const std::uint64_t singh = singh_count(*problem.generators, problem.rank, q);
                const std::uint64_t counted = count_scaled_lattice_points(r.polytope, q);
                rows.push_back({{"q", q}, {"singh_count", singh}, {"polytope_count", counted}});
                checks.push_back(check("singh_equals_polytope_q" + std::to_string(q), singh == counted));
            }
            out["value"] = value_json(r.value);
            out["counts"] = std::move(rows);
        }
    } else if (options.mode == "product") {
        if (problem.factors.size() != 2) {
            throw InputError("product mode needs \"factors\" with two problems");
        }
        const ToricRing a = ring_of(problem.factors[0]);
        const ToricRing b = ring_of(problem.factors[1]);
        const Rational sa = f_signature(a).value;
        const Rational sb = f_signature(b).value;
        const Rational sp = f_signature(product_ring(a, b)).value;
        checks.push_back(check("product_formula", sp == sa * sb));
        out["value"] = value_json(sp);
        out["factors"] = json::array({value_json(sa), value_json(sb)});
    } else {
        throw InputError("unknown verify mode \"" + options.mode + "\" (plain|pair|triple|singh|product)");
    }
    out["pass"] = all_pass(checks);
    out["checks"] = std::move(checks);
    return out;
}

int exit_code(const std::exception& e) {
    if (dynamic_cast<const PreconditionError*>(&e)) {
        return 3;
    }
    if (dynamic_cast<const InputError*>(&e)) {
        return 2;
    }
    return 1;
}

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        std::uint64_t q = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, q);
        if (ec != std::errc() || ptr != text.data() + end || q == 0) {
            throw InputError("bad q list \"" + text + "\" (expected positive integers like 2,4,8)");
        }
        out.push_back(q);
        start = end + 1;
    }
    return out;
}

}  // namespace toric::cli
