#pragma once

#include <json.hpp>

#include <map>
#include <optional>

#include "ultraspec/perturbation.hpp"
#include "ultraspec/region.hpp"

namespace ultraspec {

using Json = nlohmann::ordered_json;

/**
 * Problem description as it appears on disk: rational strings only, never
 * JSON numbers (big integers would overflow native numerics). M, B, C, U are
 * optional and default to the identity.
 */
struct ProblemFile {
    long long prime = 0;
    long long dimension = 0;
    std::string family;   // pseudo | condition-pseudo | structured | structured-condition | pencil-structured
    std::string epsilon;  // rational string
    std::vector<std::vector<std::string>> a;
    std::optional<std::vector<std::vector<std::string>>> m, b, c, u;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile parse_problem(const Json& j);
ProblemFile load_problem(const std::string& path);
Json serialize_problem(const ProblemFile& p);

Family make_family(const ProblemFile& p);
Epsilon problem_epsilon(const ProblemFile& p);
RationalMatrix problem_matrix(const ProblemFile& p, const std::vector<std::vector<std::string>>& rows);
/// The optional similarity matrix U (identity scaled by p when absent).
RationalMatrix problem_u(const ProblemFile& p);

/// Built-in example problems, keyed by fixture name.
const std::map<std::string, ProblemFile>& builtin_fixtures();

/// Deterministic membership probe point used by the fixture runner.
std::string fixture_probe_lambda(const std::string& name);

// --- report plumbing ---

std::string toolkit_version();

/// FNV-1a 64 of the canonical problem serialization.
std::string input_digest(const ProblemFile& p);

Json make_report(const std::string& command, const ProblemFile& problem, Json results,
                 std::optional<std::uint64_t> seed = std::nullopt);

Json magnitude_to_json(const PMagnitude& m);
Json matrix_to_json(const RationalMatrix& a);
Json vector_to_json(const PadicVector& v);
Json verdict_to_json(const MembershipVerdict& v);
Json spectrum_to_json(const SpectrumResult& s);
Json region_to_json(const RegionTree& tree);
Json forward_report_to_json(const ForwardReport& r);
Json union_report_to_json(const UnionReport& r);

}  // namespace ultraspec
