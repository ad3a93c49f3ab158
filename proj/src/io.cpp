#include "ultraspec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace ultraspec {

namespace {

std::vector<std::vector<std::string>> parse_matrix_field(const Json& j, const std::string& key, long long n) {
    const Json& m = j.at(key);
    if (!m.is_array() || static_cast<long long>(m.size()) != n)
        throw ParseError("field '" + key + "' must be an array of " + std::to_string(n) + " rows");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Json& row = m[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != n)
            throw ParseError("field '" + key + "' row " + std::to_string(i) + " must have " + std::to_string(n) +
                             " entries");
        std::vector<std::string> r;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_string())
                throw ParseError("field '" + key + "' entry (" + std::to_string(i) + "," + std::to_string(k) +
                                 ") must be a rational string");
            parse_rational(row[k].get<std::string>());  // diagnose bad literals here
            r.push_back(row[k].get<std::string>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<std::string> kFamilies = {"pseudo", "condition-pseudo", "structured", "structured-condition",
                                            "pencil-structured"};

}  // namespace

ProblemFile parse_problem(const Json& j) {
    ProblemFile p;
    try {
        if (!j.is_object()) throw ParseError("problem must be a JSON object");
        if (!j.contains("prime") || !j.at("prime").is_number_integer())
            throw ParseError("field 'prime' must be an integer");
        p.prime = j.at("prime").get<long long>();
        try {
            require_prime(p.prime);
        } catch (const Error& e) {
            throw ParseError(std::string("field 'prime': ") + e.what());
        }
        if (!j.contains("dimension") || !j.at("dimension").is_number_integer())
            throw ParseError("field 'dimension' must be an integer");
        p.dimension = j.at("dimension").get<long long>();
        if (p.dimension < 1 || p.dimension > kMaxDimension)
            throw ParseError("field 'dimension' must be in [1, " + std::to_string(kMaxDimension) + "]");
        if (!j.contains("family") || !j.at("family").is_string())
            throw ParseError("field 'family' must be a string");
        p.family = j.at("family").get<std::string>();
        if (std::find(kFamilies.begin(), kFamilies.end(), p.family) == kFamilies.end())
            throw ParseError("unknown family '" + p.family + "'");
        if (!j.contains("epsilon") || !j.at("epsilon").is_string())
            throw ParseError("field 'epsilon' must be a rational string");
        p.epsilon = j.at("epsilon").get<std::string>();
        try {
            Epsilon::parse(p.epsilon);
        } catch (const Error& e) {
            throw ParseError(std::string("field 'epsilon': ") + e.what());
        }
        if (!j.contains("A")) throw ParseError("field 'A' is required");
        p.a = parse_matrix_field(j, "A", p.dimension);
        if (j.contains("M")) p.m = parse_matrix_field(j, "M", p.dimension);
        if (j.contains("B")) p.b = parse_matrix_field(j, "B", p.dimension);
        if (j.contains("C")) p.c = parse_matrix_field(j, "C", p.dimension);
        if (j.contains("U")) p.u = parse_matrix_field(j, "U", p.dimension);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed problem JSON: ") + e.what());
    } catch (const Error&) {
        throw;
    }
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_problem(j);
}

Json serialize_problem(const ProblemFile& p) {
    Json j;
    j["prime"] = p.prime;
    j["dimension"] = p.dimension;
    j["family"] = p.family;
    j["epsilon"] = p.epsilon;
    j["A"] = p.a;
    if (p.m) j["M"] = *p.m;
    if (p.b) j["B"] = *p.b;
    if (p.c) j["C"] = *p.c;
    if (p.u) j["U"] = *p.u;
    return j;
}

RationalMatrix problem_matrix(const ProblemFile& p, const std::vector<std::vector<std::string>>& rows) {
    return RationalMatrix::from_strings(rows, p.prime);
}

Family make_family(const ProblemFile& p) {
    const RationalMatrix a = problem_matrix(p, p.a);
    const RationalMatrix id = RationalMatrix::identity(p.dimension, p.prime);
    const RationalMatrix m = p.m ? problem_matrix(p, *p.m) : id;
    const RationalMatrix b = p.b ? problem_matrix(p, *p.b) : id;
    const RationalMatrix c = p.c ? problem_matrix(p, *p.c) : id;
    if (p.family == "pseudo") return Family::pseudo(a);
    if (p.family == "condition-pseudo") return Family::condition_pseudo(a);
    if (p.family == "structured") return Family::structured(a, b, c);
    if (p.family == "structured-condition") return Family::structured_condition(a, b, c);
    if (p.family == "pencil-structured") return Family::pencil_structured(a, m, b, c);
    throw ParseError("unknown family '" + p.family + "'");
}

Epsilon problem_epsilon(const ProblemFile& p) {
    return Epsilon::parse(p.epsilon);
}

RationalMatrix problem_u(const ProblemFile& p) {
    if (p.u) return problem_matrix(p, *p.u);
    return RationalMatrix::identity(p.dimension, p.prime).scaled(PadicScalar(p.prime, p.prime));
}

const std::map<std::string, ProblemFile>& builtin_fixtures() {
    using Rows = std::vector<std::vector<std::string>>;
    static const std::map<std::string, ProblemFile> fixtures = [] {
        std::map<std::string, ProblemFile> f;
        {
            ProblemFile p;
            p.prime = 3, p.dimension = 2, p.family = "pseudo", p.epsilon = "1/3";
            p.a = Rows{{"1", "1"}, {"1", "1"}};
            f["all-ones"] = p;
        }
        {
            ProblemFile p;
            p.prime = 3, p.dimension = 2, p.family = "pseudo", p.epsilon = "1/9";
            p.a = Rows{{"1", "3"}, {"0", "1"}};
            f["jordan-3"] = p;
        }
        {
            ProblemFile p;
            p.prime = 3, p.dimension = 2, p.family = "structured", p.epsilon = "1/3";
            p.a = Rows{{"1", "0"}, {"0", "2"}};
            p.b = Rows{{"1", "1"}, {"1", "1"}};
            p.c = Rows{{"1", "0"}, {"0", "0"}};
            f["structured-diag"] = p;
        }
        {
            ProblemFile p;
            p.prime = 5, p.dimension = 2, p.family = "condition-pseudo", p.epsilon = "1/5";
            p.a = Rows{{"0", "0"}, {"0", "1"}};
            f["diag-ab-condition"] = p;
        }
        {
            ProblemFile p;
            p.prime = 2, p.dimension = 2, p.family = "pencil-structured", p.epsilon = "1/4";
            p.a = Rows{{"1", "0"}, {"1", "1"}};
            p.m = Rows{{"2", "0"}, {"0", "1"}};
            p.b = Rows{{"1", "0"}, {"0", "4"}};
            p.c = Rows{{"1", "0"}, {"1", "-1"}};
            f["example-final-i"] = p;
        }
        {
            ProblemFile p;
            p.prime = 3, p.dimension = 2, p.family = "pencil-structured", p.epsilon = "1/3";
            p.a = Rows{{"1", "1"}, {"1", "1"}};
            p.m = Rows{{"1", "0"}, {"0", "2"}};
            p.b = Rows{{"1", "0"}, {"0", "0"}};
            p.c = Rows{{"0", "1"}, {"0", "0"}};
            f["example-final-ii"] = p;
        }
        {
            ProblemFile p;
            p.prime = 2, p.dimension = 2, p.family = "pencil-structured", p.epsilon = "1/4";
            p.a = Rows{{"2", "1"}, {"0", "1"}};
            p.m = Rows{{"2", "0"}, {"0", "1"}};
            p.b = Rows{{"1", "0"}, {"0", "0"}};
            p.c = Rows{{"0", "1"}, {"0", "0"}};
            f["example-final-iii"] = p;
        }
        return f;
    }();
    return fixtures;
}

std::string fixture_probe_lambda(const std::string& name) {
    static const std::map<std::string, std::string> probes = {
        {"all-ones", "3"},          {"jordan-3", "28"},         {"structured-diag", "10"},
        {"diag-ab-condition", "25"}, {"example-final-i", "33"}, {"example-final-ii", "9"},
        {"example-final-iii", "5"},
    };
    const auto it = probes.find(name);
    if (it == probes.end()) throw Error("no probe point for fixture '" + name + "'");
    return it->second;
}

std::string toolkit_version() {
    return "0.1.0";
}

std::string input_digest(const ProblemFile& p) {
    const std::string text = serialize_problem(p).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json make_report(const std::string& command, const ProblemFile& problem, Json results,
                 std::optional<std::uint64_t> seed) {
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest(problem);
    j["toolkit_version"] = toolkit_version();
    if (seed)
        j["seed"] = *seed;
    else
        j["seed"] = nullptr;
    j["results"] = std::move(results);
    return j;
}

Json magnitude_to_json(const PMagnitude& m) {
    Json j;
    switch (m.kind()) {
        case PMagnitude::Kind::Zero:
            j["kind"] = "zero";
            break;
        case PMagnitude::Kind::Finite:
            j["kind"] = "finite";
            j["exponent"] = m.exponent();
            break;
        case PMagnitude::Kind::Infinite:
            j["kind"] = "infinite";
            break;
    }
    return j;
}

Json matrix_to_json(const RationalMatrix& a) {
    Json rows = Json::array();
    for (long long i = 0; i < a.n(); ++i) {
        Json row = Json::array();
        for (long long j = 0; j < a.n(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const PadicVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Json verdict_to_json(const MembershipVerdict& v) {
    Json j;
    j["class"] = membership_class_name(v.cls);
    j["norm"] = magnitude_to_json(v.norm_value);
    j["epsilon"] = format_rational(v.threshold.value());
    return j;
}

Json spectrum_to_json(const SpectrumResult& s) {
    Json j;
    Json rational = Json::array();
    for (const auto& [root, mult] : s.rational_points) {
        Json r;
        r["value"] = root.str();
        r["multiplicity"] = mult;
        rational.push_back(std::move(r));
    }
    j["rational_points"] = std::move(rational);
    Json lifted = Json::array();
    for (const auto& l : s.lifted_points) {
        Json r;
        r["unit"] = l.unit.str();
        r["valuation"] = l.valuation;
        r["precision"] = l.precision;
        r["multiplicity"] = l.multiplicity;
        lifted.push_back(std::move(r));
    }
    j["lifted_points"] = std::move(lifted);
    Json unresolved = Json::array();
    for (const auto& u : s.unresolved_factors) {
        Json r;
        Json coeffs = Json::array();
        for (const auto& c : u.poly.coefficients()) coeffs.push_back(format_rational(c));
        r["coefficients"] = std::move(coeffs);
        r["multiplicity"] = u.multiplicity;
        r["qp_roots_found"] = u.qp_roots_found;
        r["no_qp_roots_certified"] = u.no_qp_roots_certified;
        unresolved.push_back(std::move(r));
    }
    j["unresolved_factors"] = std::move(unresolved);
    j["infinite_eigenvalue"] = s.infinite_eigenvalue;
    j["degree"] = s.degree;
    return j;
}

namespace {

Json region_node_to_json(const RegionNode& node) {
    Json j;
    j["center"] = node.ball.center.str();
    j["radius_exp"] = node.ball.radius_exponent;
    j["class"] = node.is_leaf ? leaf_class_name(node.leaf_class) : "split";
    Json children = Json::array();
    for (const auto& child : node.children) children.push_back(region_node_to_json(child));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

Json region_to_json(const RegionTree& tree) {
    Json j;
    j["max_depth"] = tree.max_depth;
    j["tree"] = region_node_to_json(tree.root);
    return j;
}

Json forward_report_to_json(const ForwardReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["points_checked"] = r.points_checked;
    j["counterexamples"] = r.counterexamples;
    Json records = Json::array();
    for (const auto& t : r.records) {
        Json rec;
        rec["trial"] = t.index;
        rec["d"] = matrix_to_json(t.d);
        rec["d_norm"] = magnitude_to_json(t.d_norm);
        Json checks = Json::array();
        for (const auto& c : t.checks) {
            Json cj;
            cj["lambda"] = c.lambda.str();
            cj["class"] = membership_class_name(c.cls);
            cj["bound_applies"] = c.bound_applies;
            cj["ok"] = c.ok;
            checks.push_back(std::move(cj));
        }
        rec["eigen_checks"] = std::move(checks);
        rec["counterexample"] = t.counterexample;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    return j;
}

Json union_report_to_json(const UnionReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["failures"] = r.failures;
    Json certs = Json::array();
    for (const auto& c : r.certificates) {
        Json cj;
        cj["lambda"] = c.lambda.str();
        cj["verdict"] = membership_class_name(c.cls);
        if (c.witness) {
            cj["witness_d"] = matrix_to_json(c.witness->assembled);
            cj["witness_d_norm"] = magnitude_to_json(c.witness->norm);
            cj["norm_bound"] = format_rational(c.witness->norm_bound);
            cj["det_check"] = c.det_check;
            cj["norm_check"] = c.norm_check;
        } else {
            cj["uncaptured"] = c.uncaptured;
        }
        cj["ok"] = c.ok;
        certs.push_back(std::move(cj));
    }
    j["certificates"] = std::move(certs);
    return j;
}

}  // namespace ultraspec
