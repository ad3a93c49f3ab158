#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "ultraspec/io.hpp"

namespace us = ultraspec;
using us::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSingularPencil = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitCounterexample = 5;

struct CommonOpts {
    std::string problem_path;
    std::string fixture;
    std::string json_out;
};

us::ProblemFile resolve_problem(const CommonOpts& opts) {
    if (!opts.fixture.empty()) {
        const auto& fixtures = us::builtin_fixtures();
        const auto it = fixtures.find(opts.fixture);
        if (it == fixtures.end()) throw us::ParseError("unknown fixture '" + opts.fixture + "'");
        return it->second;
    }
    if (opts.problem_path.empty()) throw us::ParseError("either --problem or --fixture is required");
    return us::load_problem(opts.problem_path);
}

void emit(const Json& report, const std::string& json_out) {
    const std::string text = report.dump(2) + "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw us::Error("cannot write '" + json_out + "'");
        out << text;
        std::cout << "report written to " << json_out << "\n";
    } else {
        std::cout << text;
    }
}

// Deterministic lambda samples: integers, p-power shells around the rational
// eigenvalues, and a few fractions with denominator prime to p.
std::vector<us::PadicScalar> sample_lambdas(const us::Family& family, long long count, std::uint64_t seed) {
    const long long p = family.prime();
    std::set<us::Rational> seen;
    std::vector<us::PadicScalar> out;
    auto push = [&](const us::Rational& q) {
        if (static_cast<long long>(out.size()) >= count) return;
        if (seen.insert(q).second) out.emplace_back(q, p);
    };
    for (const auto& [root, mult] : us::rational_roots(family.resolvent().denominator())) {
        (void)mult;
        for (long long j = 1; j <= 4 && static_cast<long long>(out.size()) < count; ++j)
            for (long long u = 1; u <= 3; ++u)
                push(root.value() + us::Rational(u) * us::PMagnitude::finite(j).to_rational(p));
    }
    for (long long k = 0; k <= 9; ++k) push(us::Rational(k));
    us::SplitMix64 rng(seed);
    while (static_cast<long long>(out.size()) < count) {
        const long long num = rng.next_in(-60, 60);
        const long long den_exp = rng.next_in(0, 3);
        const us::Rational q = us::make_rational(num, us::int_pow(us::BigInt(p), den_exp));
        push(q);
    }
    return out;
}

int cmd_spectrum(const CommonOpts& opts, long long precision) {
    const us::ProblemFile problem = resolve_problem(opts);
    const us::Family family = us::make_family(problem);
    const us::SpectrumResult s = us::spectrum(family.a(), family.m(), precision);
    Json results;
    results["precision"] = precision;
    results["spectrum"] = us::spectrum_to_json(s);
    emit(us::make_report("spectrum", problem, std::move(results)), opts.json_out);
    return kExitOk;
}

int cmd_member(const CommonOpts& opts, const std::string& lambda_text, const std::string& eps_text) {
    const us::ProblemFile problem = resolve_problem(opts);
    const us::Family family = us::make_family(problem);
    const us::Epsilon eps = eps_text.empty() ? us::problem_epsilon(problem) : us::Epsilon::parse(eps_text);
    if (lambda_text.empty()) throw us::ParseError("--lambda is required for member");
    const us::PadicScalar lambda = us::PadicScalar::from_string(lambda_text, problem.prime);
    const us::MembershipVerdict v = us::member(family, lambda, eps);
    Json results;
    results["lambda"] = lambda.str();
    results["verdict"] = us::verdict_to_json(v);
    emit(us::make_report("member", problem, std::move(results)), opts.json_out);
    return kExitOk;
}

int cmd_region(const CommonOpts& opts, const std::string& center_text, bool has_radius, long long radius_exp,
               long long depth, const std::string& eps_text) {
    const us::ProblemFile problem = resolve_problem(opts);
    const us::Family family = us::make_family(problem);
    const us::Epsilon eps = eps_text.empty() ? us::problem_epsilon(problem) : us::Epsilon::parse(eps_text);

    us::Ball root{us::PadicScalar::zero(problem.prime), 0};
    if (center_text.empty() && !has_radius) {
        const auto bound = us::outer_bound_exponent(family, eps);
        if (!bound)
            throw us::ParseError(
                "the quantity does not decay at infinity; pass an explicit root ball "
                "via --center and --radius-exp");
        root = {us::PadicScalar::zero(problem.prime), -*bound};
    } else {
        if (!center_text.empty()) root.center = us::PadicScalar::from_string(center_text, problem.prime);
        if (has_radius) root.radius_exponent = radius_exp;
    }

    const us::RegionTree tree = us::explore(family, root, eps, depth);
    Json results;
    results["epsilon"] = us::format_rational(eps.value());
    results["root_center"] = root.center.str();
    results["root_radius_exp"] = root.radius_exponent;
    results["region"] = us::region_to_json(tree);
    emit(us::make_report("region", problem, std::move(results)), opts.json_out);
    return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& theorem, long long trials, std::uint64_t seed,
               const std::string& eps_text) {
    const us::ProblemFile problem = resolve_problem(opts);
    const us::Epsilon eps = eps_text.empty() ? us::problem_epsilon(problem) : us::Epsilon::parse(eps_text);
    const long long p = problem.prime;
    Json results;
    results["theorem"] = theorem;
    long long failures = 0;

    if (theorem == "perturbation-union") {
        const us::Family family = us::make_family(problem);
        const auto grid = sample_lambdas(family, std::max<long long>(trials, 20), seed);
        const us::UnionReport report = us::union_equality_campaign(family, grid, eps, seed);
        failures = report.failures;
        results["report"] = us::union_report_to_json(report);
    } else if (theorem == "forward-inclusion") {
        const us::Family family = us::make_family(problem);
        const us::ForwardReport report = us::verify_forward_inclusion(family, eps, trials, seed);
        failures = report.counterexamples;
        results["report"] = us::forward_report_to_json(report);
    } else if (theorem == "det-ab-ba") {
        // det(I + AB) = det(I + BA) over random exact matrices.
        us::SplitMix64 rng(seed);
        const us::RationalMatrix id = us::RationalMatrix::identity(problem.dimension, p);
        Json cases = Json::array();
        for (long long t = 0; t < trials; ++t) {
            us::RationalMatrix a(problem.dimension, p), b(problem.dimension, p);
            for (long long i = 0; i < problem.dimension; ++i)
                for (long long j = 0; j < problem.dimension; ++j) {
                    a.set(i, j, us::PadicScalar(us::make_rational(rng.next_in(-20, 20),
                                                                  us::int_pow(us::BigInt(p), rng.next_in(0, 2))),
                                                p));
                    b.set(i, j, us::PadicScalar(us::make_rational(rng.next_in(-20, 20),
                                                                  us::int_pow(us::BigInt(p), rng.next_in(0, 2))),
                                                p));
                }
            const bool ok = us::determinant(id + a * b) == us::determinant(id + b * a);
            if (!ok) {
                ++failures;
                Json bad;
                bad["a"] = us::matrix_to_json(a);
                bad["b"] = us::matrix_to_json(b);
                cases.push_back(std::move(bad));
            }
        }
        results["trials"] = trials;
        results["violations"] = std::move(cases);
    } else if (theorem == "reciprocal" || theorem == "sandwich" || theorem == "rescale" || theorem == "affine") {
        const us::RationalMatrix a = us::problem_matrix(problem, problem.a);
        const us::RationalMatrix id = us::RationalMatrix::identity(problem.dimension, p);
        const us::RationalMatrix b = problem.b ? us::problem_matrix(problem, *problem.b) : id;
        const us::RationalMatrix c = problem.c ? us::problem_matrix(problem, *problem.c) : id;
        const us::Family probe = us::Family::pseudo(a);  // sampling helper only
        const auto lambdas = sample_lambdas(probe, trials, seed);
        us::SplitMix64 rng(seed ^ 0xABCDEF1234567890ull);
        Json checked = Json::array();
        for (const auto& lambda : lambdas) {
            bool ok = true;
            if (theorem == "reciprocal") {
                if (lambda.is_zero()) continue;
                ok = us::reciprocal_check(a, b, c, lambda, eps);
            } else if (theorem == "sandwich") {
                ok = us::similarity_sandwich_check(a, b, c, us::problem_u(problem), lambda, eps);
            } else if (theorem == "rescale") {
                if (us::pencil_at(a, id, lambda).is_zero()) continue;
                ok = us::lambda_sigma_rescale_check(a, b, c, lambda, eps);
            } else {
                const us::PadicScalar alpha(us::Rational(rng.next_in(-9, 9)), p);
                us::PadicScalar beta(us::Rational(rng.next_in(1, 9)), p);
                ok = us::affine_image_check(a, alpha, beta, lambda, eps);
            }
            if (!ok) {
                ++failures;
                checked.push_back(lambda.str());
            }
        }
        results["points"] = static_cast<long long>(lambdas.size());
        results["violations"] = std::move(checked);
    } else {
        throw us::ParseError("unknown theorem '" + theorem +
                             "' (expected perturbation-union, forward-inclusion, det-ab-ba, reciprocal, "
                             "sandwich, rescale, affine)");
    }

    results["failures"] = failures;
    emit(us::make_report("verify", problem, std::move(results), seed), opts.json_out);
    return failures == 0 ? kExitOk : kExitCounterexample;
}

// ---- fixture reproduction ----

Json run_fixture(const std::string& name, const us::ProblemFile& problem) {
    Json out;
    const us::Family family = us::make_family(problem);
    {
        Json results;
        results["precision"] = us::kDefaultPrecision;
        results["spectrum"] = us::spectrum_to_json(us::spectrum(family.a(), family.m(), us::kDefaultPrecision));
        out["spectrum"] = us::make_report("spectrum", problem, std::move(results));
    }
    {
        const us::PadicScalar lambda = us::PadicScalar::from_string(us::fixture_probe_lambda(name), problem.prime);
        const us::MembershipVerdict v = us::member(family, lambda, us::problem_epsilon(problem));
        Json results;
        results["lambda"] = lambda.str();
        results["verdict"] = us::verdict_to_json(v);
        out["member"] = us::make_report("member", problem, std::move(results));
    }
    if (name == "example-final-iii") {
        const us::Ball root{us::PadicScalar::one(problem.prime), 1};
        const us::RegionTree tree = us::explore(family, root, us::problem_epsilon(problem), 6);
        Json results;
        results["epsilon"] = problem.epsilon;
        results["root_center"] = root.center.str();
        results["root_radius_exp"] = root.radius_exponent;
        results["region"] = us::region_to_json(tree);
        out["region"] = us::make_report("region", problem, std::move(results));
    }
    if (name == "structured-diag" || name == "example-final-ii") {
        const us::Epsilon eps = us::problem_epsilon(problem);
        std::vector<us::PadicScalar> grid;
        const long long p = problem.prime;
        for (const auto& [root, mult] : us::rational_roots(family.resolvent().denominator())) {
            (void)mult;
            grid.push_back(root);
            for (long long u = 1; u <= 5; ++u)
                grid.emplace_back(root.value() + us::Rational(u) * us::PMagnitude::finite(2).to_rational(p), p);
        }
        for (long long k = 3; k <= 8; ++k) grid.emplace_back(us::Rational(k), p);
        const us::UnionReport report = us::union_equality_campaign(family, grid, eps, 42);
        Json results;
        results["theorem"] = "perturbation-union";
        results["report"] = us::union_report_to_json(report);
        results["failures"] = report.failures;
        out["verify"] = us::make_report("verify", problem, std::move(results), 42);
    }
    return out;
}

int run_all_fixtures(const std::string& golden_dir, bool write_golden) {
    namespace fs = std::filesystem;
    int mismatches = 0;
    for (const auto& [name, problem] : us::builtin_fixtures()) {
        const Json actual = run_fixture(name, problem);
        const std::string text = actual.dump(2) + "\n";
        const fs::path path = fs::path(golden_dir) / (name + ".json");
        if (write_golden) {
            fs::create_directories(golden_dir);
            std::ofstream out(path, std::ios::binary);
            out << text;
            std::cout << "WROTE " << path.string() << "\n";
            continue;
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cout << "FAIL  " << name << " (missing golden file " << path.string() << ")\n";
            ++mismatches;
            continue;
        }
        std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (expected == text) {
            std::cout << "PASS  " << name << "\n";
        } else {
            std::cout << "FAIL  " << name << " (output differs from golden file)\n";
            ++mismatches;
        }
    }
    return mismatches == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ultraspec: exact spectra and pseudospectra of matrices and pencils over Q_p"};
    app.require_subcommand(0, 1);

    bool all_fixtures = false;
    std::string golden_dir = "fixtures/golden";
    bool write_golden = false;
    app.add_flag("--all-fixtures", all_fixtures, "run every built-in fixture and compare against golden files");
    app.add_option("--golden-dir", golden_dir, "directory holding the golden fixture outputs");
    app.add_flag("--write-golden", write_golden, "regenerate the golden files instead of comparing");

    CommonOpts spectrum_opts, member_opts, region_opts, verify_opts;
    long long precision = us::kDefaultPrecision;
    std::string member_lambda, member_eps;
    std::string region_center, region_eps;
    long long region_radius_exp = 0, region_depth = 4;
    bool region_has_radius = false;
    std::string verify_theorem, verify_eps;
    long long verify_trials = 50;
    std::uint64_t verify_seed = 42;

    auto add_common = [](CLI::App* cmd, CommonOpts& opts) {
        cmd->add_option("--problem", opts.problem_path, "problem file (JSON)");
        cmd->add_option("--fixture", opts.fixture, "built-in fixture name");
        cmd->add_option("--json", opts.json_out, "write the report to this path");
    };

    CLI::App* sp = app.add_subcommand("spectrum", "exact spectrum of the problem's pencil");
    add_common(sp, spectrum_opts);
    sp->add_option("--precision", precision, "p-adic digits for lifted roots");

    CLI::App* me = app.add_subcommand("member", "membership verdict at one point");
    add_common(me, member_opts);
    me->add_option("--lambda", member_lambda, "query point (rational string)");
    me->add_option("--eps", member_eps, "threshold override (rational string)");

    CLI::App* re = app.add_subcommand("region", "certified ball-tree description of the region");
    add_common(re, region_opts);
    re->add_option("--center", region_center, "root ball center (rational string)");
    re->add_option("--radius-exp", region_radius_exp, "root ball radius exponent r (radius p^-r)")
        ->each([&](const std::string&) { region_has_radius = true; });
    re->add_option("--depth", region_depth, "maximum subdivision depth");
    re->add_option("--eps", region_eps, "threshold override (rational string)");

    CLI::App* ve = app.add_subcommand("verify", "constructive theorem verification campaigns");
    add_common(ve, verify_opts);
    ve->add_option("--theorem", verify_theorem, "one of: perturbation-union, forward-inclusion, det-ab-ba, reciprocal, sandwich, rescale, affine")
        ->required();
    ve->add_option("--trials", verify_trials, "number of trials / sample points");
    ve->add_option("--seed", verify_seed, "64-bit campaign seed");
    ve->add_option("--eps", verify_eps, "threshold override (rational string)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (all_fixtures) return run_all_fixtures(golden_dir, write_golden);
        if (sp->parsed()) return cmd_spectrum(spectrum_opts, precision);
        if (me->parsed()) return cmd_member(member_opts, member_lambda, member_eps);
        if (re->parsed())
            return cmd_region(region_opts, region_center, region_has_radius, region_radius_exp, region_depth,
                              region_eps);
        if (ve->parsed()) return cmd_verify(verify_opts, verify_theorem, verify_trials, verify_seed, verify_eps);
        std::cout << app.help();
        return kExitOk;
    } catch (const us::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const us::SingularPencil& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingularPencil;
    } catch (const us::SingularStructure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const us::CommutativityViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const us::NotInPseudoRegion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const us::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
