// Command-line front end: verification suites, exact algebra operations,
// duality round trips, and lattice approximation runs with JSON I/O.
//
// Exit codes: 0 success, 2 usage error, 3 law/verification failure,
// 4 precondition failure.

#include "riesz/approx.hpp"
#include "riesz/core.hpp"
#include "riesz/duality.hpp"
#include "riesz/ideals.hpp"
#include "riesz/json_io.hpp"
#include "riesz/spaces.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace riesz;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitPrecondition = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("RIESZ_SEED")) return std::strtoull(env, nullptr, 10);
    return flag_seed;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("malformed JSON for " + what + ": " + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Per-space element codecs so the generic commands can stay templated.
Vec parse_element(const FinDimSpace& s, const Json& j) {
    Vec v = vec_from_json(j);
    if (v.size() != s.dimension()) throw UsageError("element has wrong dimension");
    return v;
}
LexElement parse_element(const LexPlane&, const Json& j) { return lex_from_json(j); }
PLFunction parse_element(const PLSpace&, const Json& j) { return pl_from_json(j); }

Json element_to_json(const FinDimSpace&, const Vec& v) { return vec_to_json(v); }
Json element_to_json(const LexPlane&, const LexElement& x) { return lex_to_json(x); }
Json element_to_json(const PLSpace&, const PLFunction& f) { return pl_to_json(f); }

// Dispatches "fin:n" | "lex" | "pl" to a callable taking the space model.
template <class F>
int with_space(const std::string& descriptor, F&& f) {
    if (descriptor.rfind("fin:", 0) == 0) {
        long n = 0;
        try {
            n = std::stol(descriptor.substr(4));
        } catch (const std::exception&) {
            throw UsageError("malformed space descriptor '" + descriptor + "'");
        }
        if (n < 1) throw UsageError("fin:n requires n >= 1");
        return f(FinDimSpace(static_cast<std::size_t>(n)));
    }
    if (descriptor == "lex") return f(LexPlane{});
    if (descriptor == "pl") return f(PLSpace{});
    throw UsageError("unknown space descriptor '" + descriptor + "' (expected fin:n | lex | pl)");
}

template <RieszSpaceModel S>
int run_verify(const S& space, int cases, std::uint64_t seed, const std::string& format) {
    auto reports = check_laws(space, cases, seed);
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;

    auto witness = space.find_infinitesimal();
    if (format == "json") {
        Json out;
        out["space"] = space.name();
        out["cases"] = cases;
        out["seed"] = seed;
        Json rs = Json::array();
        for (const auto& r : reports) rs.push_back(law_report_to_json(r));
        out["reports"] = std::move(rs);
        if (witness) {
            Json w;
            w["eps"] = element_to_json(space, witness->eps);
            w["bound"] = element_to_json(space, witness->bound);
            w["certificate"] = witness->certificate;
            out["non_archimedean_witness"] = std::move(w);
        } else {
            out["non_archimedean_witness"] = nullptr;
        }
        out["all_passed"] = all_passed;
        emit(out);
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.law << " (" << r.cases_run << " cases)";
            if (!r.passed) std::cout << "  counterexample: " << r.counterexample;
            std::cout << "\n";
        }
        if (witness) {
            std::cout << "non-Archimedean: witness " << space.to_string(witness->eps)
                      << " bounded by " << space.to_string(witness->bound) << "; "
                      << witness->certificate << "\n";
        }
        std::cout << (all_passed ? "all laws pass" : "law failures detected") << "\n";
    }
    return all_passed ? kExitOk : kExitVerification;
}

template <RieszSpaceModel S>
int run_decompose(const S& space, const std::string& x_text, const std::string& a_text,
                  const std::string& b_text) {
    auto x = parse_element(space, parse_json(x_text, "--x"));
    auto a = parse_element(space, parse_json(a_text, "--a"));
    auto b = parse_element(space, parse_json(b_text, "--b"));
    auto [ap, bp] = riesz_decompose(space, x, a, b);
    Json out;
    out["a_prime"] = element_to_json(space, ap);
    out["b_prime"] = element_to_json(space, bp);
    emit(out);
    return kExitOk;
}

Vec parse_unit_flag(const FinDimSpace& space, const std::string& text) {
    if (text == "ones") return space.unit();
    return parse_element(space, parse_json(text, "--unit"));
}

template <RieszSpaceModel S>
int run_norm(const S& space, const std::string& x_text, const std::string& u_text) {
    auto x = parse_element(space, parse_json(x_text, "--x"));
    auto u = [&] {
        if constexpr (std::is_same_v<S, FinDimSpace>) {
            return parse_unit_flag(space, u_text);
        } else {
            return parse_element(space, parse_json(u_text, "--unit"));
        }
    }();
    Json out;
    out["norm"] = rational_to_json(space.unit_norm(x, u));
    emit(out);
    return kExitOk;
}

int run_spectrum(const std::string& descriptor, const std::string& unit_text) {
    if (descriptor.rfind("fin:", 0) != 0)
        throw UsageError("spectrum requires a finite-dimensional space (fin:n)");
    return with_space(descriptor, [&](const auto& space) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(space)>, FinDimSpace>) {
            Vec u = parse_unit_flag(space, unit_text);
            auto points = spectrum(space.dimension(), u);
            Json out;
            Json ps = Json::array();
            for (const auto& p : points) ps.push_back(spectrum_point_to_json(p));
            out["points"] = std::move(ps);
            emit(out);
            return kExitOk;
        } else {
            throw UsageError("spectrum requires fin:n");
        }
    });
}

int run_roundtrip(const std::string& descriptor, const std::string& unit_text, int cases,
                  std::uint64_t seed, const std::string& format) {
    if (descriptor.rfind("fin:", 0) != 0)
        throw UsageError("roundtrip requires a finite-dimensional space (fin:n)");
    return with_space(descriptor, [&](const auto& space) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(space)>, FinDimSpace>) {
            std::size_t n = space.dimension();
            Vec u = parse_unit_flag(space, unit_text);
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
            FiniteSpace x(labels);
            RoundtripReport rs = roundtrip_space(x);
            RoundtripReport ra = roundtrip_algebra(n, u, cases, seed);
            if (format == "json") {
                Json out;
                out["c_phi_id"] = ra.ok ? "ok" : ("fail: " + ra.detail);
                out["phi_c_id"] = rs.ok ? "ok" : ("fail: " + rs.detail);
                emit(out);
            } else {
                std::cout << "CPhi~id: " << (ra.ok ? "ok" : "FAIL " + ra.detail)
                          << ", PhiC~id: " << (rs.ok ? "ok" : "FAIL " + rs.detail) << "\n";
            }
            return (rs.ok && ra.ok) ? kExitOk : kExitVerification;
        } else {
            throw UsageError("roundtrip requires fin:n");
        }
    });
}

int run_approx(int grid, const std::string& target_path, const std::string& gens_arg,
               const std::string& eps_text, const std::string& out_path, bool minimize) {
    Json tj = load_json_file(target_path);
    SampledTarget target = [&] {
        try {
            if (tj.contains("points")) return target_from_json(tj);
            if (grid < 1) throw UsageError("--grid is required when the target file has no points");
            FiniteSpace domain = uniform_grid(static_cast<std::size_t>(grid));
            Vec values = vec_from_json(tj.at("values"));
            if (values.size() != domain.size())
                throw UsageError("target values do not match the grid size");
            return SampledTarget{std::move(domain), std::move(values)};
        } catch (const Json::exception& e) {
            throw UsageError(std::string("malformed target file: ") + e.what());
        }
    }();
    if (grid >= 1 && target.domain.size() != static_cast<std::size_t>(grid))
        throw UsageError("--grid disagrees with the target's point count");

    GeneratorSet gens = [&] {
        if (gens_arg == "unital-affine") return unital_affine_generators(target.domain);
        return generator_set_from_json(load_json_file(gens_arg), target.domain);
    }();

    Rational eps = [&] {
        try {
            return Rational::parse(eps_text);
        } catch (const std::exception&) {
            throw UsageError("malformed --eps (expected a rational like 1/10)");
        }
    }();

    SwOptions options;
    options.minimize_cover = minimize;
    LatticeExpr expr = sw_approximate(target, gens, eps, options);
    Rational err = expr_error(expr, gens, target);

    Json out;
    out["eps"] = rational_to_json(eps);
    out["error"] = rational_to_json(err);
    out["within_eps"] = err <= eps;
    out["expr_size"] = expr.size();
    out["expr"] = expr_to_json(expr);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << expr_to_json(expr).dump(2) << "\n";
        out["expr_file"] = out_path;
    }
    emit(out);
    return err <= eps ? kExitOk : kExitVerification;
}

int run_laws_list() {
    Json out;
    Json lattice = Json::array();
    for (const auto& name : lattice_law_names()) lattice.push_back(name);
    out["lattice_laws"] = std::move(lattice);
    out["additional_laws"] =
        Json::array({"riesz-decomposition", "norm-triangle", "norm-homogeneity", "norm-definite",
                     "norm-domination", "norm-equivalence", "order-recovery"});
    emit(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riesz-space algebra, Yosida duality, and lattice approximation"};
    app.require_subcommand(1);

    std::string space = "fin:2";
    int cases = 1000;
    std::uint64_t seed = 0;
    std::string format = "human";
    std::string x_text, a_text, b_text, unit_text = "ones";
    int grid = 0;
    std::string target_path, gens_arg = "unital-affine", eps_text = "1/10", out_path;
    bool minimize = false;

    auto* verify = app.add_subcommand("verify", "Run the law suite on a space instance");
    verify->add_option("--space", space, "fin:n | lex | pl");
    verify->add_option("--cases", cases, "random cases per law")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "rng seed (RIESZ_SEED overrides)");
    verify->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* decompose = app.add_subcommand("decompose", "Riesz decomposition x = a' + b'");
    decompose->add_option("--space", space, "fin:n | lex | pl");
    decompose->add_option("--x", x_text, "element JSON")->required();
    decompose->add_option("--a", a_text, "element JSON")->required();
    decompose->add_option("--b", b_text, "element JSON")->required();

    auto* norm = app.add_subcommand("norm", "Exact unit norm");
    norm->add_option("--space", space, "fin:n | lex | pl");
    norm->add_option("--x", x_text, "element JSON")->required();
    norm->add_option("--unit", unit_text, "unit element JSON (or 'ones' for fin:n)")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of (R^n, u)");
    spectrum_cmd->add_option("--space", space, "fin:n");
    spectrum_cmd->add_option("--unit", unit_text, "unit JSON array or 'ones'");

    auto* roundtrip = app.add_subcommand("roundtrip", "Yosida round-trip verification");
    roundtrip->add_option("--space", space, "fin:n");
    roundtrip->add_option("--unit", unit_text, "unit JSON array or 'ones'");
    roundtrip->add_option("--cases", cases, "samples for the algebra check")->check(CLI::PositiveNumber);
    roundtrip->add_option("--seed", seed, "rng seed (RIESZ_SEED overrides)");
    roundtrip->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* approx = app.add_subcommand("approx", "Constructive lattice approximation");
    approx->add_option("--grid", grid, "uniform grid size on [0,1]");
    approx->add_option("--target", target_path, "target JSON file")->required();
    approx->add_option("--gens", gens_arg, "'unital-affine' or generator-set JSON file");
    approx->add_option("--eps", eps_text, "error budget, rational");
    approx->add_option("--out", out_path, "write the expression JSON here");
    approx->add_flag("--minimize", minimize, "greedy subcover extraction (smaller expressions)");

    app.add_subcommand("laws-list", "List the checked laws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        seed = effective_seed(seed);
        if (verify->parsed())
            return with_space(space, [&](const auto& s) { return run_verify(s, cases, seed, format); });
        if (decompose->parsed())
            return with_space(space,
                              [&](const auto& s) { return run_decompose(s, x_text, a_text, b_text); });
        if (norm->parsed())
            return with_space(space, [&](const auto& s) { return run_norm(s, x_text, unit_text); });
        if (spectrum_cmd->parsed()) return run_spectrum(space, unit_text);
        if (roundtrip->parsed()) return run_roundtrip(space, unit_text, cases, seed, format);
        if (approx->parsed())
            return run_approx(grid, target_path, gens_arg, eps_text, out_path, minimize);
        return run_laws_list();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
