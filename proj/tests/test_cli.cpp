#include <doctest.h>

#include "riesz/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " " + std::string(RIESZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

} // namespace

TEST_CASE("laws-list names every checked law") {
    CliResult r = run_cli("laws-list");
    CHECK(r.exit_code == 0);
    riesz::Json j = riesz::Json::parse(r.output);
    CHECK(j.at("lattice_laws").size() == 15);
    CHECK(j.at("additional_laws").size() == 7);
}

TEST_CASE("verify passes on every space") {
    for (const char* space : {"fin:3", "lex", "pl"}) {
        CliResult r = run_cli(std::string("verify --space ") + space +
                              " --cases 50 --seed 1 --format json");
        INFO(space, ": ", r.output);
        CHECK(r.exit_code == 0);
        riesz::Json j = riesz::Json::parse(r.output);
        CHECK(j.at("all_passed") == true);
        if (std::string(space) == "lex") {
            CHECK(j.at("non_archimedean_witness").is_object());
        } else {
            CHECK(j.at("non_archimedean_witness").is_null());
        }
    }
    // human format mentions the verdict
    CliResult h = run_cli("verify --space fin:2 --cases 20 --seed 1");
    CHECK(h.exit_code == 0);
    CHECK(h.output.find("all laws pass") != std::string::npos);
}

TEST_CASE("decompose on the worked example") {
    CliResult r = run_cli(
        R"(decompose --space fin:2 --x '["1","2"]' --a '["2","0"]' --b '["0","3"]')");
    CHECK(r.exit_code == 0);
    riesz::Json j = riesz::Json::parse(r.output);
    CHECK(j.at("a_prime") == riesz::Json::array({"1", "0"}));
    CHECK(j.at("b_prime") == riesz::Json::array({"0", "2"}));

    // precondition failure maps to exit 4
    CliResult bad = run_cli(
        R"(decompose --space fin:2 --x '["5","5"]' --a '["1","1"]' --b '["1","1"]')");
    CHECK(bad.exit_code == 4);
}

TEST_CASE("norm across spaces") {
    CliResult r = run_cli(R"(norm --space fin:3 --x '["1","-2","1/2"]' --unit ones)");
    CHECK(r.exit_code == 0);
    CHECK(riesz::Json::parse(r.output).at("norm") == "2");

    CliResult lex = run_cli(R"(norm --space lex --x '["0","7"]' --unit '["1","0"]')");
    CHECK(lex.exit_code == 0);
    CHECK(riesz::Json::parse(lex.output).at("norm") == "0");

    CliResult pl = run_cli(
        R"(norm --space pl --x '{"t":["0","1"],"v":["0","1"]}' --unit '{"t":["0","1"],"v":["1","1"]}')");
    CHECK(pl.exit_code == 0);
    CHECK(riesz::Json::parse(pl.output).at("norm") == "1");

    // non-unit u is a precondition failure
    CliResult bad = run_cli(R"(norm --space fin:2 --x '["1","1"]' --unit '["1","0"]')");
    CHECK(bad.exit_code == 4);
}

TEST_CASE("spectrum emits the normalized points") {
    CliResult r = run_cli(R"(spectrum --space fin:3 --unit '["1","2","4"]')");
    CHECK(r.exit_code == 0);
    riesz::Json j = riesz::Json::parse(r.output);
    REQUIRE(j.at("points").size() == 3);
    CHECK(j["points"][0] == riesz::Json({{"index", 0}, {"coeff", "1"}}));
    CHECK(j["points"][1] == riesz::Json({{"index", 1}, {"coeff", "1/2"}}));
    CHECK(j["points"][2] == riesz::Json({{"index", 2}, {"coeff", "1/4"}}));

    CHECK(run_cli("spectrum --space lex").exit_code == 2);
}

TEST_CASE("roundtrip reports both directions") {
    CliResult r = run_cli("roundtrip --space fin:4 --cases 50 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "CPhi~id: ok, PhiC~id: ok\n");

    CliResult j = run_cli(R"(roundtrip --space fin:2 --unit '["1","3"]' --format json --seed 3)");
    CHECK(j.exit_code == 0);
    riesz::Json out = riesz::Json::parse(j.output);
    CHECK(out.at("c_phi_id") == "ok");
    CHECK(out.at("phi_c_id") == "ok");
}

TEST_CASE("approx run over a grid target file") {
    write_file("cli_target.json", R"({"values": ["0", "1/16", "1/4", "9/16", "1"]})");
    CliResult r = run_cli("approx --grid 5 --target cli_target.json --eps 1/10 --out cli_expr.json");
    CHECK(r.exit_code == 0);
    riesz::Json j = riesz::Json::parse(r.output);
    CHECK(j.at("within_eps") == true);
    CHECK(j.at("error") == "0");
    CHECK(j.at("eps") == "1/10");
    CHECK(j.at("expr_file") == "cli_expr.json");

    // the emitted expression file parses back into the same tree
    std::ifstream in("cli_expr.json");
    REQUIRE(in.good());
    riesz::Json file_expr;
    in >> file_expr;
    CHECK(riesz::expr_to_json(riesz::expr_from_json(file_expr)) == file_expr);
    CHECK(file_expr == j.at("expr"));

    // grid mismatch is a usage error
    CHECK(run_cli("approx --grid 4 --target cli_target.json").exit_code == 2);
    CHECK(run_cli("approx --grid 5 --target no_such_file.json").exit_code == 2);
    std::remove("cli_target.json");
    std::remove("cli_expr.json");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify --space fin:0 --cases 5").exit_code == 2);
    CHECK(run_cli("verify --space nope --cases 5").exit_code == 2);
    CHECK(run_cli(R"(norm --space fin:2 --x 'not json' --unit ones)").exit_code == 2);
    CHECK(run_cli(R"(norm --space fin:2 --x '["1"]' --unit ones)").exit_code == 2);
    CHECK(run_cli("nonexistent-subcommand").exit_code == 2);
}

TEST_CASE("reruns with identical seeds are byte-identical") {
    for (const std::string cmd :
         {std::string("verify --space fin:2 --cases 30 --seed 9 --format json"),
          std::string("verify --space pl --cases 10 --seed 9 --format json"),
          std::string("roundtrip --space fin:3 --cases 30 --seed 9 --format json"),
          std::string(R"(spectrum --space fin:2 --unit '["2","5"]')"), std::string("laws-list")}) {
        CliResult a = run_cli(cmd), b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("RIESZ_SEED overrides the seed flag") {
    CliResult flag = run_cli("verify --space fin:2 --cases 30 --seed 4 --format json");
    CliResult env = run_cli("verify --space fin:2 --cases 30 --seed 777 --format json",
                            "RIESZ_SEED=4");
    // the override makes the runs agree despite different flags; the
    // reported seed field reflects the effective seed
    CHECK(flag.output == env.output);
    CHECK(riesz::Json::parse(env.output).at("seed") == 4);
}
