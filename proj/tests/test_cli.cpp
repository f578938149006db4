#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path() {
    const char* path = std::getenv("COHTELE_CLI");
    REQUIRE_MESSAGE(path != nullptr, "COHTELE_CLI must point at the cohtele binary");
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json run_json(const std::string& args) {
    const RunResult r = run(args);
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.stdout_text);
}

}  // namespace

TEST_CASE("coherence subcommand") {
    const auto out = run_json("coherence --theta 1.5707963267948966 --phi 0.7");
    CHECK(out["coherence"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("teleport with the maximally entangled resource") {
    const auto out = run_json(
        "teleport --resource maxent --case I --outcome 0 --theta 1.5707963 --phi 0");
    CHECK(out["probability"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out["coherence_out"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(out["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(out["n_re"].is_null());
    CHECK(out["case"] == "I");
    CHECK(out["route"] == "direct");
    REQUIRE(out["bob_state"].size() == 4);
    CHECK(out["bob_state"][1][0].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("teleport with the non-maximal resource, n = 2") {
    const auto out = run_json(
        "teleport --resource nonmax:2+0i --case I --outcome 0 "
        "--theta 1.5707963267948966 --phi 1.5707963267948966");
    CHECK(out["probability"].get<double>() == doctest::Approx(0.68).epsilon(1e-12));
    CHECK(out["coherence_out"].get<double>() ==
          doctest::Approx(8.0 / 17.0).epsilon(1e-12));
    CHECK(out["n_re"].get<double>() == doctest::Approx(2.0));
    CHECK(out["n_im"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("teleport with the Werner resource reports the simulated state") {
    const auto out = run_json(
        "teleport --resource werner:0.3333333 --case I --outcome 0 "
        "--theta 1.5707963267948966 --phi 0");
    CHECK(out["probability"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    // Bob's coherence for a |+> input scales linearly with the mixing parameter
    CHECK(out["coherence_out"].get<double>() ==
          doctest::Approx(0.3333333).epsilon(1e-6));
}

TEST_CASE("theorem route matches the direct route through the CLI") {
    const std::string common =
        " --resource mems:0.5,0.3,0.2,0 --case I --outcome 1 --theta 0.9 --phi 0.4";
    const auto direct = run_json("teleport --route direct" + common);
    const auto theorem = run_json("teleport --route theorem" + common);
    CHECK(direct["probability"].get<double>() ==
          doctest::Approx(theorem["probability"].get<double>()).epsilon(1e-9));
    CHECK(direct["coherence_out"].get<double>() ==
          doctest::Approx(theorem["coherence_out"].get<double>()).epsilon(1e-9));
}

TEST_CASE("sweep output is deterministic and carries the expected header") {
    const std::string args =
        "sweep --param phi --start 0 --stop 6.283185307179586 --count 25 "
        "--resource maxent --case I --outcome 0 --theta 1.5707963267948966";
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK(a.stdout_text.rfind("index,theta,phi,n_re,n_im,resource,case,outcome,"
                              "probability,coherence_in,coherence_out,ratio\n",
                              0) == 0);
    // header + 25 rows
    int lines = 0;
    for (char ch : a.stdout_text)
        if (ch == '\n') ++lines;
    CHECK(lines == 26);
}

TEST_CASE("sweep over the resource deformation reproduces the closed-form ratio") {
    const RunResult r = run(
        "sweep --param n_abs --start 0.5 --stop 2 --count 4 --resource nonmax:1+0i "
        "--case I --outcome 0 --theta 1.5707963267948966 --phi 1.5707963267948966");
    REQUIRE(r.exit_code == 0);
    // last row: n = 2, ratio = 2*4/(1+16)
    const auto last = r.stdout_text.rfind("\n3,");
    REQUIRE(last != std::string::npos);
    std::string row = r.stdout_text.substr(last + 1);
    std::array<double, 3> tail{};  // probability, coherence_in/out skipped via parsing
    int field = 0;
    double ratio = 0.0;
    size_t pos = 0;
    while (pos <= row.size()) {
        const size_t next = row.find_first_of(",\n", pos);
        const std::string cell = row.substr(pos, next - pos);
        if (field == 11) ratio = std::stod(cell);
        if (next == std::string::npos) break;
        pos = next + 1;
        ++field;
    }
    (void)tail;
    CHECK(ratio == doctest::Approx(8.0 / 17.0).epsilon(1e-10));
}

TEST_CASE("verify exits 0 on the default seed") {
    const RunResult r = run("verify all");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("teleport --resource bogus --theta 0.5").exit_code == 2);
    CHECK(run("teleport").exit_code == 2);                    // missing required --theta
    CHECK(run("sweep --param theta --start 1 --stop 0 --count 8").exit_code == 2);
    CHECK(run("teleport --resource mems:0.5,0.3,0.2,0 --case II --theta 0.5").exit_code == 2);
}

TEST_CASE("impossible outcomes exit with status 3") {
    CHECK(run("teleport --resource nonmax:0+0i --case III --outcome 1 --theta 0")
              .exit_code == 3);
}
