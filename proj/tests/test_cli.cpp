#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "nlohmann/json.hpp"

// End-to-end checks against the installed binary. HOLEVO_BIN is injected by
// the build so the tests always exercise the freshly built executable.

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(HOLEVO_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

const char* kTrine = R"({"schema_version":"1","kind":"ensemble","payload":{
  "dim":3,
  "probs":[0.25,0.25,0.25,0.25],
  "states":[
    {"ket":[[1,0],[0,0],[0,0]]},
    {"ket":[[-0.5,0],[0.8660254037844386,0],[0,0]]},
    {"ket":[[-0.5,0],[-0.8660254037844386,0],[0,0]]},
    {"ket":[[0,0],[0,0],[1,0]]}
  ]}})";

const char* kBadState = R"({"schema_version":"1","kind":"ensemble","payload":{
  "dim":2,"probs":[0.5,0.5],
  "states":[{"ket":[[1,0],[0,0]]},
            {"matrix":[[[1.001,0],[0,0]],[[0,0],[-0.001,0]]]}]}})";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("chi on a file") {
        const auto path = write_temp("holevo_cli_trine.json", kTrine);
        const auto r = run("chi " + path);
        CHECK(r.code == 0);
        CHECK(r.out.find("exact quantity") != std::string::npos);

        const auto j = run("chi " + path + " --format json");
        CHECK(j.code == 0);
        const auto doc = nlohmann::json::parse(j.out);
        // ln-based in JSON; average spectrum is {3/8, 3/8, 1/4} for this ensemble.
        CHECK(doc.at("chi").get<double>() == doctest::Approx(1.0821955300).epsilon(1e-8));
    }

    TEST_CASE("bounds output is byte-deterministic under a fixed seed") {
        const auto path = write_temp("holevo_cli_trine.json", kTrine);
        const std::string args =
            "bounds " + path + " --format json --seed 99 --tolerance 1e-3 --max-iters 2000";
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const auto doc = nlohmann::json::parse(a.out);
        CHECK(doc.at("entries").size() > 10);
    }

    TEST_CASE("invalid input exits 1") {
        const auto path = write_temp("holevo_cli_bad.json", kBadState);
        CHECK(run("chi " + path).code == 1);
        CHECK(run("chi /nonexistent.json").code == 1);
        CHECK(run("nosuchcommand").code != 0);
    }

    TEST_CASE("starved solver exits 2 and still reports its best iterate") {
        const auto path = write_temp("holevo_cli_trine.json", kTrine);
        const auto r = run("amd " + path +
                           " --format json --tolerance 1e-15 --max-iters 3 --restarts 0");
        CHECK(r.code == 2);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc.at("converged").get<bool>() == false);
        CHECK(doc.at("value").get<double>() > 0.0);
    }

    TEST_CASE("capacity from a named family") {
        const auto r = run("capacity --family depolarizing --d 3 --p 0.5 --format json");
        CHECK(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc.at("exact").get<double>() == doctest::Approx(0.2310490602).epsilon(1e-8));
        CHECK(doc.at("bound").get<double>() >= doc.at("exact").get<double>());
        // Closed-form family: no probing needed.
        CHECK(doc.at("probe_count").get<int>() == 0);
    }

    TEST_CASE("log base switches the reported unit") {
        const auto path = write_temp("holevo_cli_trine.json", kTrine);
        const auto nats = run("chi " + path + " --format json --log-base e");
        const auto bits = run("chi " + path + " --format json --log-base 2");
        const double ve = nlohmann::json::parse(nats.out).at("chi").get<double>();
        const double v2 = nlohmann::json::parse(bits.out).at("chi").get<double>();
        CHECK(v2 == doctest::Approx(ve / std::log(2.0)).epsilon(1e-12));
    }
}
