// End-to-end checks of the command-line tool: exit codes, output schemas,
// byte determinism.  Drives the installed binary through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "eqcoh/serialization.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(EQCOH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("structconst row matches the pinned values") {
    RunResult r = run_cli("structconst --n 2 --i 1 --j 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["row"]["c^1"] == "t0 - t1");
    CHECK(j["row"]["c^2"] == "1");
}

TEST_CASE("kappa of (1,2,3)") {
    RunResult r = run_cli("kappa --lambda 1,2,3 --i 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "6\n");
}

TEST_CASE("check-gkm accepts the zero class") {
    const std::string path = "/tmp/eqcoh_zero_class.json";
    {
        std::ofstream out(path);
        out << eqcoh::class_to_json(eqcoh::LocalizedClass::zero(2)).dump();
    }
    RunResult r = run_cli("check-gkm --input " + path +
                          " --lambda 1,1,1 --mu 1,1,1 --ring integers");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("member: true") != std::string::npos);
}

TEST_CASE("check-gkm rejects a non-member with exit 3") {
    const std::string path = "/tmp/eqcoh_bad_class.json";
    {
        using namespace eqcoh;
        std::vector<Polynomial> parts{Polynomial(3), Polynomial::variable(3, 0),
                                      Polynomial(3)};
        std::ofstream out(path);
        out << class_to_json(LocalizedClass(std::move(parts))).dump();
    }
    RunResult r = run_cli("check-gkm --input " + path + " --ring integers");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("member: false") != std::string::npos);
}

TEST_CASE("integer-mode check against mu != 1 is labelled") {
    const std::string path = "/tmp/eqcoh_zero_class.json";
    {
        std::ofstream out(path);
        out << eqcoh::class_to_json(eqcoh::LocalizedClass::zero(1)).dump();
    }
    RunResult r = run_cli("check-gkm --input " + path + " --mu 1,2 --ring integers");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("formal divisibility check") != std::string::npos);
}

TEST_CASE("validation failures exit with 2 and name the flag") {
    CHECK(run_cli("kappa --lambda 0,1 --i 0").exit_code == 2);
    RunResult r = run_cli("schubert --i 5 --n 2");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("--i") != std::string::npos);
    CHECK(run_cli("check-gkm --input /nonexistent.json").exit_code == 2);
    CHECK(run_cli("structconst --i 1 --j 1").exit_code == 2);  // missing --n
}

TEST_CASE("non-integral weighted class exits with 4") {
    RunResult r = run_cli("weighted-class --lambda 1,1,2 --i 2");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("invariant") != std::string::npos);
}

TEST_CASE("weighted class output carries kappa and the class") {
    RunResult r = run_cli("weighted-class --lambda 1,2,2 --i 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["kappa"] == "4");
    CHECK(j["lambda"] == nlohmann::json::array({1, 2, 2}));
    eqcoh::LocalizedClass c = eqcoh::class_from_json(j["class"]);
    CHECK(c == eqcoh::weighted_canonical_class(2, eqcoh::WeightVector({1, 2, 2})));
}

TEST_CASE("emitted class JSON reparses to an equal value") {
    RunResult r = run_cli("schubert --i 2 --n 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(eqcoh::class_from_json(j["class"]) == eqcoh::schubert_class(2, 3));
}

TEST_CASE("repeated invocations are byte identical") {
    const std::string args = "structconst --n 4 --format csv";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    RunResult c = run_cli("edge-weights --lambda 2,3,5 --format json");
    RunResult d = run_cli("edge-weights --lambda 2,3,5 --format json");
    REQUIRE(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("weighted structconst reports both coordinate systems") {
    RunResult r = run_cli("weighted-structconst --lambda 1,2,2 --i 1 --j 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    bool saw_k1 = false;
    for (const auto& e : j["entries"])
        if (e["k"] == 1) {
            saw_k1 = true;
            CHECK(e["image"] == "2*t0 - 2*t1");
            CHECK(e["native"] == "2*t0 - t1");
            CHECK(e["image_integral"] == true);
            CHECK(e["native_integral"] == true);
        }
    CHECK(saw_k1);
}
