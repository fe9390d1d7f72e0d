#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

// End-to-end tests drive the installed binary; ctest exports its path.
const char* cli_path() { return std::getenv("SELFEMB_CLI"); }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " > cli_stdout.txt 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ScratchDir {
    fs::path previous = fs::current_path();
    ScratchDir() {
        fs::create_directories("cli_scratch");
        fs::current_path("cli_scratch");
    }
    ~ScratchDir() {
        fs::current_path(previous);
        std::error_code ec;
        fs::remove_all("cli_scratch", ec);
    }
};

}  // namespace

TEST_CASE("cli end-to-end" * doctest::skip(cli_path() == nullptr)) {
    ScratchDir scratch;

    SUBCASE("e3-lemma runs green and writes csv+json") {
        const int code = run_cli("e3-lemma --grid-step 0.125 --max-support 4 --out lemma");
        CHECK(code == 0);
        REQUIRE(fs::exists("lemma.json"));
        REQUIRE(fs::exists("lemma.csv"));
        const auto doc = nlohmann::json::parse(slurp("lemma.json"));
        CHECK(doc["pass"].get<bool>());
        CHECK(doc["config"]["experiment"] == "e3-lemma");
        CHECK(doc["rows"].size() > 0);
        const std::string csv = slurp("lemma.csv");
        CHECK(csv.rfind("case_index,p,support,distance,mu,m,counterexample\n", 0) == 0);
    }

    SUBCASE("re-runs are bit-identical") {
        REQUIRE(run_cli("e3-lemma --grid-step 0.125 --max-support 4 --out a") == 0);
        REQUIRE(run_cli("e3-lemma --grid-step 0.125 --max-support 4 --out b") == 0);
        CHECK(slurp("a.json") == slurp("b.json"));
        CHECK(slurp("a.csv") == slurp("b.csv"));

        REQUIRE(run_cli("e4-car --window 2 --samples 200 --seed 5 --out c") == 0);
        REQUIRE(run_cli("e4-car --window 2 --samples 200 --seed 5 --out d") == 0);
        CHECK(slurp("c.json") == slurp("d.json"));
    }

    SUBCASE("svg output for sweeps") {
        REQUIRE(run_cli("e1-vdh --max-support 4 --out curve --format json,svg") == 0);
        REQUIRE(fs::exists("curve.svg"));
        CHECK(slurp("curve.svg").rfind("<svg", 0) == 0);
        CHECK_FALSE(fs::exists("curve.csv"));
    }

    SUBCASE("missing seed is a configuration error") {
        CHECK(run_cli("e2-nogo --samples 5 --out x") == 3);
    }

    SUBCASE("exceeding the grid enumeration cap exits with the resource code") {
        CHECK(run_cli("e3-lemma --grid-step 0.01 --max-support 64 --out x") == 4);
    }

    SUBCASE("unknown experiment and bad flags are configuration errors") {
        CHECK(run_cli("--experiment bogus --out x") == 3);
        CHECK(run_cli("e3-lemma --grid-step 0.3 --out x") == 3);
        CHECK(run_cli("e3-lemma --format yaml --out x") == 3);
        CHECK(run_cli("--no-such-flag") == 3);
        CHECK(run_cli("") == 3);  // nothing selected
    }

    SUBCASE("config file drives a run and flags override it") {
        {
            std::ofstream cfg("run.cfg");
            cfg << "experiment=e3-lemma\n";
            cfg << "grid-step=0.125\n";
            cfg << "max-support=4\n";
            cfg << "out=from_config\n";
            cfg << "format=json\n";
        }
        REQUIRE(run_cli("--config run.cfg") == 0);
        REQUIRE(fs::exists("from_config.json"));
        const auto doc = nlohmann::json::parse(slurp("from_config.json"));
        CHECK(doc["config"]["max_support"].get<int>() == 4);

        REQUIRE(run_cli("--config run.cfg --max-support 3 --out overridden") == 0);
        const auto doc2 = nlohmann::json::parse(slurp("overridden.json"));
        CHECK(doc2["config"]["max_support"].get<int>() == 3);
    }

    SUBCASE("report merges runs and fails on a failing input") {
        REQUIRE(run_cli("e3-lemma --grid-step 0.25 --max-support 3 --out r1") == 0);
        REQUIRE(run_cli("e1-vdh --max-support 3 --out r2") == 0);
        CHECK(run_cli("report r1.json r2.json --out merged") == 0);
        const auto doc = nlohmann::json::parse(slurp("merged.json"));
        CHECK(doc["pass"].get<bool>());
        CHECK(doc["rows"].size() == 2);

        {
            std::ofstream bad("bad.json");
            bad << R"({"config":{"experiment":"e3-lemma"},"rows":[],)"
                << R"("verdicts":[{"name":"x","pass":false,"detail":""}],"pass":false})";
        }
        CHECK(run_cli("report r1.json bad.json --out merged2") == 2);
    }

    SUBCASE("extra generators flow through e4-car") {
        {
            std::ofstream fix("gens.txt");
            fix << "A1:-1:X;B1:-1:X\nA2:-2:Z;B2:-2:Z\n";
        }
        CHECK(run_cli("e4-car --window 2 --samples 50 --seed 9 --extra-generators gens.txt "
                      "--out withgens") == 0);
        const auto doc = nlohmann::json::parse(slurp("withgens.json"));
        bool found = false;
        for (const auto& v : doc["verdicts"]) {
            if (v["name"] == "extra_generators") {
                found = true;
                CHECK(v["pass"].get<bool>());
            }
        }
        CHECK(found);
    }
}
