#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef GOLAYKS_CLI_PATH
#error "GOLAYKS_CLI_PATH must point at the golayks binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() /
              ("golayks-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

RunResult run(const Workspace& ws, const std::string& args) {
    const fs::path capture = ws.dir / "stdout.txt";
    const std::string cmd = std::string(GOLAYKS_CLI_PATH) + " " + args + " > " +
                            capture.string() + " 2>" + (ws.dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream os;
    os << in.rdbuf();
    r.stdout_text = os.str();
    return r;
}

json read_json(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

std::string out_flag(const Workspace& ws) { return " --out " + ws.dir.string(); }

}  // namespace

TEST_CASE("code subcommand") {
    Workspace ws;
    const RunResult r = run(ws, "code golay24" + out_flag(ws));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("[24,12,8]") != std::string::npos);

    const json j = read_json(ws.dir / "code_summary.json");
    CHECK(j.at("length") == 24);
    CHECK(j.at("min_distance") == 8);
    CHECK(j.at("codewords") == 4096);
    CHECK(j.at("weight_distribution").at("12") == 2576);
    CHECK(fs::exists(ws.dir / "generator.txt"));
}

TEST_CASE("code subcommand with puncturing") {
    Workspace ws;
    const RunResult r = run(ws, "code golay12 --puncture 11" + out_flag(ws));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("[11,6,5]") != std::string::npos);
}

TEST_CASE("code subcommand reads a generator-matrix file") {
    Workspace ws;
    Workspace out;
    {
        const RunResult dump = run(ws, "code golay12" + out_flag(ws));
        REQUIRE(dump.exit_code == 0);
    }
    const RunResult r =
        run(out, "code " + (ws.dir / "generator.txt").string() + out_flag(out));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("[12,6,6]") != std::string::npos);
}

TEST_CASE("rays subcommand") {
    Workspace ws;
    const RunResult r = run(ws, "rays golay24" + out_flag(ws));
    CHECK(r.exit_code == 0);
    const json j = read_json(ws.dir / "rays_summary.json");
    CHECK(j.at("rays") == 2048);
    CHECK(j.at("orthogonal_pairs") == 1318912);
    CHECK(j.at("degree_histogram").at("1288") == 2048);
}

TEST_CASE("rays subcommand on the punctured code reports zero pairs") {
    Workspace ws;
    const RunResult r = run(ws, "rays golay24 --puncture 23" + out_flag(ws));
    CHECK(r.exit_code == 0);
    const json j = read_json(ws.dir / "rays_summary.json");
    CHECK(j.at("rays") == 2048);
    CHECK(j.at("orthogonal_pairs") == 0);
}

TEST_CASE("bases subcommand in translate mode") {
    Workspace ws;
    const RunResult r = run(ws, "bases golay24" + out_flag(ws));
    CHECK(r.exit_code == 0);
    const json j = read_json(ws.dir / "bases.json");
    CHECK(j.at("bases").size() == 2048);
    CHECK(j.at("ordering") == "translation-table");
    CHECK(j.at("matrix").size() == 2048);
}

TEST_CASE("bases subcommand enumerating the weight-9 ternary system") {
    Workspace ws;
    const RunResult r = run(ws, "bases golay12 --weight 9" + out_flag(ws));
    CHECK(r.exit_code == 0);
    const json j = read_json(ws.dir / "bases.json");
    CHECK(j.at("bases").size() == 495);
    CHECK(j.at("ordering") == "canonical");
}

TEST_CASE("ks subcommand proves the binary system, exit 0") {
    Workspace ws;
    const RunResult r = run(ws, "ks golay24" + out_flag(ws));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("2048_24 - 2048_24") != std::string::npos);
    const json j = read_json(ws.dir / "certificate.json");
    CHECK(j.at("ks_proved") == true);
    CHECK(j.at("diophantine_feasible") == false);
}

TEST_CASE("ks subcommand on a feasible system exits 1") {
    Workspace ws;
    const RunResult r =
        run(ws, "ks golay24 --restrict 1 127 128 136 --mode enumerate" + out_flag(ws));
    CHECK(r.exit_code == 1);
    const json j = read_json(ws.dir / "certificate.json");
    CHECK(j.at("ks_proved") == false);
    CHECK(j.at("diophantine_feasible") == true);
}

TEST_CASE("ks subcommand rechecks a bases JSON artifact") {
    Workspace ws;
    REQUIRE(run(ws, "bases golay12 --weight 9" + out_flag(ws)).exit_code == 0);
    const RunResult r =
        run(ws, "ks --bases-json " + (ws.dir / "bases.json").string() + out_flag(ws));
    CHECK(r.exit_code == 0);
    const json j = read_json(ws.dir / "certificate.json");
    CHECK(j.at("ks_proved") == true);
}

TEST_CASE("pipeline subcommand") {
    Workspace ws;
    const RunResult r = run(ws, "pipeline golay24" + out_flag(ws));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("ks_proved") != std::string::npos);
    const json j = read_json(ws.dir / "pipeline.json");
    CHECK(j.at("divisibility_ok") == true);
    CHECK(j.at("seed_outcome") == "found");
    CHECK(j.at("certificate").at("ks_proved") == true);
}

TEST_CASE("pipeline subcommand on hamming8 reports the divisibility failure") {
    Workspace ws;
    const RunResult r = run(ws, "pipeline hamming8" + out_flag(ws));
    CHECK(r.exit_code == 0);
    const json j = read_json(ws.dir / "pipeline.json");
    CHECK(j.at("divisibility_ok") == false);
    CHECK(j.at("certificate").is_null());
}

TEST_CASE("error handling and exit codes") {
    Workspace ws;
    SUBCASE("unknown code name exits 2") {
        CHECK(run(ws, "code golay25" + out_flag(ws)).exit_code == 2);
    }
    SUBCASE("missing subcommand exits 2") {
        CHECK(run(ws, "").exit_code == 2);
    }
    SUBCASE("full enumeration of the 2048-ray system is refused without the override") {
        CHECK(run(ws, "bases golay24 --mode enumerate" + out_flag(ws)).exit_code == 2);
    }
    SUBCASE("exhausted seed budget exits 3") {
        CHECK(run(ws, "bases golay24 --budget 3" + out_flag(ws)).exit_code == 3);
    }
    SUBCASE("ks with tiny oracle budget still proves by counting") {
        CHECK(run(ws, "ks golay24 --oracle-budget 2" + out_flag(ws)).exit_code == 0);
    }
}
