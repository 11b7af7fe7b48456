#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef QUANDLERING_BIN
#error "QUANDLERING_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;  // stdout and stderr combined
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(QUANDLERING_BIN) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) { return "/tmp/quandlering_test_" + name; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decompose text output reproduces the published component list") {
    const RunResult r = run("decompose --n 8 --format text");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "K[R_8] over C: 6 components, total dimension 8"));
    CHECK(contains(r.out, "V_{triv,even}: v0 + v2 + v4 + v6"));
    CHECK(contains(r.out, "V_{triv,odd}: v1 + v3 + v5 + v7"));
    CHECK(contains(r.out, "V_{ref,even}: v0 - v2 + v4 - v6"));
    CHECK(contains(r.out, "V_{ref,odd}: v1 - v3 + v5 - v7"));
    CHECK(contains(r.out, "V_{1,even}: v0 - v4, v2 - v6"));
    CHECK(contains(r.out, "V_{1,odd}: v1 - v5, v3 - v7"));
}

TEST_CASE("decompose routes odd orders through the generic decomposer") {
    const RunResult r = run("decompose --n 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "K[R_7] over C: 4 components, total dimension 7"));
    CHECK(contains(r.out, "V_{triv}"));
    CHECK(contains(r.out, "V_{1}"));
    CHECK(contains(r.out, "V_{3}"));
}

TEST_CASE("decompose respects the field label flag") {
    const RunResult r = run("decompose --n 6 --field R");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "K[R_6] over R: 4 components"));
    CHECK(run("decompose --n 6 --field Q").exit_code == 2);  // rejected by flag check
}

TEST_CASE("JSON decompose output round-trips through verify") {
    const std::string path = temp_path("report12.json");
    const RunResult dec = run("decompose --n 12 --format json --output " + path);
    REQUIRE(dec.exit_code == 0);

    const RunResult ver = run("verify --input " + path);
    CHECK(ver.exit_code == 0);
    CHECK(contains(ver.out, "verdict: PASS"));

    const RunResult verj = run("verify --input " + path + " --format json");
    CHECK(verj.exit_code == 0);
    const auto j = nlohmann::json::parse(verj.out);
    CHECK(j["passed"] == true);
    CHECK(j["n"] == 12);
    CHECK(j["components"].size() == 8);

    // Cross-checking --n against the report works both ways.
    CHECK(run("verify --n 12 --input " + path).exit_code == 0);
    CHECK(run("verify --n 6 --input " + path).exit_code == 2);

    std::remove(path.c_str());
}

TEST_CASE("verify rejects a tampered report with exit code 1") {
    const std::string good = temp_path("report8.json");
    REQUIRE(run("decompose --n 8 --format json --output " + good).exit_code == 0);

    std::ifstream in(good);
    auto j = nlohmann::json::parse(in);
    in.close();
    // Replace the first component's generator with the bare basis vector v0.
    auto& gen = j["components"][0]["generators"][0]["coeffs"];
    for (auto& c : gen) c = nlohmann::json::array({0, 1});
    gen[0] = nlohmann::json::array({1, 1});
    const std::string bad = temp_path("report8_bad.json");
    write_file(bad, j.dump());

    const RunResult r = run("verify --input " + bad);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "invariant FAIL"));
    CHECK(contains(r.out, "witness x = 1"));
    CHECK(contains(r.out, "verdict: FAIL"));

    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("char-table prints both orbits with the dihedral witness") {
    const RunResult r = run("char-table --n 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "orbit {0, 2, 4, 6} (even)"));
    CHECK(contains(r.out, "orbit {1, 3, 5, 7} (odd)"));
    CHECK(contains(r.out, "restricted inner group of order 8"));
    CHECK(contains(r.out, "dihedral witness m = 4"));
    CHECK(contains(r.out, "triv"));
    CHECK(contains(r.out, "ref"));
    CHECK(contains(r.out, "psi_1"));

    const RunResult rj = run("char-table --n 6 --format json");
    CHECK(rj.exit_code == 0);
    const auto j = nlohmann::json::parse(rj.out);
    CHECK(j["n"] == 6);
    REQUIRE(j["tables"].size() == 2);
    CHECK(j["tables"][0]["witness_m"] == 3);
    CHECK(j["tables"][0]["irreducibles"].size() == 3);
}

TEST_CASE("inn prints generators, witness and orbit restrictions") {
    const RunResult r = run("inn --n 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "degree 8, order 8"));
    CHECK(contains(r.out, "R_0 = (1 7)(2 6)(3 5)"));
    CHECK(contains(r.out, "orbits: {0, 2, 4, 6} {1, 3, 5, 7}"));
    CHECK(contains(r.out, "restriction to orbit {0, 2, 4, 6}: order 8, dihedral witness m = 4"));

    const RunResult rj = run("inn --n 6 --format json");
    CHECK(rj.exit_code == 0);
    const auto j = nlohmann::json::parse(rj.out);
    CHECK(j["order"] == 6);
    CHECK(j["connected"] == false);
    CHECK(j["generators"].size() == 3);  // R_x = R_{x+3} for n = 6
}

TEST_CASE("axioms validates user tables") {
    const std::string good = temp_path("trivial2.json");
    write_file(good, R"({"n": 2, "table": [[0, 0], [1, 1]]})");
    const RunResult ok = run("axioms --input " + good);
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "valid quandle of order 2"));

    const std::string bad = temp_path("bad_table.json");
    write_file(bad, R"({"n": 2, "table": [[1, 0], [1, 0]]})");
    const RunResult fail = run("axioms --input " + bad);
    CHECK(fail.exit_code == 1);
    CHECK(contains(fail.out, "not a quandle"));

    const RunResult failj = run("axioms --input " + bad + " --format json");
    CHECK(failj.exit_code == 1);
    const auto j = nlohmann::json::parse(failj.out);
    CHECK(j["valid"] == false);
    CHECK(j["axiom"] == 1);
    CHECK(j["witness"] == nlohmann::json::array({0}));

    const std::string garbage = temp_path("garbage.json");
    write_file(garbage, "{not json");
    CHECK(run("axioms --input " + garbage).exit_code == 3);
    CHECK(run("axioms --input /tmp/quandlering_test_missing_file.json").exit_code == 3);

    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(garbage.c_str());
}

TEST_CASE("malformed report input exits with code 3") {
    const std::string path = temp_path("not_a_report.json");
    write_file(path, R"({"n": 8})");
    CHECK(run("verify --input " + path).exit_code == 3);
    // Zero denominator inside a report is malformed input, not a math failure.
    const std::string zden = temp_path("zden.json");
    write_file(zden, R"({"n": 4, "components": [{"orbit": [0, 2], "orbit_parity": "even",
        "label": "triv", "dimension": 1,
        "generators": [{"n": 4, "coeffs": [[1, 0], [0, 1], [0, 1], [0, 1]]}]}]})");
    CHECK(run("verify --input " + zden).exit_code == 3);
    std::remove(path.c_str());
    std::remove(zden.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("decompose").exit_code == 2);                     // no --n/--input
    CHECK(run("").exit_code == 2);                              // no subcommand
    CHECK(run("decompose --n 0").exit_code == 2);               // invalid order
    CHECK(run("decompose --n 8 --format yaml").exit_code == 2); // bad enum value
    CHECK(run("verify").exit_code == 2);                        // verify needs --input
    CHECK(run("frobnicate --n 8").exit_code == 2);              // unknown subcommand
    const std::string path = temp_path("table3.json");
    write_file(path, R"({"n": 3, "table": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]})");
    CHECK(run("decompose --n 4 --input " + path).exit_code == 2);  // mutually exclusive
    std::remove(path.c_str());
}

TEST_CASE("QUANDLERING_MAX_N caps accepted orders") {
    CHECK(run("decompose --n 12", "QUANDLERING_MAX_N=10").exit_code == 2);
    CHECK(run("decompose --n 10", "QUANDLERING_MAX_N=10").exit_code == 0);
    // An unparseable cap falls back to the default and still works.
    CHECK(run("decompose --n 12", "QUANDLERING_MAX_N=banana").exit_code == 0);
}

TEST_CASE("decompose accepts a user table via --input") {
    const std::string path = temp_path("r6_table.json");
    // The order-6 dihedral table, supplied explicitly.
    std::string table = R"({"n": 6, "table": [)";
    for (int i = 0; i < 6; ++i) {
        table += i ? ", [" : "[";
        for (int j = 0; j < 6; ++j)
            table += (j ? ", " : "") + std::to_string(((2 * j - i) % 6 + 6) % 6);
        table += "]";
    }
    table += "]}";
    write_file(path, table);
    const RunResult r = run("decompose --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "4 components, total dimension 6"));
    std::remove(path.c_str());
}
