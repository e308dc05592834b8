#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Both come from the build system: the path of the built CLI binary and the
// bundled data directory.
#ifndef ISOSPEC_CLI_PATH
#error "ISOSPEC_CLI_PATH must be defined"
#endif
#ifndef ISOSPEC_DATA_DIR
#error "ISOSPEC_DATA_DIR must be defined"
#endif

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(ISOSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_file(const std::string& name) {
    return std::string(ISOSPEC_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const json& payload) {
    const std::string path = "/tmp/isospec_cli_test_" + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << payload.dump(2) << "\n";
    return path;
}

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);  // missing required flags
    CHECK(run_cli("family --d 3").exit_code == 2);  // --m is required
}

TEST_CASE("--help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("family --help").exit_code == 0);
    CHECK(run_cli("schreier --help").exit_code == 0);
}

TEST_CASE("domain errors exit 1 with a machine-readable error object") {
    RunResult r = run_cli("family --d 2 --m 4");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j.at("error") == "DegreeTooSmall");
    CHECK(j.contains("message"));
}

TEST_CASE("hilbert emits the sign table and the quaternion class") {
    RunResult r = run_cli("hilbert --a -1 --b -1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("a") == "-1");
    CHECK(j.at("b") == "-1");
    bool saw_p2 = false;
    for (const json& entry : j.at("signs")) {
        if (entry.at("place") == "p:2") {
            saw_p2 = true;
            CHECK(entry.at("sign") == -1);
        }
    }
    CHECK(saw_p2);
    CHECK(j.at("class").at("invariants").at("p:2") == "1/2");
    CHECK(j.at("class").at("invariants").at("real") == "1/2");
}

TEST_CASE("family generates the pinned certificate") {
    RunResult r = run_cli("family --d 3 --m 4");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("d") == 3);
    CHECK(j.at("T").size() == 6);
    CHECK(j.at("vectors")[0] == json::array({1, 1, 1, -1, -1, -1}));
    CHECK(j.at("pairwise")[0][1].at("relation") == "neither");
    CHECK(j.at("pairwise")[2][2].at("relation") == "isomorphic");
}

TEST_CASE("family honors explicit places") {
    RunResult r = run_cli("family --d 3 --m 1 --places p2,p3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("T").size() == 2);
    CHECK(j.at("classes")[0].at("invariants").at("p:2") == "1/3");
    CHECK(j.at("classes")[0].at("invariants").at("p:3") == "2/3");
}

TEST_CASE("classify decides the ring relation between two class files") {
    json c1 = {{"invariants", {{"p:2", "1/3"}, {"p:3", "2/3"}}}};
    json c2 = {{"invariants", {{"p:2", "2/3"}, {"p:3", "1/3"}}}};
    const std::string f1 = write_temp("c1.json", c1);
    const std::string f2 = write_temp("c2.json", c2);

    RunResult same = run_cli("classify --c1 " + f1 + " --c2 " + f1);
    REQUIRE(same.exit_code == 0);
    CHECK(json::parse(same.out).at("relation") == "isomorphic");

    RunResult anti = run_cli("classify --c1 " + f1 + " --c2 " + f2);
    REQUIRE(anti.exit_code == 0);
    CHECK(json::parse(anti.out).at("relation") == "anti_isomorphic");
}

TEST_CASE("classify with the Gaussian universe finds the swap witness") {
    json c1 = {{"invariants", {{"p:5+", "1/3"}, {"p:5-", "2/3"}}}};
    json c2 = {{"invariants", {{"p:5+", "2/3"}, {"p:5-", "1/3"}}}};
    const std::string f1 = write_temp("qi_c1.json", c1);
    const std::string f2 = write_temp("qi_c2.json", c2);
    RunResult r = run_cli("classify --universe Qi --c1 " + f1 + " --c2 " + f2);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("relation") == "isomorphic");
    CHECK(j.at("witness").is_array());
}

TEST_CASE("gassmann reports the Fano pair") {
    RunResult r = run_cli("gassmann --group " + data_file("fano_group.json") +
                          " --h1 " + data_file("fano_point_stabilizer.json") +
                          " --h2 " + data_file("fano_plane_stabilizer.json"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("gassmann") == true);
    CHECK(j.at("conjugate") == false);
    CHECK(j.at("group_order") == 168);
    CHECK(j.at("h1_order") == 24);
    CHECK(j.at("h2_order") == 24);
    CHECK(j.at("classes").size() == 6);
}

TEST_CASE("schreier, spectrum, and compare chain together") {
    const std::string x1 = "/tmp/isospec_cli_test_x1.json";
    const std::string x2 = "/tmp/isospec_cli_test_x2.json";
    RunResult r1 = run_cli("schreier --group " + data_file("fano_group.json") +
                           " --h " + data_file("fano_point_stabilizer.json") +
                           " --gens " + data_file("fano_gens.json") +
                           " --output " + x1);
    REQUIRE(r1.exit_code == 0);
    RunResult r2 = run_cli("schreier --group " + data_file("fano_group.json") +
                           " --h " + data_file("fano_plane_stabilizer.json") +
                           " --gens " + data_file("fano_gens.json") +
                           " --output " + x2);
    REQUIRE(r2.exit_code == 0);

    std::ifstream in1(x1);
    json g1 = json::parse(in1);
    CHECK(g1.at("vertex_count") == 7);

    RunResult spec = run_cli("spectrum --graph " + x1);
    REQUIRE(spec.exit_code == 0);
    json sj = json::parse(spec.out);
    CHECK(sj.at("char_poly").at("pretty") ==
          "x^7 - 4*x^6 - 14*x^5 + 52*x^4 + 57*x^3 - 144*x^2 - 92*x + 48");
    CHECK(sj.at("eigenvalues_display").size() == 7);

    RunResult cmp = run_cli("compare --g1 " + x1 + " --g2 " + x2);
    REQUIRE(cmp.exit_code == 0);
    json cj = json::parse(cmp.out);
    CHECK(cj.at("isospectral") == true);
    CHECK(cj.at("isomorphic") == "no");
}

TEST_CASE("ISOSPEC_NODE_CAP caps the isomorphism search") {
    // two relabelings of the 8-cycle: isospectral and vertex-transitive, so
    // refinement alone cannot decide and a zero cap forces `undetermined`
    json adjacency = json::array();
    auto cycle = [](const std::vector<int>& order) {
        json m = json::array();
        for (int i = 0; i < 8; ++i) {
            json row = json::array();
            for (int k = 0; k < 8; ++k) row.push_back(0);
            m.push_back(row);
        }
        for (int i = 0; i < 8; ++i) {
            int a = order[i];
            int b = order[(i + 1) % 8];
            m[a][b] = m[a][b].get<int>() + 1;
            m[b][a] = m[b][a].get<int>() + 1;
        }
        return m;
    };
    const std::string g1 =
        write_temp("cycle8a.json", {{"adjacency", cycle({0, 1, 2, 3, 4, 5, 6, 7})}});
    const std::string g2 =
        write_temp("cycle8b.json", {{"adjacency", cycle({3, 6, 1, 4, 7, 2, 5, 0})}});

    RunResult capped =
        run_cli("compare --g1 " + g1 + " --g2 " + g2, "ISOSPEC_NODE_CAP=0 ");
    REQUIRE(capped.exit_code == 0);
    json cj = json::parse(capped.out);
    CHECK(cj.at("isospectral") == true);
    CHECK(cj.at("isomorphic") == "undetermined");

    RunResult uncapped = run_cli("compare --g1 " + g1 + " --g2 " + g2);
    REQUIRE(uncapped.exit_code == 0);
    CHECK(json::parse(uncapped.out).at("isomorphic") == "yes");
}

TEST_CASE("demo runs the full pipeline") {
    RunResult r = run_cli("demo");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("gassmann").at("gassmann") == true);
    CHECK(j.at("conjugate") == false);
    CHECK(j.at("isospectral") == true);
    CHECK(j.at("isomorphism").at("isomorphic") == "no");
    CHECK(j.at("family_check").at("ok") == true);
    CHECK(j.at("char_poly_x1") == j.at("char_poly_x2"));
    CHECK(j.at("schreier").at("x1").at("vertex_count") == 7);
}

TEST_CASE("corrupted demo fails loudly") {
    RunResult r = run_cli("demo --corrupt");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j.at("pass") == false);
}

TEST_CASE("missing input files are domain errors, not crashes") {
    RunResult r = run_cli("spectrum --graph /tmp/isospec_no_such_file.json");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j.contains("error"));
}
