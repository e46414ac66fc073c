// SPDX-License-Identifier: Apache-2.0
#include <combwalks/cli.hpp>

#include <combwalks/io.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace combwalks;

namespace {

int run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"combwalks"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_main(int(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// The wall-clock line is the only allowed nondeterminism.
std::string strip_wall(std::string s) {
    for (;;) {
        auto pos = s.find("# wall_ms:");
        if (pos == std::string::npos) break;
        auto end = s.find('\n', pos);
        s.erase(pos, end == std::string::npos ? std::string::npos : end - pos + 1);
    }
    auto pos = s.find("\"wall_ms\":");
    if (pos != std::string::npos) {
        auto end = s.find('\n', pos);
        s.erase(pos, end == std::string::npos ? std::string::npos : end - pos + 1);
    }
    return s;
}

struct TempPath {
    std::string path;
    explicit TempPath(const char* name) : path(std::string("cli_test_") + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("verify subcommands succeed on the default ranges") {
    TempPath out("verify_catalan.txt");
    CHECK(run({"verify", "catalan", "--m-max", "4", "--out", out.path.c_str()}) == 0);
    std::string body = slurp(out.path);
    CHECK(body.find("[ok]") != std::string::npos);
    CHECK(body.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"no-such-command"}) == 2);
    CHECK(run({"verify"}) == 2);                       // missing sub-subcommand
    CHECK(run({"--format", "yaml", "verify", "catalan"}) == 2);
    CHECK(run({"compute", "sum"}) == 2);               // missing required --n
    TempPath out("bad_assign.json");
    CHECK(run({"compute", "sum", "--n", "2", "--V", "2=oops",
               "--out", out.path.c_str()}) == 2);
}

TEST_CASE("compute sum emits the exact value") {
    TempPath out("sum.json");
    CHECK(run({"--format", "json", "compute", "sum", "--n", "2", "--steps", "2,4",
               "--V", "2=1/3,4=1/5", "--out", out.path.c_str()}) == 0);
    Json doc = Json::parse(slurp(out.path));
    CHECK(doc["result"]["value"] == "41/180");
    CHECK(doc["result"]["exact"] == true);
    CHECK(doc["result"]["walk_count"] == 2);
}

TEST_CASE("compute sum accepts decimal weights") {
    TempPath out("sum_dec.json");
    CHECK(run({"--format", "json", "compute", "sum", "--n", "2", "--steps", "2,4",
               "--V", "2=0.5,4=-1.25", "--out", out.path.c_str()}) == 0);
    Json doc = Json::parse(slurp(out.path));
    CHECK(doc["result"]["value"] == "-19/16");  // (1/2)^2/4 - 5/4
}

TEST_CASE("compute bkappa flags the empty class") {
    TempPath out("bkappa.json");
    CHECK(run({"--format", "json", "compute", "bkappa", "--n", "4", "--R", "1", "--S", "2",
               "--kappa", "1", "--out", out.path.c_str()}) == 0);
    Json doc = Json::parse(slurp(out.path));
    CHECK(doc["result"]["value"] == "0");
    CHECK(doc["result"]["walk_count"] == 0);
    CHECK(doc["note"] == "empty class");
}

TEST_CASE("compute beta reports the last-layer increment") {
    TempPath out("beta.json");
    CHECK(run({"--format", "json", "compute", "beta", "--n", "2", "--steps", "-4,-2,2,4",
               "--V", "2=1/3,4=1/5", "--L", "2", "--W", "0",
               "--out", out.path.c_str()}) == 0);
    Json doc = Json::parse(slurp(out.path));
    CHECK(doc["result"]["value"] == "41/180");
    CHECK(doc.contains("last_layer_increment"));
}

TEST_CASE("scan output is byte-stable across reruns") {
    // identical command line both times: the manifest echoes the invocation
    TempPath a("q3_rerun.csv");
    CHECK(run({"--format", "csv", "explore", "q3", "--m-min", "1", "--m-max", "3",
               "--out", a.path.c_str()}) == 0);
    std::string first = slurp(a.path);
    CHECK(run({"--format", "csv", "explore", "q3", "--m-min", "1", "--m-max", "3",
               "--out", a.path.c_str()}) == 0);
    CHECK(strip_wall(first) == strip_wall(slurp(a.path)));

    TempPath c("q2_a.json"), d("q2_b.json");
    CHECK(run({"--format", "json", "--seed", "5", "explore", "q2", "--m", "4",
               "--n-min", "2", "--n-max", "4", "--samples", "3",
               "--out", c.path.c_str()}) == 0);
    CHECK(run({"--format", "json", "--seed", "5", "--jobs", "3", "explore", "q2", "--m", "4",
               "--n-min", "2", "--n-max", "4", "--samples", "3",
               "--out", d.path.c_str()}) == 0);
    Json da = Json::parse(slurp(c.path));
    Json db = Json::parse(slurp(d.path));
    CHECK(da["rows"] == db["rows"]);  // worker count never changes the data
}

TEST_CASE("explore prop3 runs end to end") {
    TempPath out("prop3.csv");
    CHECK(run({"--format", "csv", "explore", "prop3", "--m", "4", "--n-min", "4",
               "--n-max", "6", "--V", "2=1/3,4=1/7", "--L", "12", "--W", "4",
               "--out", out.path.c_str()}) == 0);
    std::string body = slurp(out.path);
    CHECK(body.find("ratio_asc") != std::string::npos);
    CHECK(body.find("\n4,") != std::string::npos);
}
