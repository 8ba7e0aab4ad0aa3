// Copyright 2026 The poincare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include "json.hpp"

#include "test_util.h"

namespace {

using namespace ptest;
using nlohmann::json;
namespace fs = std::filesystem;

struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::string &args) {
    std::string cmd = std::string(POINCARE_CLI) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, n);
    }
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("poincare_cli_" + std::to_string(getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string &name) const { return (dir_ / name).string(); }

    std::string write_state(const std::string &name, const PolarizationSector &s) const {
        save_state(file(name), s);
        return file(name);
    }

    fs::path dir_;
};

TEST_F(Cli, DegreeMatchesLibrary) {
    std::string st = write_state("coh.json", PolarizationSector::single(su2_coherent(HalfSpin(2), Direction{0.3, 1})));
    CliResult r = run("degree --kind hs --state " + st);
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_NEAR(j["result"]["value"].get<double>(), 2.0 / 3, 1e-15);
    EXPECT_EQ(j["result"]["kind"], "hilbert_schmidt");
    EXPECT_EQ(j["meta"]["version"], kVersion);
    EXPECT_EQ(j["meta"]["seed"], 1);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("degree --kind hs").code, 2);
    EXPECT_EQ(run("degree --kind hs --state x.json --bogus").code, 2);
    EXPECT_EQ(run("degree --kind hs --state " + file("missing.json")).code, 1);
    write_file(file("bad.json"), R"({"twice_spin": 1, "amplitudes": [[1, 0]]})");
    EXPECT_EQ(run("validate --state " + file("bad.json")).code, 1);
    std::string unp = write_state("u.json", PolarizationSector::single(unpolarized(HalfSpin(2))));
    EXPECT_EQ(run("degree --kind s --state " + unp).code, 0);
    std::string vac = write_state("v.json", PolarizationSector::single(fock_layer(HalfSpin(0), 0)));
    EXPECT_EQ(run("degree --kind s --state " + vac).code, 1);
    EXPECT_EQ(run("qfunc --state " + unp + " --grid 3y4 --out " + file("q.csv")).code, 2);
}

TEST_F(Cli, SchemaErrorReportsLocation) {
    write_file(file("bad.json"), R"({"layers": [{"twice_spin": 1, "weight": 1, "rho": [[[1, 0]]]}]})");
    std::string cmd = std::string(POINCARE_CLI) + " validate --state " + file("bad.json") + " 2>&1";
    FILE *p = popen(cmd.c_str(), "r");
    char buf[4096] = {0};
    size_t n = fread(buf, 1, sizeof buf - 1, p);
    buf[n] = 0;
    EXPECT_EQ(WEXITSTATUS(pclose(p)), 1);
    EXPECT_NE(std::string(buf).find("/layers/0/rho"), std::string::npos) << buf;
}

TEST_F(Cli, QfuncIsNormalized) {
    std::string st = write_state("noon.json", PolarizationSector::single(noon(HalfSpin(4))));
    CliResult r = run("qfunc --state " + st + " --grid 64x128 --out " + file("q.csv"));
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(json::parse(r.out)["result"]["integral_over_4pi"].get<double>(), 1, 1e-10);
    std::vector<double> v = parse_q_csv(read_file(file("q.csv")));
    EXPECT_EQ(v.size(), 64u * 128u);
    std::string sec = write_state("tmsv.json", tmsv_sector(0.5));
    CliResult t = run("qfunc --state " + sec + " --grid 32x64 --out " + file("t.csv"));
    EXPECT_NEAR(json::parse(t.out)["result"]["integral_over_4pi"].get<double>(), 1, 1e-10);
}

TEST_F(Cli, StateRoundTripIsByteIdentical) {
    Rng rng(1);
    for (const auto &sec : {random_sector(3, rng), PolarizationSector::single(random_pure(HalfSpin(5), rng)),
                            two_mode_coherent_sector(cplx(0.5, 0.2), cplx(-0.1, 0.3))}) {
        std::string in = write_state("in.json", sec);
        ASSERT_EQ(run("kerr --chi-t 0 --state " + in + " --out " + file("out.json")).code, 0);
        EXPECT_EQ(read_file(file("out.json")), read_file(in));
    }
}

TEST_F(Cli, SeedFixesStochasticOutput) {
    Rng rng(2);
    std::string st = write_state("s.json", PolarizationSector::single(random_mixed(HalfSpin(3), 2, rng)));
    ASSERT_EQ(run("tomo simulate --state " + st + " --shots 500 --seed 5 --out " + file("a.csv")).code, 0);
    ASSERT_EQ(run("tomo simulate --state " + st + " --shots 500 --seed 5 --out " + file("b.csv")).code, 0);
    ASSERT_EQ(run("tomo simulate --state " + st + " --shots 500 --seed 6 --out " + file("c.csv")).code, 0);
    EXPECT_EQ(read_file(file("a.csv")), read_file(file("b.csv")));
    EXPECT_NE(read_file(file("a.csv")), read_file(file("c.csv")));
    CliResult r1 = run("kings search --twice-spin 3 --order 1 --restarts 4 --seed 3");
    CliResult r2 = run("kings search --twice-spin 3 --order 1 --restarts 4 --seed 3");
    EXPECT_EQ(r1.code, 0);
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_TRUE(json::parse(r1.out)["result"]["certified"].get<bool>());
}

TEST_F(Cli, TomographyRoundTrip) {
    std::string st = write_state("f.json", PolarizationSector::single(fock_layer(HalfSpin(2), 0)));
    ASSERT_EQ(run("tomo simulate --state " + st + " --shots 200000 --out " + file("t.csv")).code, 0);
    CliResult r = run("tomo reconstruct --tomograms " + file("t.csv"));
    ASSERT_EQ(r.code, 0);
    json res = json::parse(r.out)["result"];
    MultipoleTable t = parse_multipoles(res.dump());
    EXPECT_NEAR(t.at(2, 0).real(), -std::sqrt(2.0 / 3), 0.02);
    EXPECT_LT(std::sqrt(t.rank_norm(1)), 0.02);
}

TEST_F(Cli, KingsVerify) {
    CliResult r = run("kings verify --table1");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out)["result"];
    EXPECT_TRUE(j["all_pass"].get<bool>());
    EXPECT_EQ(j["rows"].size(), 13u);
}

TEST_F(Cli, MajoranaBothWays) {
    std::string st = write_state("n.json", PolarizationSector::single(noon(HalfSpin(3))));
    CliResult r = run("majorana --state " + st + " --out " + file("c.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["result"]["points"].size(), 3u);
    CliResult back = run("majorana --points " + file("c.json"));
    ASSERT_EQ(back.code, 0);
    PolarizationSector s = parse_state(json::parse(back.out)["result"]["state"].dump());
    EXPECT_NEAR(std::norm(s.layers()[0].state.ket().dot(noon(HalfSpin(3)).ket())), 1, 1e-10);
    EXPECT_EQ(run("majorana").code, 2);
}

TEST_F(Cli, OtherSubcommandsRun) {
    std::string st = write_state("c.json", PolarizationSector::single(su2_coherent(HalfSpin(2), Direction{})));
    EXPECT_EQ(run("multipoles --state " + st).code, 0);
    CliResult tr = run("transform --state " + st + " --axis 1.5707963267948966,0 --angle 1.5707963267948966");
    ASSERT_EQ(tr.code, 0);
    EXPECT_NEAR(json::parse(tr.out)["result"]["rotation"][2][1].get<double>(), 1, 1e-15);
    CliResult cl = run("classical --jones 0.7071067811865476,0,0.7071067811865476,0");
    ASSERT_EQ(cl.code, 0);
    EXPECT_EQ(run("classical --stokes 1,0.5,0,0").code, 0);
    EXPECT_EQ(run("classical --stokes 1,2,0,0").code, 1);
    EXPECT_EQ(run("validate --state " + st).code, 0);
}

}  // namespace
