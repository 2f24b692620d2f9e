// SPDX-License-Identifier: Apache-2.0
//
// seqsnr - SNR bounds and correlation analysis for CDMA spreading sequences
// Copyright (C) 2026 The seqsnr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "seqsnr/cli.hpp"
#include "seqsnr/parallel.hpp"
#include "seqsnr/report.hpp"
#include "seqsnr/snr_model.hpp"

using namespace seqsnr;
using namespace seqsnr::testing;
using Catch::Matchers::ContainsSubstring;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "seqsnr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "seqsnr_cli_test";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("analyze rows agree with the model")
{
    const SequenceSet set = generate({Family::random_phase, 8, 1, 2}, 3);
    ChannelProfile ch = flat_channel(3, 0.1, 0.5);
    const SnrReport r = analyze(set, ch);
    REQUIRE(r.users.size() == 3);
    for (const UserReport& u : r.users) {
        CHECK(u.s_sums.size() == 3);
        for (double s : u.s_sums) CHECK(s >= 0.0);
        CHECK(u.snr_lower == snr_lower_bound(set, u.user, ch));
        CHECK(u.snr_lower_db == Catch::Approx(20.0 * std::log10(u.snr_lower)));
        CHECK(u.sandwich_lower <= u.snr_lower * (1 + 1e-9));
        CHECK(u.snr_lower <= u.sandwich_upper * (1 + 1e-9));
        CHECK(u.r_cc.has_value());
    }
}

TEST_CASE("report output does not depend on the thread count")
{
    const SequenceSet set = generate({Family::random_phase, 16, 1, 3}, 6);
    const ChannelProfile ch = flat_channel(6, 0.2, 0.4);
    const ReportMeta meta;
    const std::string one = report_json(analyze(set, ch, 1), meta);
    CHECK(report_json(analyze(set, ch, 4), meta) == one);
    CHECK(report_csv(analyze(set, ch, 3), meta) == report_csv(analyze(set, ch, 1), meta));
}

TEST_CASE("SEQSNR_THREADS parsing")
{
    ::unsetenv("SEQSNR_THREADS");
    CHECK(thread_count_from_env() == 1);
    ::setenv("SEQSNR_THREADS", "3", 1);
    CHECK(thread_count_from_env() == 3);
    ::setenv("SEQSNR_THREADS", "zero", 1);
    CHECK_THROWS_AS(thread_count_from_env(), std::invalid_argument);
    ::setenv("SEQSNR_THREADS", "0", 1);
    CHECK_THROWS_AS(thread_count_from_env(), std::invalid_argument);
    ::unsetenv("SEQSNR_THREADS");
}

TEST_CASE("parallel_for visits every index and rethrows")
{
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }),
                    std::runtime_error);
}

TEST_CASE("JSON and CSV reports carry provenance")
{
    const SequenceSet set = generate({Family::all_ones, 4, 1, 0}, 1);
    const SnrReport r = analyze(set, flat_channel(1, 0.5));
    ReportMeta meta;
    meta.seed = 17;
    meta.config = {{"format", "json"}};
    const auto doc = nlohmann::json::parse(report_json(r, meta));
    CHECK(doc["tool"] == "seqsnr");
    CHECK(doc["seed"] == 17);
    CHECK(doc["config"]["format"] == "json");
    CHECK(doc["users"][0]["r_cc"].is_null());
    CHECK(doc["users"][0]["r_ac"].get<double>() == Catch::Approx(1.75).epsilon(1e-12));

    const std::string csv = report_csv(r, meta);
    CHECK_THAT(csv, ContainsSubstring("# tool=seqsnr"));
    CHECK_THAT(csv, ContainsSubstring("user,s_sum_0,var_interference"));
}

TEST_CASE("cli: generate then analyze noise-only gives SNR 1")
{
    const fs::path dir = scratch();
    const fs::path seq = dir / "ones.json", ch = dir / "noise.json";
    REQUIRE(cli({"generate", "--family", "all_ones", "--n", "4", "--users", "1", "--seed", "0", "--out",
                 seq.string()}).code == kExitOk);
    // N0/(2PT) = 1
    write_file(ch, R"({"p": 1, "t": 1, "n0": 2, "users": [{"gamma": 0, "c": 1, "m": 1}]})");
    const CliRun r = cli({"analyze", "--input", seq.string(), "--channel", ch.string()});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["users"][0]["snr_lower"].get<double>() == Catch::Approx(1.0).epsilon(1e-12));

    const fs::path csv = dir / "report.csv";
    CHECK(cli({"analyze", "--input", seq.string(), "--channel", ch.string(), "--format", "csv", "--out",
               csv.string()}).code == kExitOk);
    CHECK_THAT(read_file(csv), ContainsSubstring("snr_lower_db"));
}

TEST_CASE("cli: input errors exit 2")
{
    const fs::path dir = scratch();
    const fs::path seq = dir / "zc.json", ch = dir / "bad.json";
    REQUIRE(cli({"generate", "--family", "zadoff_chu", "--n", "7", "--users", "2", "--seed", "0", "--out",
                 seq.string()}).code == kExitOk);
    write_file(ch, R"({"p": 1, "t": 1, "n0": 0.1, "users": [{"gamma": 0, "m": 1}, {"gamma": 0, "c": 1, "m": 1}]})");
    CliRun r = cli({"analyze", "--input", seq.string(), "--channel", ch.string()});
    CHECK(r.code == kExitInputError);
    CHECK_THAT(r.err, ContainsSubstring("'c'"));

    // too few channel users
    write_file(ch, R"({"p": 1, "t": 1, "n0": 0.1, "users": [{"gamma": 0, "c": 1, "m": 1}]})");
    CHECK(cli({"analyze", "--input", seq.string(), "--channel", ch.string()}).code == kExitInputError);
    // output would clobber the input
    CHECK(cli({"analyze", "--input", seq.string(), "--channel", ch.string(), "--out", seq.string()}).code ==
          kExitInputError);
    // unnormalized sequence file
    write_file(seq, R"({"n": 2, "k": 1, "sequences": [[[2,0],[1,0]]]})");
    r = cli({"analyze", "--input", seq.string(), "--channel", ch.string()});
    CHECK(r.code == kExitInputError);
    CHECK_THAT(r.err, ContainsSubstring("user 0"));
    CHECK(cli({"analyze", "--input", (dir / "missing.json").string(), "--channel", ch.string()}).code ==
          kExitInputError);
    CHECK(cli({"generate", "--family", "gold", "--n", "4", "--users", "1", "--seed", "0", "--out",
               (dir / "x.json").string()}).code == kExitInputError);
    CHECK(cli({"bogus"}).code == kExitInputError);
    CHECK(cli({}).code == kExitInputError);
}

TEST_CASE("cli: verify and grad-check")
{
    CliRun r = cli({"verify", "--n", "4", "--users", "2", "--trials", "3", "--seed", "5"});
    CHECK(r.code == kExitOk);
    CHECK_THAT(r.out, ContainsSubstring("all checks passed"));

    const fs::path dir = scratch();
    const fs::path seq = dir / "rp.json", ch = dir / "ch.json";
    REQUIRE(cli({"generate", "--family", "random_phase", "--n", "6", "--users", "2", "--seed", "3", "--out",
                 seq.string()}).code == kExitOk);
    write_file(ch, R"({"p": 1, "t": 1, "n0": 0.1, "users": [{"gamma": 0.5, "c": 1, "m": 2}, {"gamma": 0.2, "c": 1, "m": 1}]})");
    r = cli({"grad-check", "--input", seq.string(), "--channel", ch.string(), "--user", "1"});
    CHECK(r.code == kExitOk);
    CHECK_THAT(r.out, ContainsSubstring("PASS user=1 wrt=0"));
    CHECK(cli({"grad-check", "--input", seq.string(), "--channel", ch.string(), "--user", "2"}).code ==
          kExitInputError);
}

TEST_CASE("cli: version and help exit 0")
{
    CliRun r = cli({"--version"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring(SEQSNR_VERSION));
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli: grad-check floor on exactly vanishing components")
{
    // Zadoff-Chu has gradient entries that are zero up to rounding, so the
    // default 1e-12 floor turns ~1e-18 noise into a relative error above 1e-6.
    const fs::path dir = scratch();
    const fs::path seq = dir / "zc7.json", ch = dir / "zc7_ch.json";
    REQUIRE(cli({"generate", "--family", "zadoff_chu", "--n", "7", "--users", "2", "--seed", "0", "--out",
                 seq.string()}).code == kExitOk);
    write_file(ch, R"({"p": 1, "t": 1, "n0": 0.1, "users": [{"gamma": 0.5, "c": 1, "m": 2}, {"gamma": 0.2, "c": 1, "m": 1}]})");
    CHECK(cli({"grad-check", "--input", seq.string(), "--channel", ch.string()}).code == kExitVerificationFailed);
    CHECK(cli({"grad-check", "--input", seq.string(), "--channel", ch.string(), "--floor", "1e-9"}).code == kExitOk);
}
