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

#include "seqsnr/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqsnr/channel.hpp"
#include "seqsnr/format.hpp"
#include "seqsnr/gradient.hpp"
#include "seqsnr/oracle.hpp"
#include "seqsnr/parallel.hpp"
#include "seqsnr/report.hpp"
#include "seqsnr/sequence_set.hpp"
#include "seqsnr/verify.hpp"

namespace seqsnr {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
    std::string family = "random_phase";
    std::size_t n = 8;
    std::size_t users = 1;
    std::uint64_t seed = 0;
    std::uint64_t root = 1;
    std::string input;
    std::string channel;
    std::string out;
    std::string format = "json";
    std::size_t trials = 20;
    double tol = 1e-9;
    double grad_tol = 1e-6;
    double eps = 1e-5;
    double floor = 1e-12;
    std::size_t user = 0;
};

bool same_file(const std::string& a, const std::string& b) {
    if (a.empty() || b.empty()) return false;
    return fs::weakly_canonical(a) == fs::weakly_canonical(b);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    GeneratorSpec spec{parse_family(cfg.family), cfg.n, cfg.root, cfg.seed};
    const SequenceSet set = generate(spec, cfg.users);
    write_text(cfg.out, serialize_sequence_set(set), out);
    return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    if (same_file(cfg.out, cfg.input) || same_file(cfg.out, cfg.channel))
        throw std::invalid_argument("--out must differ from the input files");
    if (cfg.format != "json" && cfg.format != "csv") throw std::invalid_argument("--format must be json or csv");
    const SequenceSet set = load_sequence_set(cfg.input);
    const ChannelProfile channel = load_channel(cfg.channel);
    const SnrReport report = analyze(set, channel, thread_count_from_env());

    ReportMeta meta;
    meta.seed = cfg.seed;
    meta.config = {{"command", "analyze"}, {"input", cfg.input}, {"channel", cfg.channel}, {"format", cfg.format}};
    write_text(cfg.out, cfg.format == "csv" ? report_csv(report, meta) : report_json(report, meta), out);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyConfig vc{cfg.n, cfg.users, cfg.trials, cfg.seed, cfg.tol, cfg.grad_tol, cfg.eps};
    const VerifyResult result = run_verification(vc);
    out << std::setprecision(3);
    for (const auto& c : result.checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.name << " worst=" << c.worst
            << " tol=" << c.tolerance << " at seed=" << c.seed << " i=" << c.i << " k=" << c.k << '\n';
    }
    out << (result.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
    return result.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_grad_check(const RunConfig& cfg, std::ostream& out) {
    if (!(cfg.eps > 0.0) || !(cfg.grad_tol > 0.0)) throw std::invalid_argument("--eps and --tol must be positive");
    const SequenceSet set = load_sequence_set(cfg.input);
    const ChannelProfile channel = load_channel(cfg.channel);
    channel.require_users(set.users());
    if (cfg.user >= set.users()) throw std::invalid_argument("--user out of range");
    const BracketWeights w = BracketWeights::from(cfg.user, channel, set.users());
    const ParamVector params = split_params(set);

    bool ok = true;
    out << std::setprecision(3);
    for (std::size_t j = 0; j < set.users(); ++j) {
        const double ep = oracle::max_relative_error(oracle::flatten(grad_params(params, cfg.user, w, j)),
                                                     oracle::flatten(oracle::fd_grad_params(params, cfg.user, w, j, cfg.eps)),
                                                     cfg.floor);
        const double es =
            oracle::max_relative_error(oracle::flatten(grad_sequence(set, cfg.user, w, j)),
                                       oracle::flatten(oracle::fd_grad_sequence(set.sequences(), cfg.user, w, j, cfg.eps)),
                                       cfg.floor);
        const bool pass = ep <= cfg.grad_tol && es <= cfg.grad_tol;
        ok = ok && pass;
        out << (pass ? "PASS" : "FAIL") << " user=" << cfg.user << " wrt=" << j << " params_rel_err=" << ep
            << " sequence_rel_err=" << es << '\n';
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form SNR bounds and correlation analysis for CDMA spreading-sequence sets", "seqsnr"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(SEQSNR_VERSION));
    RunConfig cfg;

    auto* gen = app.add_subcommand("generate", "Generate a normalized sequence set");
    gen->add_option("--family", cfg.family, "all_ones | random_phase | random_binary | zadoff_chu")->required();
    gen->add_option("--n", cfg.n, "Sequence length N")->required()->check(CLI::Range(2, 1 << 20));
    gen->add_option("--users", cfg.users, "Number of users K")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", cfg.seed, "RNG seed")->required();
    gen->add_option("--root", cfg.root, "Zadoff-Chu root (coprime to N)");
    gen->add_option("--out", cfg.out, "Output sequence file")->required();

    auto* ana = app.add_subcommand("analyze", "Write one SNR report row per user");
    ana->add_option("--input", cfg.input, "Sequence file")->required()->check(CLI::ExistingFile);
    ana->add_option("--channel", cfg.channel, "Channel file")->required()->check(CLI::ExistingFile);
    ana->add_option("--format", cfg.format, "json | csv");
    ana->add_option("--out", cfg.out, "Report file (default: stdout)");
    ana->add_option("--seed", cfg.seed, "Seed recorded in the report");

    auto* ver = app.add_subcommand("verify", "Check closed forms against the brute-force oracles");
    ver->add_option("--n", cfg.n, "Sequence length N")->check(CLI::Range(2, 4096));
    ver->add_option("--users", cfg.users, "Number of users K")->check(CLI::PositiveNumber);
    ver->add_option("--trials", cfg.trials, "Seeded trials")->check(CLI::PositiveNumber);
    ver->add_option("--seed", cfg.seed, "First trial seed");
    ver->add_option("--tol", cfg.tol, "Identity and oracle tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--grad-tol", cfg.grad_tol, "Gradient relative tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--eps", cfg.eps, "Finite-difference step")->check(CLI::PositiveNumber);

    auto* grad = app.add_subcommand("grad-check", "Compare analytic and finite-difference gradients");
    grad->add_option("--input", cfg.input, "Sequence file")->required()->check(CLI::ExistingFile);
    grad->add_option("--channel", cfg.channel, "Channel file")->required()->check(CLI::ExistingFile);
    grad->add_option("--user", cfg.user, "User whose SNR bracket is differentiated");
    grad->add_option("--eps", cfg.eps, "Finite-difference step")->check(CLI::PositiveNumber);
    grad->add_option("--tol", cfg.grad_tol, "Relative tolerance")->check(CLI::PositiveNumber);
    grad->add_option("--floor", cfg.floor, "Denominator floor of the relative error")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (*gen) return cmd_generate(cfg, out);
        if (*ana) return cmd_analyze(cfg, out);
        if (*ver) return cmd_verify(cfg, out);
        if (*grad) return cmd_grad_check(cfg, out);
    } catch (const std::exception& e) {
        err << "seqsnr: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace seqsnr
