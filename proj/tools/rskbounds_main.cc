// Copyright 2026 The rskbounds Authors
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

// Command line front end: verify, experiment, table.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rskbounds/harness.h"

using namespace rskbounds;

namespace {

constexpr const char *kSeedEnv = "RSKBOUNDS_SEED";

// --seed beats the environment, which beats the config file.
std::optional<uint64_t> seed_override(const std::optional<uint64_t> &flag) {
    if (flag) {
        return flag;
    }
    if (const char *env = std::getenv(kSeedEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw ConfigError(std::string(kSeedEnv) + " is not an unsigned integer");
        }
    }
    return std::nullopt;
}

int print_verify(const VerifyReport &r) {
    std::cout << "suite=" << r.suite << " checked=" << r.checked << " failures=" << r.failures;
    if (r.max_abs_error) {
        std::cout << " max_abs_error=" << format_real(*r.max_abs_error);
    }
    std::cout << " status=" << (r.passed() ? "pass" : "fail") << '\n';
    if (!r.passed()) {
        std::cout << "counterexample: " << r.counterexample << '\n';
    }
    std::cerr << "[verify] " << r.suite << " finished in " << r.seconds << "s\n";
    return r.passed() ? kExitPass : kExitFail;
}

void log_summary(const ExperimentReport &report) {
    std::cerr << "[experiment] " << report.config.experiment_id << ": " << report.rows.size() << " points, "
              << report.count(Verdict::kPass) << " pass, " << report.count(Verdict::kFail) << " fail, "
              << report.count(Verdict::kInconclusive) << " inconclusive\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"RSK shapes, Schur-Weyl sampling and checks of their expectation bounds"};
    app.require_subcommand(1);

    std::optional<uint64_t> seed_flag;
    unsigned jobs = 1;
    app.add_option("--seed", seed_flag, "RNG seed; overrides the config and " + std::string(kSeedEnv));
    app.add_option("--jobs", jobs, "Worker threads for experiment points")->check(CLI::PositiveNumber);

    VerifyOptions verify_options;
    std::string suite;
    auto *verify = app.add_subcommand("verify", "Run an exhaustive or randomized deterministic suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", verify_options.max_n, "Largest word length enumerated");
    verify->add_option("--max-d", verify_options.max_d, "Alphabet size (or largest dimension)");
    verify->add_option("--random", verify_options.random_trials, "Extra random instances");
    verify->add_option("--random-max-n", verify_options.random_max_n, "Longest random instance");
    verify->add_option("--max-k", verify_options.max_k, "Largest bump row for lower-row-majorization");

    std::string config_path;
    std::string output_override;
    auto *experiment = app.add_subcommand("experiment", "Run a Monte Carlo or exact experiment from a JSON config");
    experiment->add_option("config", config_path, "Config file")->required();
    experiment->add_option("--output", output_override, "CSV path; a .json sidecar is written next to it");

    std::string theorem;
    std::string table_config_path;
    auto *table = app.add_subcommand("table", "Tabulate one bound across the config's grid");
    table->add_option("theorem", theorem, "Experiment id, or distance:<metric>")->required();
    table->add_option("config", table_config_path, "Config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::optional<uint64_t> seed = seed_override(seed_flag);
        if (verify->parsed()) {
            verify_options.seed = seed.value_or(0);
            return print_verify(run_suite(suite, verify_options));
        }
        if (experiment->parsed()) {
            ExperimentConfig config = load_config(config_path);
            if (seed) {
                config.seed = *seed;
            }
            if (!output_override.empty()) {
                config.output_path = output_override;
            }
            ExperimentReport report = run_experiment(config, jobs);
            if (config.output_path.empty()) {
                write_csv(report, std::cout);
            } else {
                std::ofstream csv(config.output_path, std::ios::binary);
                std::ofstream sidecar(config.output_path + ".json", std::ios::binary);
                if (!csv || !sidecar) {
                    std::cerr << "error: cannot write " << config.output_path << '\n';
                    return kExitUsage;
                }
                write_csv(report, csv);
                sidecar << report_json(report) << '\n';
            }
            log_summary(report);
            return report.exit_code();
        }
        if (table->parsed()) {
            ExperimentConfig config = load_config(table_config_path);
            if (seed) {
                config.seed = *seed;
            }
            config.experiment_id = theorem;
            if (auto colon = theorem.find(':'); colon != std::string::npos) {
                config.experiment_id = theorem.substr(0, colon);
                config.metric = theorem.substr(colon + 1);
            }
            ExperimentReport report = run_experiment(config, jobs);
            write_table(report, std::cout);
            log_summary(report);
            return report.exit_code();
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
