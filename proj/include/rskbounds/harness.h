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

#ifndef RSKBOUNDS_HARNESS_H
#define RSKBOUNDS_HARNESS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rskbounds/bounds.h"
#include "rskbounds/partitions.h"
#include "rskbounds/sampling.h"

namespace rskbounds {

/// Process exit codes of the command line tool.
enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,
    kExitInconclusive = 2,
    kExitUsage = 3,
};

/// Raised for malformed configs and unknown ids; maps to kExitUsage.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Deterministic verification suites.
// ---------------------------------------------------------------------------

struct VerifyOptions {
    size_t max_n = 8;
    size_t max_d = 3;
    /// Extra randomized instances for suites that have them.
    uint64_t random_trials = 0;
    /// Longest random word or permutation.
    size_t random_max_n = 60;
    /// Largest bump row for lower-row-majorization.
    size_t max_k = 3;
    uint64_t seed = 0;
};

struct VerifyReport {
    std::string suite;
    uint64_t checked = 0;
    uint64_t failures = 0;
    /// First failing instance, verbatim.
    std::string counterexample;
    /// Largest deviation seen, for suites comparing real numbers.
    std::optional<double> max_abs_error;
    double seconds = 0;

    bool passed() const {
        return failures == 0;
    }
};

/// schensted, greene, lipschitz, lower-row-majorization,
/// restriction-majorization, viennot, modmult-identity, excess-monotone,
/// distance-inequalities, rearrangement.
const std::vector<std::string> &suite_names();
/// Throws ConfigError for an unknown suite.
VerifyReport run_suite(std::string_view suite, const VerifyOptions &options);

/// Distinct-alpha distributions of length d used by the exact suites.
std::vector<SortedDist> distinct_alpha_grid(size_t d);

// ---------------------------------------------------------------------------
// Experiments.
// ---------------------------------------------------------------------------

/// How a distribution is named in a config.
struct AlphaSpec {
    enum class Kind { kExplicit, kUniform, kZipf, kDirichlet };
    Kind kind = Kind::kUniform;
    std::vector<double> probs;
    size_t d = 1;
    double s = 1;
    double concentration = 1;
    uint64_t seed = 0;

    SortedDist resolve() const;
    std::string describe() const;
};

struct ExperimentConfig {
    std::string experiment_id;
    std::vector<AlphaSpec> alphas;
    std::optional<AlphaSpec> beta;
    std::vector<size_t> n_sweep;
    /// Empty means every row the experiment supports.
    std::vector<size_t> k_values;
    std::string metric;
    uint64_t budget = 10'000;
    uint64_t max_budget = 1'000'000;
    uint64_t seed = 0;
    EvalMode mode = EvalMode::kAuto;
    EnumerationLimits limits;
    std::string output_path;
    /// The parsed document, echoed into the JSON sidecar.
    std::string source_json;
};

/// Experiment ids accepted by `experiment` and `table`.
const std::vector<std::string> &experiment_ids();

/// Parses the JSON config text. Throws ConfigError.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string &path);

struct ReportRow {
    std::string alpha;
    uint64_t seed = 0;
    BoundCheck check;
    double seconds = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ReportRow> rows;

    size_t count(Verdict v) const;
    /// 1 if any row failed, else 2 if any was inconclusive, else 0.
    int exit_code() const;
};

/// Runs every (alpha, n, k) point of the config, `jobs` points at a time.
/// Point i draws from stream i, so output does not depend on `jobs`.
ExperimentReport run_experiment(const ExperimentConfig &config, unsigned jobs = 1);

/// Shortest decimal that round-trips; "inf", "-inf" or "nan" otherwise.
std::string format_real(double x);

/// CSV with columns n,k,estimate,ci,bound,mode,samples,seed,verdict.
/// Two-sided checks print the bound as "lower:upper".
void write_csv(const ExperimentReport &report, std::ostream &out);
/// Config echo, resolved distributions, rows with timings, verdict summary.
std::string report_json(const ExperimentReport &report);
/// Aligned text table with an alpha column, for the `table` command.
void write_table(const ExperimentReport &report, std::ostream &out);

}  // namespace rskbounds

#endif
