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

#include "rskbounds/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rskbounds/rng.h"

namespace rskbounds {

using nlohmann::json;

SortedDist AlphaSpec::resolve() const {
    switch (kind) {
        case Kind::kExplicit:
            return SortedDist::from_unsorted(probs);
        case Kind::kUniform:
            return SortedDist::uniform(d);
        case Kind::kZipf:
            return SortedDist::zipf(d, s);
        case Kind::kDirichlet: {
            if (d == 0 || !(concentration > 0)) {
                throw ConfigError("dirichlet: need d >= 1 and concentration > 0");
            }
            Rng rng(seed);
            std::gamma_distribution<double> gamma(concentration, 1.0);
            std::vector<double> x(d);
            double total = 0;
            for (auto &v : x) {
                v = gamma(rng);
                total += v;
            }
            for (auto &v : x) {
                v /= total;
            }
            std::sort(x.begin(), x.end(), std::greater<>());
            // Push the rounding residue into the top entry so the total is exactly 1 within tolerance.
            double residue = 1.0;
            for (double v : x) {
                residue -= v;
            }
            x[0] += residue;
            return SortedDist(std::move(x));
        }
    }
    throw ConfigError("bad alpha kind");
}

std::string AlphaSpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::kExplicit:
            out << "explicit(";
            for (size_t i = 0; i < probs.size(); i++) {
                out << (i ? " " : "") << format_real(probs[i]);
            }
            out << ")";
            break;
        case Kind::kUniform:
            out << "uniform(" << d << ")";
            break;
        case Kind::kZipf:
            out << "zipf(" << d << "," << format_real(s) << ")";
            break;
        case Kind::kDirichlet:
            out << "dirichlet(" << d << "," << format_real(concentration) << "," << seed << ")";
            break;
    }
    return out.str();
}

const std::vector<std::string> &experiment_ids() {
    static const std::vector<std::string> kIds = {
        "excess",     "row-mean",     "row-mean-sharp", "top-row", "bottom-row",     "variance",
        "mean-squared", "distance",   "entropy-bias",   "coupling", "plancherel-lis", "prefix-excess",
    };
    return kIds;
}

namespace {

bool needs_alpha(const std::string &id) {
    return id != "plancherel-lis";
}

AlphaSpec parse_alpha(const json &j) {
    AlphaSpec spec;
    if (j.is_array()) {
        spec.kind = AlphaSpec::Kind::kExplicit;
        spec.probs = j.get<std::vector<double>>();
        spec.d = spec.probs.size();
        return spec;
    }
    if (!j.is_object() || !j.contains("kind")) {
        throw ConfigError("alpha must be an array of probabilities or an object with a \"kind\"");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit") {
        spec.kind = AlphaSpec::Kind::kExplicit;
        spec.probs = j.at("probs").get<std::vector<double>>();
        spec.d = spec.probs.size();
    } else if (kind == "uniform") {
        spec.kind = AlphaSpec::Kind::kUniform;
        spec.d = j.at("d").get<size_t>();
    } else if (kind == "zipf") {
        spec.kind = AlphaSpec::Kind::kZipf;
        spec.d = j.at("d").get<size_t>();
        spec.s = j.value("s", 1.0);
    } else if (kind == "dirichlet") {
        spec.kind = AlphaSpec::Kind::kDirichlet;
        spec.d = j.at("d").get<size_t>();
        spec.concentration = j.value("concentration", 1.0);
        spec.seed = j.value("seed", uint64_t{0});
    } else {
        throw ConfigError("unknown alpha kind '" + kind + "'");
    }
    return spec;
}

template <typename T>
std::vector<T> scalar_or_list(const json &j) {
    if (j.is_array()) {
        return j.get<std::vector<T>>();
    }
    return {j.get<T>()};
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    ExperimentConfig config;
    try {
        config.experiment_id = doc.value("experiment", std::string());
        if (doc.contains("alpha")) {
            config.alphas.push_back(parse_alpha(doc.at("alpha")));
        }
        if (doc.contains("alphas")) {
            for (const auto &a : doc.at("alphas")) {
                config.alphas.push_back(parse_alpha(a));
            }
        }
        if (doc.contains("beta")) {
            config.beta = parse_alpha(doc.at("beta"));
        }
        if (doc.contains("n")) {
            config.n_sweep = scalar_or_list<size_t>(doc.at("n"));
        }
        if (doc.contains("k")) {
            config.k_values = scalar_or_list<size_t>(doc.at("k"));
        }
        config.metric = doc.value("metric", std::string());
        config.budget = doc.value("budget", config.budget);
        config.max_budget = doc.value("max_budget", std::max(config.budget, config.max_budget));
        config.seed = doc.value("seed", uint64_t{0});
        config.mode = parse_mode(doc.value("mode", std::string("auto")));
        config.limits.max_words = doc.value("max_words", config.limits.max_words);
        config.limits.max_histograms = doc.value("max_histograms", config.limits.max_histograms);
        config.output_path = doc.value("output", std::string());
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad config field: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (config.budget < 1) {
        throw ConfigError("budget must be at least 1");
    }
    if (config.max_budget < config.budget) {
        throw ConfigError("max_budget must be at least budget");
    }
    for (size_t n : config.n_sweep) {
        if (n == 0) {
            throw ConfigError("n values must be positive");
        }
    }
    config.source_json = doc.dump();
    return config;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

size_t ExperimentReport::count(Verdict v) const {
    return static_cast<size_t>(
        std::count_if(rows.begin(), rows.end(), [v](const ReportRow &r) { return r.check.verdict == v; }));
}

int ExperimentReport::exit_code() const {
    if (count(Verdict::kFail) > 0) {
        return kExitFail;
    }
    if (count(Verdict::kInconclusive) > 0) {
        return kExitInconclusive;
    }
    return kExitPass;
}

namespace {

struct Point {
    size_t alpha_index;
    size_t n;
    size_t k;
};

// k values a point list should cover for one alpha.
std::vector<size_t> rows_for(const ExperimentConfig &config, size_t d, bool all_rows) {
    if (!config.k_values.empty()) {
        for (size_t k : config.k_values) {
            if (k < 1 || k > d) {
                throw ConfigError("k = " + std::to_string(k) + " outside [1.." + std::to_string(d) + "]");
            }
        }
        return config.k_values;
    }
    if (!all_rows) {
        return {d};
    }
    std::vector<size_t> ks(d);
    for (size_t k = 1; k <= d; k++) {
        ks[k - 1] = k;
    }
    return ks;
}

BoundCheck run_point(const ExperimentConfig &config, const std::vector<SortedDist> &alphas,
                     const std::optional<SortedDist> &beta, const Point &p, const CheckOptions &options) {
    const std::string &id = config.experiment_id;
    if (id == "plancherel-lis") {
        return plancherel_lis_check(p.n, options);
    }
    const SortedDist &alpha = alphas[p.alpha_index];
    if (id == "excess") {
        return run_check(excess_spec(alpha, p.k, p.n), options);
    }
    if (id == "row-mean") {
        return run_check(row_mean_spec(alpha, p.k, p.n), options);
    }
    if (id == "row-mean-sharp") {
        return run_check(row_mean_sharp_spec(alpha, p.k, p.n), options);
    }
    if (id == "top-row") {
        return run_check(top_row_spec(alpha, p.n), options);
    }
    if (id == "bottom-row") {
        return run_check(bottom_row_spec(alpha, p.n), options);
    }
    if (id == "variance") {
        return run_check(variance_spec(alpha, p.k, p.n), options);
    }
    if (id == "mean-squared") {
        return run_check(mean_squared_spec(alpha, p.k, p.n), options);
    }
    if (id == "distance") {
        return run_check(distance_rate_spec(parse_metric(config.metric), alpha, p.n, p.k), options);
    }
    if (id == "entropy-bias") {
        return run_check(entropy_bias_spec(alpha, p.n), options);
    }
    if (id == "coupling") {
        return coupling_consequence_check(alpha, *beta, p.k, p.n, options);
    }
    if (id == "prefix-excess") {
        return run_check(prefix_excess_spec(alpha, p.k, p.n), options);
    }
    throw ConfigError("unknown experiment '" + id + "'");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig &config, unsigned jobs) {
    const std::string &id = config.experiment_id;
    if (std::find(experiment_ids().begin(), experiment_ids().end(), id) == experiment_ids().end()) {
        throw ConfigError("unknown experiment '" + id + "'");
    }
    std::vector<SortedDist> alphas;
    try {
        for (const auto &spec : config.alphas) {
            alphas.push_back(spec.resolve());
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("bad alpha: ") + e.what());
    }
    std::optional<SortedDist> beta;
    if (id == "coupling") {
        if (!config.beta) {
            throw ConfigError("coupling needs a \"beta\" distribution");
        }
        beta = config.beta->resolve();
    }
    if (id == "distance") {
        try {
            parse_metric(config.metric);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }

    std::vector<Point> points;
    if (!needs_alpha(id)) {
        for (size_t n : config.n_sweep) {
            points.push_back({0, n, 1});
        }
    } else {
        for (size_t a = 0; a < alphas.size(); a++) {
            size_t d = alphas[a].size();
            bool all_rows = id != "top-row" && id != "bottom-row" && id != "entropy-bias" &&
                            !(id == "distance" && !metric_is_truncated(parse_metric(config.metric)));
            std::vector<size_t> ks = rows_for(config, d, all_rows);
            if (id == "top-row") {
                ks = {1};
            }
            for (size_t n : config.n_sweep) {
                for (size_t k : ks) {
                    points.push_back({a, n, k});
                }
            }
        }
    }

    ExperimentReport report;
    report.config = config;
    report.rows.resize(points.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= points.size()) {
                return;
            }
            CheckOptions options;
            options.budget = config.budget;
            options.max_budget = config.max_budget;
            options.seed = config.seed;
            options.stream = i;
            options.mode = config.mode;
            options.limits = config.limits;
            auto start = std::chrono::steady_clock::now();
            try {
                ReportRow &row = report.rows[i];
                row.check = run_point(config, alphas, beta, points[i], options);
                row.alpha = needs_alpha(id) ? config.alphas[points[i].alpha_index].describe() : "plancherel";
                row.seed = config.seed;
                row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(points.size());
                return;
            }
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<size_t>(1, points.size()))));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < workers; t++) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::length_error &e) {
            throw ConfigError(std::string("enumeration cap exceeded: ") + e.what());
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        } catch (const std::out_of_range &e) {
            throw ConfigError(e.what());
        }
    }
    return report;
}

std::string format_real(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

namespace {

std::string bound_field(const BoundCheck &c) {
    if (c.lower) {
        return format_real(*c.lower) + ":" + format_real(c.bound);
    }
    return format_real(c.bound);
}

}  // namespace

void write_csv(const ExperimentReport &report, std::ostream &out) {
    out << "n,k,estimate,ci,bound,mode,samples,seed,verdict\n";
    for (const auto &row : report.rows) {
        const BoundCheck &c = row.check;
        out << c.n << ',' << c.k << ',' << format_real(c.estimate) << ',' << format_real(c.ci_radius) << ','
            << bound_field(c) << ',' << mode_name(c.mode) << ',' << c.samples << ',' << row.seed << ','
            << verdict_name(c.verdict) << '\n';
    }
}

std::string report_json(const ExperimentReport &report) {
    json rows = json::array();
    for (const auto &row : report.rows) {
        const BoundCheck &c = row.check;
        json r = {
            {"theorem", c.theorem_id},
            {"alpha", row.alpha},
            {"n", c.n},
            {"k", c.k},
            {"estimate", format_real(c.estimate)},
            {"ci", format_real(c.ci_radius)},
            {"bound", format_real(c.bound)},
            {"mode", std::string(mode_name(c.mode))},
            {"samples", c.samples},
            {"seed", row.seed},
            {"verdict", std::string(verdict_name(c.verdict))},
            {"wall_time_s", row.seconds},
        };
        if (c.lower) {
            r["lower"] = format_real(*c.lower);
        }
        rows.push_back(std::move(r));
    }
    json alphas = json::array();
    for (const auto &spec : report.config.alphas) {
        alphas.push_back({{"spec", spec.describe()}, {"probs", spec.resolve().vec()}});
    }
    json out = {
        {"config", json::parse(report.config.source_json.empty() ? "{}" : report.config.source_json)},
        {"experiment", report.config.experiment_id},
        {"seed", report.config.seed},
        {"alphas", alphas},
        {"rows", rows},
        {"summary",
         {{"pass", report.count(Verdict::kPass)},
          {"fail", report.count(Verdict::kFail)},
          {"inconclusive", report.count(Verdict::kInconclusive)},
          {"exit_code", report.exit_code()}}},
    };
    return out.dump(2);
}

void write_table(const ExperimentReport &report, std::ostream &out) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"theorem", "alpha", "n", "k", "estimate", "ci", "bound", "mode", "samples", "verdict"});
    for (const auto &row : report.rows) {
        const BoundCheck &c = row.check;
        cells.push_back({c.theorem_id, row.alpha, std::to_string(c.n), std::to_string(c.k), format_real(c.estimate),
                         format_real(c.ci_radius), bound_field(c), std::string(mode_name(c.mode)),
                         std::to_string(c.samples), std::string(verdict_name(c.verdict))});
    }
    std::vector<size_t> widths(cells[0].size(), 0);
    for (const auto &r : cells) {
        for (size_t i = 0; i < r.size(); i++) {
            widths[i] = std::max(widths[i], r[i].size());
        }
    }
    for (const auto &r : cells) {
        for (size_t i = 0; i < r.size(); i++) {
            out << (i ? "  " : "");
            if (i + 1 < r.size()) {
                out << std::left << std::setw(static_cast<int>(widths[i]));
            }
            out << r[i];
        }
        out << '\n';
    }
}

}  // namespace rskbounds
