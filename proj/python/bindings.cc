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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rskbounds/bounds.h"
#include "rskbounds/greene.h"
#include "rskbounds/harness.h"
#include "rskbounds/metrics.h"
#include "rskbounds/partitions.h"
#include "rskbounds/rsk.h"
#include "rskbounds/sampling.h"
#include "rskbounds/viennot.h"

namespace py = pybind11;
using namespace rskbounds;

namespace {

// Python sees words as lists of ints, shapes as lists of row lengths and
// distributions as lists of floats sorted in nonincreasing order.

Word to_word(const std::vector<int> &letters) {
    return Word(letters);
}

std::vector<int> shape_rows(const YoungDiagram &y) {
    return y.trimmed().rows();
}

SortedDist to_alpha(const std::vector<double> &probs) {
    return SortedDist(probs);
}

CheckOptions make_options(uint64_t budget, uint64_t max_budget, uint64_t seed, uint64_t stream,
                          const std::string &mode) {
    CheckOptions options;
    options.budget = budget;
    options.max_budget = max_budget;
    options.seed = seed;
    options.stream = stream;
    options.mode = parse_mode(mode);
    return options;
}

py::dict check_dict(const BoundCheck &c) {
    py::dict out;
    out["theorem_id"] = c.theorem_id;
    out["n"] = c.n;
    out["k"] = c.k;
    out["estimate"] = c.estimate;
    out["ci"] = c.ci_radius;
    out["bound"] = c.bound;
    out["lower"] = c.lower ? py::cast(*c.lower) : py::none();
    out["samples"] = c.samples;
    out["mode"] = std::string(mode_name(c.mode));
    out["verdict"] = std::string(verdict_name(c.verdict));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "RSK shapes, Schur-Weyl sampling and checks of their expectation bounds.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def(
        "rsk",
        [](const std::vector<int> &w) {
            TableauPair t = rsk(to_word(w));
            return py::make_tuple(t.p, t.q);
        },
        py::arg("word"), "Returns the tableaux (P, Q) as lists of rows.");
    m.def(
        "shape", [](const std::vector<int> &w) { return shape_rows(sh_rsk(to_word(w))); }, py::arg("word"),
        "Row lengths of the RSK shape.");
    m.def(
        "bump_stream", [](const std::vector<int> &w, size_t k) { return bump_stream(to_word(w), k).letters(); },
        py::arg("word"), py::arg("k"), "Letters bumped out of row k, in order.");
    m.def(
        "standardize", [](const std::vector<int> &w) { return standardize(to_word(w)).letters(); },
        py::arg("word"));
    m.def(
        "lis", [](const std::vector<int> &w) { return lis(to_word(w)); }, py::arg("word"),
        "Length of the longest weakly increasing subsequence.");
    m.def(
        "greene_invariant",
        [](const std::vector<int> &w, size_t k) { return greene_invariant(to_word(w), k); }, py::arg("word"),
        py::arg("k"), "Largest total length of k disjoint weakly increasing subsequences.");

    m.def(
        "sample_word",
        [](const std::vector<double> &alpha, size_t n, uint64_t seed) {
            return sample_word(to_alpha(alpha), n, seed).letters();
        },
        py::arg("alpha"), py::arg("n"), py::arg("seed") = 0);
    m.def(
        "sample_sw",
        [](const std::vector<double> &alpha, size_t n, uint64_t seed) {
            return shape_rows(sample_sw(to_alpha(alpha), n, seed));
        },
        py::arg("alpha"), py::arg("n"), py::arg("seed") = 0, "One Schur-Weyl shape.");
    m.def(
        "sample_plancherel", [](size_t n, uint64_t seed) { return shape_rows(sample_plancherel(n, seed)); },
        py::arg("n"), py::arg("seed") = 0);
    m.def(
        "sw_distribution",
        [](const std::vector<double> &alpha, size_t n) {
            std::vector<std::pair<std::vector<int>, double>> out;
            for (const auto &[shape, p] : sw_distribution(to_alpha(alpha), n)) {
                out.emplace_back(shape_rows(shape), p);
            }
            return out;
        },
        py::arg("alpha"), py::arg("n"), "Exact law of the shape as (rows, probability) pairs.");
    m.def(
        "mod_density",
        [](const std::vector<int> &h, const std::vector<double> &alpha) { return mod_density(h, to_alpha(alpha)); },
        py::arg("histogram"), py::arg("alpha"));

    m.def(
        "itw", [](const std::vector<double> &alpha, size_t k) { return itw(to_alpha(alpha), k); },
        py::arg("alpha"), py::arg("k"), "Limiting excess of the first k rows.");
    m.def(
        "distance",
        [](const std::string &metric, const std::vector<double> &a, const std::vector<double> &b, size_t k) {
            return distance_value(parse_metric(metric), a, b, k);
        },
        py::arg("metric"), py::arg("a"), py::arg("b"), py::arg("k") = 0);
    m.def(
        "distance_rate_bound",
        [](const std::string &metric, size_t d, size_t k, size_t n) {
            return distance_rate_bound(parse_metric(metric), d, k, n);
        },
        py::arg("metric"), py::arg("d"), py::arg("k"), py::arg("n"));
    m.def("metric_names", [] {
        std::vector<std::string> names;
        for (DistanceMetric metric : all_distance_metrics()) {
            names.emplace_back(metric_name(metric));
        }
        return names;
    });

    m.def(
        "excess_check",
        [](const std::vector<double> &alpha, size_t k, size_t n, uint64_t budget, uint64_t max_budget, uint64_t seed,
           const std::string &mode) {
            return check_dict(excess_estimate(to_alpha(alpha), k, n, make_options(budget, max_budget, seed, 0, mode)));
        },
        py::arg("alpha"), py::arg("k"), py::arg("n"), py::arg("budget") = 10'000, py::arg("max_budget") = 1'000'000,
        py::arg("seed") = 0, py::arg("mode") = "auto");
    m.def(
        "distance_rate_check",
        [](const std::string &metric, const std::vector<double> &alpha, size_t n, size_t k, uint64_t budget,
           uint64_t max_budget, uint64_t seed, const std::string &mode) {
            return check_dict(distance_rate_check(parse_metric(metric), to_alpha(alpha), n, k,
                                                  make_options(budget, max_budget, seed, 0, mode)));
        },
        py::arg("metric"), py::arg("alpha"), py::arg("n"), py::arg("k") = 0, py::arg("budget") = 10'000,
        py::arg("max_budget") = 1'000'000, py::arg("seed") = 0, py::arg("mode") = "auto");

    m.def(
        "run_suite",
        [](const std::string &suite, size_t max_n, size_t max_d, uint64_t random_trials, uint64_t seed) {
            VerifyOptions options;
            options.max_n = max_n;
            options.max_d = max_d;
            options.random_trials = random_trials;
            options.seed = seed;
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_suite(suite, options);
            }
            py::dict out;
            out["suite"] = r.suite;
            out["checked"] = r.checked;
            out["failures"] = r.failures;
            out["counterexample"] = r.counterexample;
            out["passed"] = r.passed();
            return out;
        },
        py::arg("suite"), py::arg("max_n") = 8, py::arg("max_d") = 3, py::arg("random_trials") = 0,
        py::arg("seed") = 0);
    m.def("suite_names", &suite_names);

    m.def(
        "run_experiment",
        [](const std::string &config_json, unsigned jobs) {
            ExperimentConfig config = parse_config(config_json);
            ExperimentReport report;
            {
                py::gil_scoped_release release;
                report = run_experiment(config, jobs);
            }
            return report_json(report);
        },
        py::arg("config_json"), py::arg("jobs") = 1, "Runs a JSON config and returns the JSON report text.");

    m.def(
        "viennot_json", [](const std::vector<int> &w) { return diagram_json(build_diagram(to_word(w))); },
        py::arg("permutation"));
    m.def(
        "viennot_text", [](const std::vector<int> &w) { return diagram_text(build_diagram(to_word(w))); },
        py::arg("permutation"));
    m.def(
        "iterated_shape", [](const std::vector<int> &w) { return shape_rows(iterated_shape(to_word(w))); },
        py::arg("permutation"), "Shape read off the iterated shadow-line construction.");
}
