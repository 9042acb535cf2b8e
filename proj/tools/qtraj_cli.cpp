// Copyright 2026 The qtraj developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs one experiment described by a JSON config and writes the report to
// stdout or a file. Exit codes: 0 success, 2 bad config, 3 failed
// assertion, 4 runtime failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtraj/error.hpp"
#include "qtraj/report.hpp"
#include "qtraj/runner.hpp"
#include "qtraj/version.hpp"

namespace {

int write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return 4;
    }
    out.write(text.data(), std::streamsize(text.size()));
    return out ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time open-process experiment runner"};
    app.set_version_flag("--version", qtraj::kLibraryVersion);

    std::string config_path, out_path, format = "json";
    bool check_asserts = false, deterministic = false;
    int threads = 1;

    app.add_option("--config", config_path, "experiment config (JSON)")
        ->required();
    app.add_option("--out", out_path, "report path (default stdout)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--assert", check_asserts,
                 "fail (exit 3) when a scenario invariant is violated");
    app.add_flag("--deterministic", deterministic,
                 "suppress wall-clock timing for byte-stable reports");
    app.add_option("--threads", threads, "worker threads for tomography")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // app.exit returns 0 for --help/--version; every real usage
        // error maps onto the documented bad-config exit code.
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    nlohmann::json config;
    {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read config " << config_path << "\n";
            return 2;
        }
        try {
            in >> config;
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "error: config is not valid JSON: " << e.what()
                      << "\n";
            return 2;
        }
    }

    qtraj::RunOptions opts;
    opts.threads = threads;
    opts.deterministic = deterministic;

    qtraj::RunResult result;
    try {
        result = qtraj::run_experiment(config, opts);
    } catch (const qtraj::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qtraj::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }

    std::string text = format == "csv"
                           ? qtraj::report_to_csv(result.report)
                           : qtraj::report_to_json_text(result.report);
    int rc = write_text(out_path, text);
    if (rc != 0) return rc;

    if (check_asserts) {
        bool all_ok = true;
        for (const auto& a : result.asserts) {
            std::cerr << "assert " << a.name << ": "
                      << (a.ok ? "ok" : "FAIL") << " (" << a.detail << ")\n";
            all_ok = all_ok && a.ok;
        }
        if (!all_ok) return 3;
    }
    return 0;
}
