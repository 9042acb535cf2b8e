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

#include "qtraj/report.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>

#include "qtraj/version.hpp"

namespace qtraj {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// std::to_chars is locale independent, so the decimal mark is always '.'.
std::string format_number(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_scalar(const nlohmann::json& j) {
    if (j.is_null()) return "null";
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
    if (j.is_number_float()) return format_number(j.get<double>());
    return csv_escape(j.get<std::string>());
}

void flatten(const nlohmann::json& j, const std::string& path,
             std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(),
                    out);
        return;
    }
    if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten(j.at(i), path + "." + std::to_string(i), out);
        return;
    }
    out += csv_escape(path);
    out += ',';
    out += csv_scalar(j);
    out += '\n';
}

}  // namespace

std::string config_fingerprint(const nlohmann::json& config) {
    std::string bytes = config.dump();
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json make_report(const nlohmann::json& config,
                           const std::string& scenario,
                           nlohmann::json outputs, double timing_ms) {
    nlohmann::json report;
    report["config_echo"] = config;
    report["config_fingerprint"] = config_fingerprint(config);
    report["library_version"] = kLibraryVersion;
    report["scenario"] = scenario;
    report["outputs"] = std::move(outputs);
    report["timing_ms"] = timing_ms;
    return report;
}

std::string report_to_json_text(const nlohmann::json& report) {
    return report.dump(2) + "\n";
}

std::string report_to_csv(const nlohmann::json& report) {
    std::string out = "key,value\n";
    flatten(report, "", out);
    return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row_re = nlohmann::json::array();
        nlohmann::json row_im = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row_re.push_back(m(i, j).real());
            row_im.push_back(m(i, j).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    return nlohmann::json{{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace qtraj
