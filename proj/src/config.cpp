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

#include "qtraj/config.hpp"

#include <cmath>

#include "qtraj/control.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

namespace {

const nlohmann::json* try_at(const nlohmann::json& cfg,
                             const std::string& pointer) {
    nlohmann::json::json_pointer p(pointer);
    if (!cfg.contains(p)) return nullptr;
    return &cfg.at(p);
}

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
    throw ConfigError("config error at " + pointer + ": " + what);
}

Matrix parse_complex_matrix(const nlohmann::json& cfg,
                            const std::string& pointer, Eigen::Index rows,
                            Eigen::Index cols) {
    const auto& re = config_require(cfg, pointer + "/re");
    if (!re.is_array() || Eigen::Index(re.size()) != rows)
        fail(pointer + "/re", "expected " + std::to_string(rows) + " rows");
    bool has_im = config_has(cfg, pointer + "/im");
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = re.at(size_t(i));
        if (!row.is_array() || Eigen::Index(row.size()) != cols)
            fail(pointer + "/re", "row " + std::to_string(i) + " must have " +
                                      std::to_string(cols) + " entries");
        for (Eigen::Index j = 0; j < cols; ++j) {
            const auto& v = row.at(size_t(j));
            if (!v.is_number()) fail(pointer + "/re", "entries must be numbers");
            m(i, j) = Complex(v.get<double>(), 0.0);
        }
    }
    if (has_im) {
        const auto& im = config_require(cfg, pointer + "/im");
        if (!im.is_array() || Eigen::Index(im.size()) != rows)
            fail(pointer + "/im", "shape must match /re");
        for (Eigen::Index i = 0; i < rows; ++i) {
            const auto& row = im.at(size_t(i));
            if (!row.is_array() || Eigen::Index(row.size()) != cols)
                fail(pointer + "/im", "shape must match /re");
            for (Eigen::Index j = 0; j < cols; ++j) {
                const auto& v = row.at(size_t(j));
                if (!v.is_number())
                    fail(pointer + "/im", "entries must be numbers");
                m(i, j) += Complex(0.0, v.get<double>());
            }
        }
    }
    return m;
}

Vector parse_complex_vector(const nlohmann::json& cfg,
                            const std::string& pointer, Eigen::Index n) {
    const auto& re = config_require(cfg, pointer + "/re");
    if (!re.is_array() || Eigen::Index(re.size()) != n)
        fail(pointer + "/re", "expected " + std::to_string(n) + " entries");
    Vector v = Vector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& x = re.at(size_t(i));
        if (!x.is_number()) fail(pointer + "/re", "entries must be numbers");
        v(i) = Complex(x.get<double>(), 0.0);
    }
    if (config_has(cfg, pointer + "/im")) {
        const auto& im = config_require(cfg, pointer + "/im");
        if (!im.is_array() || Eigen::Index(im.size()) != n)
            fail(pointer + "/im", "shape must match /re");
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& x = im.at(size_t(i));
            if (!x.is_number()) fail(pointer + "/im", "entries must be numbers");
            v(i) += Complex(0.0, x.get<double>());
        }
    }
    return v;
}

}  // namespace

bool config_has(const nlohmann::json& cfg, const std::string& pointer) {
    return try_at(cfg, pointer) != nullptr;
}

const nlohmann::json& config_require(const nlohmann::json& cfg,
                                     const std::string& pointer) {
    const nlohmann::json* j = try_at(cfg, pointer);
    if (!j) fail(pointer, "missing required field");
    return *j;
}

double config_number(const nlohmann::json& cfg, const std::string& pointer) {
    const auto& j = config_require(cfg, pointer);
    if (!j.is_number()) fail(pointer, "expected a number");
    return j.get<double>();
}

double config_number_or(const nlohmann::json& cfg, const std::string& pointer,
                        double fallback) {
    return config_has(cfg, pointer) ? config_number(cfg, pointer) : fallback;
}

std::int64_t config_integer(const nlohmann::json& cfg,
                            const std::string& pointer) {
    const auto& j = config_require(cfg, pointer);
    if (!j.is_number_integer()) fail(pointer, "expected an integer");
    return j.get<std::int64_t>();
}

std::int64_t config_integer_or(const nlohmann::json& cfg,
                               const std::string& pointer,
                               std::int64_t fallback) {
    return config_has(cfg, pointer) ? config_integer(cfg, pointer) : fallback;
}

std::uint64_t config_uint(const nlohmann::json& cfg,
                          const std::string& pointer) {
    const auto& j = config_require(cfg, pointer);
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return std::uint64_t(j.get<std::int64_t>());
    fail(pointer, "expected a nonnegative integer");
}

bool config_bool_or(const nlohmann::json& cfg, const std::string& pointer,
                    bool fallback) {
    const nlohmann::json* j = try_at(cfg, pointer);
    if (!j) return fallback;
    if (!j->is_boolean()) fail(pointer, "expected a boolean");
    return j->get<bool>();
}

std::string config_string(const nlohmann::json& cfg,
                          const std::string& pointer) {
    const auto& j = config_require(cfg, pointer);
    if (!j.is_string()) fail(pointer, "expected a string");
    return j.get<std::string>();
}

RealVector config_real_vector(const nlohmann::json& cfg,
                              const std::string& pointer) {
    const auto& j = config_require(cfg, pointer);
    if (!j.is_array() || j.empty()) fail(pointer, "expected a nonempty array");
    RealVector v(Eigen::Index(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto& x = j.at(size_t(i));
        if (!x.is_number()) fail(pointer, "entries must be numbers");
        v(i) = x.get<double>();
    }
    return v;
}

RealMatrix config_real_matrix(const nlohmann::json& cfg,
                              const std::string& pointer) {
    const auto& j = config_require(cfg, pointer);
    if (!j.is_array() || j.empty()) fail(pointer, "expected a nonempty array");
    auto rows = Eigen::Index(j.size());
    const auto& first = j.at(0);
    if (!first.is_array() || first.empty())
        fail(pointer, "expected an array of rows");
    auto cols = Eigen::Index(first.size());
    RealMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(size_t(i));
        if (!row.is_array() || Eigen::Index(row.size()) != cols)
            fail(pointer, "rows must have equal length");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& x = row.at(size_t(k));
            if (!x.is_number()) fail(pointer, "entries must be numbers");
            m(i, k) = x.get<double>();
        }
    }
    return m;
}

Vector parse_pure_state(const nlohmann::json& cfg, const std::string& pointer,
                        Eigen::Index d) {
    Vector psi = parse_complex_vector(cfg, pointer, d);
    double norm = psi.norm();
    if (norm < 1e-12) fail(pointer, "state vector has zero norm");
    return Vector(psi / norm);
}

Matrix parse_state(const nlohmann::json& cfg, const std::string& pointer,
                   Eigen::Index d, Rng& rng, bool& used_random) {
    std::string type = config_string(cfg, pointer + "/type");
    if (type == "maximally_mixed")
        return Matrix(Matrix::Identity(d, d) / double(d));
    if (type == "diagonal") {
        RealVector p = config_real_vector(cfg, pointer + "/populations");
        if (p.size() != d) fail(pointer + "/populations", "wrong length");
        Matrix m = Matrix::Zero(d, d);
        for (Eigen::Index i = 0; i < d; ++i) m(i, i) = p(i);
        return m;
    }
    if (type == "pure") {
        Vector psi = parse_complex_vector(cfg, pointer, d);
        double norm = psi.norm();
        if (norm < 1e-12) fail(pointer, "state vector has zero norm");
        psi /= norm;
        return Matrix(psi * psi.adjoint());
    }
    if (type == "basis") {
        auto idx = config_integer(cfg, pointer + "/index");
        if (idx < 0 || idx >= d) fail(pointer + "/index", "out of range");
        Matrix m = Matrix::Zero(d, d);
        m(idx, idx) = 1.0;
        return m;
    }
    if (type == "random_mixed") {
        used_random = true;
        return rng.density_matrix(d);
    }
    if (type == "random_pure") {
        used_random = true;
        Vector psi = rng.pure_state(d);
        return Matrix(psi * psi.adjoint());
    }
    fail(pointer + "/type", "unknown state type '" + type + "'");
}

QuantumChannel parse_control(const nlohmann::json& cfg,
                             const std::string& pointer, Eigen::Index d,
                             Rng& rng, bool& used_random) {
    std::string type = config_string(cfg, pointer + "/type");
    if (type == "identity") return QuantumChannel::identity(d);
    if (type == "shift") {
        auto power = config_integer_or(cfg, pointer + "/power", 1);
        if (power < 0) fail(pointer + "/power", "must be nonnegative");
        return QuantumChannel::from_unitary(
            matrix_power(shift_operator(d), int(power)));
    }
    if (type == "unitary") {
        Matrix u = parse_complex_matrix(cfg, pointer, d, d);
        if (!is_unitary(u, 1e-9)) fail(pointer, "matrix is not unitary");
        return QuantumChannel::from_unitary(u);
    }
    if (type == "random_unitary") {
        used_random = true;
        return QuantumChannel::from_unitary(rng.unitary(d));
    }
    fail(pointer + "/type", "unknown control type '" + type + "'");
}

}  // namespace qtraj
