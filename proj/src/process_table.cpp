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

#include "qtraj/process_table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace qtraj {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, const char* data, size_t len) {
    for (size_t i = 0; i < len; ++i) {
        h ^= std::uint64_t(static_cast<unsigned char>(data[i]));
        h *= kFnvPrime;
    }
}

void fnv_mix_matrix(std::uint64_t& h, const Matrix& m) {
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            int n = std::snprintf(buf, sizeof buf, "%.17g,%.17g;",
                                  m(i, j).real(), m(i, j).imag());
            fnv_mix(h, buf, size_t(n));
        }
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

std::uint64_t trajectory_budget() {
    if (const char* env = std::getenv("QTRAJ_MAX_TRAJECTORIES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

std::vector<TrajectoryIndex> enumerate_trajectories(Eigen::Index d, int n_times,
                                                    std::uint64_t budget) {
    if (d < 2 || n_times < 1)
        throw DimensionError("enumerate_trajectories: need d >= 2, N >= 1");
    const std::uint64_t n = std::uint64_t(d) * std::uint64_t(d);
    const int slots = n_times - 1;
    // overflow-safe count check against the budget
    std::uint64_t count = 1;
    for (int i = 0; i < 2 * slots; ++i) {
        if (count > budget / n)
            throw BudgetExceeded("enumerate_trajectories: over budget");
        count *= n;
    }
    if (count > budget)
        throw BudgetExceeded("enumerate_trajectories: over budget");

    std::vector<TrajectoryIndex> out;
    out.reserve(size_t(count));
    TrajectoryIndex xi(size_t(slots), {0, 0});
    for (std::uint64_t r = 0; r < count; ++r) {
        out.push_back(xi);
        // lexicographic odometer, last slot's l least significant
        for (int pos = slots - 1; pos >= 0; --pos) {
            auto& [k, l] = xi[size_t(pos)];
            if (++l < Eigen::Index(n)) break;
            l = 0;
            if (++k < Eigen::Index(n)) break;
            k = 0;
        }
    }
    return out;
}

ProcessTensorTable::ProcessTensorTable(Eigen::Index d, int n_times,
                                       std::uint64_t basis_fp)
    : d_(d), n_(n_times), fp_(basis_fp) {
    if (d < 2 || n_times < 1)
        throw DimensionError("ProcessTensorTable: need d >= 2, N >= 1");
    count_ = pow_u64(std::uint64_t(d) * std::uint64_t(d), 2 * (n_times - 1));
    std::uint64_t entries = count_ * std::uint64_t(d * d);
    if (entries > (std::uint64_t(1) << 32))
        throw BudgetExceeded("ProcessTensorTable: table too large");
    p_.assign(size_t(entries), 0.0);
    assigned_.assign(size_t(entries), 0);
}

std::uint64_t ProcessTensorTable::fingerprint(const CausalBreakBasis& basis) {
    std::uint64_t h = kFnvOffset;
    for (Eigen::Index k = 0; k < basis.size(); ++k)
        fnv_mix_matrix(h, basis.povm(k));
    for (Eigen::Index l = 0; l < basis.size(); ++l)
        fnv_mix_matrix(h, basis.reprep(l));
    return h;
}

std::uint64_t ProcessTensorTable::rank(const TrajectoryIndex& xi) const {
    if (int(xi.size()) != n_ - 1)
        throw DimensionError("ProcessTensorTable: trajectory length mismatch");
    const std::uint64_t n = std::uint64_t(d_) * std::uint64_t(d_);
    std::uint64_t r = 0;
    for (const auto& [k, l] : xi) {
        if (k < 0 || l < 0 || k >= Eigen::Index(n) || l >= Eigen::Index(n))
            throw DimensionError("ProcessTensorTable: slot index out of range");
        r = (r * n + std::uint64_t(k)) * n + std::uint64_t(l);
    }
    return r;
}

TrajectoryIndex ProcessTensorTable::unrank(std::uint64_t r) const {
    const std::uint64_t n = std::uint64_t(d_) * std::uint64_t(d_);
    TrajectoryIndex xi(size_t(n_ - 1), {0, 0});
    for (int pos = n_ - 2; pos >= 0; --pos) {
        xi[size_t(pos)].second = Eigen::Index(r % n);
        r /= n;
        xi[size_t(pos)].first = Eigen::Index(r % n);
        r /= n;
    }
    return xi;
}

double ProcessTensorTable::probability(Eigen::Index k_final,
                                       std::uint64_t xi_rank) const {
    const std::uint64_t n = std::uint64_t(d_) * std::uint64_t(d_);
    if (k_final < 0 || k_final >= Eigen::Index(n) || xi_rank >= count_)
        throw DimensionError("ProcessTensorTable: index out of range");
    size_t slot = size_t(xi_rank * n + std::uint64_t(k_final));
    if (!assigned_[slot])
        throw IncompleteTable("ProcessTensorTable: entry not filled");
    return p_[slot];
}

double ProcessTensorTable::probability(Eigen::Index k_final,
                                       const TrajectoryIndex& xi) const {
    return probability(k_final, rank(xi));
}

void ProcessTensorTable::set(Eigen::Index k_final, std::uint64_t xi_rank,
                             double p) {
    const std::uint64_t n = std::uint64_t(d_) * std::uint64_t(d_);
    if (k_final < 0 || k_final >= Eigen::Index(n) || xi_rank >= count_)
        throw DimensionError("ProcessTensorTable: index out of range");
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw ValidationError("ProcessTensorTable: probability outside [0, 1]");
    size_t slot = size_t(xi_rank * n + std::uint64_t(k_final));
    p_[slot] = p;
    assigned_[slot] = 1;
}

bool ProcessTensorTable::complete() const {
    for (char c : assigned_)
        if (!c) return false;
    return true;
}

double ProcessTensorTable::max_completeness_error() const {
    if (!complete())
        throw IncompleteTable("max_completeness_error: table incomplete");
    const std::uint64_t n = std::uint64_t(d_) * std::uint64_t(d_);
    const int slots = n_ - 1;
    const std::uint64_t reps = pow_u64(n, slots);   // l multi-indices
    const std::uint64_t outs = pow_u64(n, slots);   // intermediate k's
    double worst = 0.0;
    for (std::uint64_t lr = 0; lr < reps; ++lr) {
        double sum = 0.0;
        for (std::uint64_t kr = 0; kr < outs; ++kr) {
            // interleave (k, l) digits into a trajectory rank
            std::uint64_t xi_rank = 0;
            std::uint64_t ktmp = kr, ltmp = lr;
            std::uint64_t scale = 1;
            std::uint64_t xi_digits = 0;
            for (int pos = 0; pos < slots; ++pos) {
                std::uint64_t kd = ktmp % n, ld = ltmp % n;
                ktmp /= n;
                ltmp /= n;
                xi_digits += (kd * n + ld) * scale;
                scale *= n * n;
            }
            xi_rank = xi_digits;
            for (Eigen::Index kf = 0; kf < Eigen::Index(n); ++kf)
                sum += probability(kf, xi_rank);
        }
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

nlohmann::json ProcessTensorTable::to_json() const {
    nlohmann::json j;
    j["format"] = "qtraj-process-table";
    j["version"] = 1;
    j["dim"] = d_;
    j["times"] = n_;
    char fp[32];
    std::snprintf(fp, sizeof fp, "0x%016llx",
                  static_cast<unsigned long long>(fp_));
    j["basis_fingerprint"] = fp;

    // Keys serialize as (k_N; k_{N-1}, l_{N-1}; ...; k_1, l_1), entries in
    // lexicographic key order.
    const std::uint64_t n = std::uint64_t(d_) * std::uint64_t(d_);
    const int slots = n_ - 1;
    nlohmann::json entries = nlohmann::json::array();
    const std::uint64_t total = size();
    for (std::uint64_t e = 0; e < total; ++e) {
        // decode digits most-significant-first
        std::uint64_t rest = e;
        std::vector<std::uint64_t> digits(size_t(2 * slots + 1));
        for (int pos = 2 * slots; pos >= 0; --pos) {
            digits[size_t(pos)] = rest % n;
            rest /= n;
        }
        Eigen::Index k_final = Eigen::Index(digits[0]);
        TrajectoryIndex xi(size_t(slots), {0, 0});
        for (int a = 0; a < slots; ++a) {
            // digit pairs run backwards in time after the final outcome
            xi[size_t(slots - 1 - a)] = {
                Eigen::Index(digits[size_t(1 + 2 * a)]),
                Eigen::Index(digits[size_t(2 + 2 * a)])};
        }
        nlohmann::json key = nlohmann::json::array();
        for (std::uint64_t dgt : digits) key.push_back(dgt);
        entries.push_back(
            nlohmann::json::array({key, probability(k_final, xi)}));
    }
    j["entries"] = std::move(entries);
    return j;
}

ProcessTensorTable ProcessTensorTable::from_json(const nlohmann::json& j) {
    if (!j.contains("format") || j["format"] != "qtraj-process-table")
        throw ValidationError("from_json: unrecognized table format");
    if (!j.contains("version") || j["version"] != 1)
        throw ValidationError("from_json: unsupported table version");
    Eigen::Index d = j.at("dim").get<Eigen::Index>();
    int n_times = j.at("times").get<int>();
    std::string fps = j.at("basis_fingerprint").get<std::string>();
    std::uint64_t fp = std::strtoull(fps.c_str(), nullptr, 16);
    ProcessTensorTable t(d, n_times, fp);

    const std::uint64_t n = std::uint64_t(d) * std::uint64_t(d);
    const int slots = n_times - 1;
    for (const auto& entry : j.at("entries")) {
        const auto& key = entry.at(0);
        if (key.size() != size_t(2 * slots + 1))
            throw ValidationError("from_json: bad key length");
        Eigen::Index k_final = key.at(0).get<Eigen::Index>();
        TrajectoryIndex xi(size_t(slots), {0, 0});
        for (int a = 0; a < slots; ++a)
            xi[size_t(slots - 1 - a)] = {
                key.at(size_t(1 + 2 * a)).get<Eigen::Index>(),
                key.at(size_t(2 + 2 * a)).get<Eigen::Index>()};
        t.set(k_final, t.rank(xi), entry.at(1).get<double>());
        (void)n;
    }
    return t;
}

}  // namespace qtraj
