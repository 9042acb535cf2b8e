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

#include "qtraj/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "qtraj/causal_break.hpp"
#include "qtraj/config.hpp"
#include "qtraj/control.hpp"
#include "qtraj/density_matrix.hpp"
#include "qtraj/dilation.hpp"
#include "qtraj/game.hpp"
#include "qtraj/gell_mann.hpp"
#include "qtraj/linalg.hpp"
#include "qtraj/mutual_info.hpp"
#include "qtraj/process_table.hpp"
#include "qtraj/report.hpp"
#include "qtraj/scaling.hpp"
#include "qtraj/spectral.hpp"
#include "qtraj/tomography.hpp"

namespace qtraj {

namespace {

using nlohmann::json;

// Shared parse state: random draws must be backed by an explicit seed.
struct Context {
    const json& cfg;
    Rng rng;
    bool has_seed;
    bool used_random = false;
    std::vector<AssertRecord>* asserts;

    explicit Context(const json& c, std::vector<AssertRecord>* a)
        : cfg(c),
          rng(config_has(c, "/seed") ? config_uint(c, "/seed") : 0),
          has_seed(config_has(c, "/seed")),
          asserts(a) {}

    void check_seed() const {
        if (used_random && !has_seed)
            throw ConfigError(
                "config error at /seed: seed is required when the "
                "configuration samples random objects");
    }

    void record(const std::string& name, bool ok, const std::string& detail) {
        asserts->push_back({name, ok, detail});
    }

    void record_leq(const std::string& name, double value, double bound) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.3e <= %.3e", value, bound);
        record(name, value <= bound, buf);
    }
};

SpectralHamiltonian parse_coupling(const json& cfg) {
    RealVector s = config_real_vector(cfg, "/coupling/s_values");
    RealVector b = config_real_vector(cfg, "/coupling/b_values");
    return SpectralHamiltonian::diagonal(s, b);
}

DilatedProcess build_process(Context& ctx) {
    auto spec = parse_coupling(ctx.cfg);
    Matrix sys = parse_state(ctx.cfg, "/system_state", spec.system_dim(),
                             ctx.rng, ctx.used_random);
    Matrix env = parse_state(ctx.cfg, "/env_state", spec.env_dim(), ctx.rng,
                             ctx.used_random);
    auto n_times = config_integer_or(ctx.cfg, "/n_times", 3);
    if (n_times < 2) throw ConfigError("config error at /n_times: need >= 2");
    double dt = config_number(ctx.cfg, "/time_step");
    auto proc = DilatedProcess::equidistant(spec, sys, env, int(n_times), dt);
    if (config_has(ctx.cfg, "/environment_reset")) {
        Matrix tau = parse_state(ctx.cfg, "/environment_reset", spec.env_dim(),
                                 ctx.rng, ctx.used_random);
        proc.enable_environment_reset(tau);
    }
    return proc;
}

RealVector env_populations(const SpectralHamiltonian& spec, const Matrix& env) {
    RealVector pops(spec.env_dim());
    for (Eigen::Index g = 0; g < spec.env_dim(); ++g)
        pops(g) = spec.env_population(env, g);
    return pops;
}

json finite_or_null(double x) {
    if (!std::isfinite(x)) return json(nullptr);
    if (x == 0.0) x = 0.0;  // avoid serializing negative zero
    return json(x);
}

json run_tomography(Context& ctx, const RunOptions& opts) {
    auto proc = build_process(ctx);
    ctx.check_seed();
    auto basis = CausalBreakBasis::standard(proc.system_dim());
    auto table =
        tomograph_process(proc, basis, trajectory_budget(), opts.threads);

    char fp[32];
    std::snprintf(fp, sizeof(fp), "0x%016llx",
                  static_cast<unsigned long long>(table.basis_fingerprint()));
    json outputs;
    outputs["system_dim"] = proc.system_dim();
    outputs["n_times"] = table.n_times();
    outputs["n_trajectories"] = table.trajectory_count();
    outputs["n_entries"] = table.size();
    double completeness = table.max_completeness_error();
    outputs["completeness_error"] = completeness;
    outputs["basis_fingerprint"] = fp;
    if (config_bool_or(ctx.cfg, "/emit_table", false))
        outputs["table"] = table.to_json();

    ctx.record_leq("trajectory_sums_normalized", completeness, 1e-9);
    return outputs;
}

json run_reconstruct(Context& ctx, const RunOptions& opts) {
    auto proc = build_process(ctx);
    const auto& list = config_require(ctx.cfg, "/controls");
    if (!list.is_array() || int(list.size()) != proc.n_steps())
        throw ConfigError("config error at /controls: expected " +
                          std::to_string(proc.n_steps()) + " entries");
    std::vector<QuantumChannel> controls;
    for (size_t i = 0; i < list.size(); ++i)
        controls.push_back(parse_control(ctx.cfg,
                                         "/controls/" + std::to_string(i),
                                         proc.system_dim(), ctx.rng,
                                         ctx.used_random));
    ctx.check_seed();

    auto basis = CausalBreakBasis::standard(proc.system_dim());
    auto table =
        tomograph_process(proc, basis, trajectory_budget(), opts.threads);
    DensityMatrix recon = reconstruct_final_state(table, controls, basis);
    DensityMatrix direct = run_dilated_process(proc, controls);
    double diff = max_abs_diff(recon.matrix(), direct.matrix());

    json outputs;
    outputs["reconstructed"] = matrix_to_json(recon.matrix());
    outputs["direct"] = matrix_to_json(direct.matrix());
    outputs["max_abs_diff"] = diff;

    ctx.record_leq("reconstruction_matches_direct_evolution", diff, 1e-8);
    return outputs;
}

json run_markov_test(Context& ctx, const RunOptions&) {
    auto proc = build_process(ctx);
    ctx.check_seed();
    auto basis = CausalBreakBasis::standard(proc.system_dim());
    double tol = config_number_or(ctx.cfg, "/tolerance", 1e-6);
    auto rep = markovianity_check(proc, basis, tol);

    json outputs;
    outputs["markovian"] = rep.markovian;
    outputs["max_deviation"] = rep.max_deviation;
    outputs["tolerance"] = rep.tolerance;
    outputs["histories_checked"] = rep.histories_checked;
    outputs["histories_skipped"] = rep.histories_skipped;

    if (config_has(ctx.cfg, "/expect_markovian")) {
        bool expect = config_bool_or(ctx.cfg, "/expect_markovian", false);
        ctx.record("verdict_matches_expectation", rep.markovian == expect,
                   rep.markovian ? "markovian" : "non-markovian");
    }
    return outputs;
}

json run_game(Context& ctx, const RunOptions&) {
    auto spec = parse_coupling(ctx.cfg);
    Matrix env = parse_state(ctx.cfg, "/env_state", spec.env_dim(), ctx.rng,
                             ctx.used_random);
    Vector psi = parse_pure_state(ctx.cfg, "/probe_state", spec.system_dim());
    double t = config_number(ctx.cfg, "/time_step");

    std::vector<RealMatrix> strategies;
    if (config_has(ctx.cfg, "/strategies")) {
        const auto& list = config_require(ctx.cfg, "/strategies");
        if (!list.is_array())
            throw ConfigError("config error at /strategies: expected array");
        for (size_t i = 0; i < list.size(); ++i)
            strategies.push_back(config_real_matrix(
                ctx.cfg, "/strategies/" + std::to_string(i) + "/weights"));
    }
    ctx.check_seed();

    auto result = three_step_game(spec, env, psi, t);
    json outputs;
    outputs["coherence_factor"] = {{"re", result.coherence_factor.real()},
                                   {"im", result.coherence_factor.imag()}};
    outputs["fidelity_identity"] = result.fidelity_identity;
    outputs["fidelity_flip"] = result.fidelity_flip;

    ctx.record_leq("flip_recovery_exact", 1.0 - result.fidelity_flip, 1e-9);

    if (!strategies.empty()) {
        auto basis = CausalBreakBasis::standard(spec.system_dim());
        json fids = json::array();
        for (size_t i = 0; i < strategies.size(); ++i) {
            double f = break_strategy_fidelity(spec, env, psi, t, basis,
                                               strategies[i]);
            fids.push_back(f);
            ctx.record_leq("break_strategy_" + std::to_string(i) +
                               "_below_flip",
                           f, result.fidelity_flip + 1e-9);
        }
        outputs["strategy_fidelities"] = std::move(fids);
    }
    return outputs;
}

json run_mutualinfo(Context& ctx, const RunOptions&) {
    auto proc = build_process(ctx);
    ctx.check_seed();
    auto basis = CausalBreakBasis::standard(proc.system_dim());
    auto step = config_integer_or(ctx.cfg, "/step", 2);
    auto l0 = config_integer(ctx.cfg, "/resend_index");
    if (l0 < 0 || l0 >= basis.size())
        throw ConfigError("config error at /resend_index: out of range");

    double iq = quantum_memory_information(proc, int(step), basis.reprep(l0));
    double icl = classical_memory_information(proc, int(step), basis,
                                              constant_strategy(basis, l0));

    json outputs;
    outputs["step"] = step;
    outputs["resend_index"] = l0;
    outputs["quantum_bits"] = iq;
    outputs["classical_bits"] = icl;

    ctx.record_leq("classical_information_nonnegative", -icl, 1e-9);
    ctx.record_leq("quantum_dominates_classical_record", icl - iq, 1e-9);
    return outputs;
}

json run_decouple(Context& ctx, const RunOptions&) {
    auto spec = parse_coupling(ctx.cfg);
    const Eigen::Index d = spec.system_dim();
    Matrix env = parse_state(ctx.cfg, "/env_state", spec.env_dim(), ctx.rng,
                             ctx.used_random);
    double t = config_number(ctx.cfg, "/time_step");

    bool defaulted = !config_has(ctx.cfg, "/powers");
    std::vector<Eigen::Index> powers;
    if (defaulted) {
        powers = decoupling_powers(d);
    } else {
        RealVector raw = config_real_vector(ctx.cfg, "/powers");
        for (Eigen::Index i = 0; i < raw.size(); ++i) {
            if (raw(i) < 0 || raw(i) != std::floor(raw(i)))
                throw ConfigError(
                    "config error at /powers: entries must be nonnegative "
                    "integers");
            powers.push_back(Eigen::Index(raw(i)));
        }
    }
    ctx.check_seed();

    auto circuit = simulate_pulsed_circuit(spec, env, t, powers);
    Matrix v = residual_pulse_unitary(d, powers);
    auto target = QuantumChannel::from_unitary(v);
    double residual_error = max_abs_diff(circuit.superop(), target.superop());
    RealVector pops = env_populations(spec, env);

    json pairs = json::array();
    double worst_split = 0.0;
    for (Eigen::Index mu = 0; mu < d; ++mu)
        for (Eigen::Index mup = mu + 1; mup < d; ++mup) {
            double split = effective_splitting(spec, powers, mu, mup);
            Complex c = pulsed_coherence_factor(spec, pops, t, powers, mu, mup);
            auto phi = scaling_phase(c);
            json row;
            row["mu"] = mu;
            row["mu_prime"] = mup;
            row["effective_splitting"] = split;
            row["coherence"] = {{"re", c.real()}, {"im", c.imag()}};
            row["ell"] = finite_or_null(scaling_strength(c));
            row["phi"] = phi ? json(*phi) : json(nullptr);
            pairs.push_back(std::move(row));
            worst_split = std::max(worst_split, std::abs(split));
        }

    json outputs;
    json powers_json = json::array();
    for (auto p : powers) powers_json.push_back(p);
    outputs["powers"] = std::move(powers_json);
    outputs["residual_error"] = residual_error;
    outputs["pairs"] = std::move(pairs);

    if (defaulted) {
        ctx.record_leq("circuit_equals_residual_conjugation", residual_error,
                       1e-9);
        ctx.record_leq("all_splittings_cancelled", worst_split, 1e-9);
    }
    return outputs;
}

json run_scaling_sweep(Context& ctx, const RunOptions&) {
    auto spec = parse_coupling(ctx.cfg);
    const Eigen::Index d = spec.system_dim();
    Matrix env = parse_state(ctx.cfg, "/env_state", spec.env_dim(), ctx.rng,
                             ctx.used_random);
    auto mu = config_integer(ctx.cfg, "/pair/mu");
    auto mup = config_integer(ctx.cfg, "/pair/mu_prime");
    if (mu < 0 || mup <= mu || mup >= d)
        throw ConfigError("config error at /pair: need 0 <= mu < mu_prime < " +
                          std::to_string(d));

    std::vector<double> times;
    if (config_has(ctx.cfg, "/times/values")) {
        RealVector v = config_real_vector(ctx.cfg, "/times/values");
        times.assign(v.data(), v.data() + v.size());
    } else {
        double start = config_number(ctx.cfg, "/times/start");
        double stop = config_number(ctx.cfg, "/times/stop");
        auto count = config_integer(ctx.cfg, "/times/count");
        if (count < 2)
            throw ConfigError("config error at /times/count: need >= 2");
        for (std::int64_t i = 0; i < count; ++i)
            times.push_back(start +
                            (stop - start) * double(i) / double(count - 1));
    }
    bool simulate = config_bool_or(ctx.cfg, "/simulate", false);
    ctx.check_seed();

    RealVector pops = env_populations(spec, env);
    GellMannBasis gm(d);
    double omega = spec.omega(mu, mup);

    json samples = json::array();
    double worst_negative = 0.0, worst_route_gap = 0.0;
    for (double t : times) {
        Complex c = coherence_factor(spec.b_values(), pops, omega, t);
        double ell = scaling_strength(c);
        auto phi = scaling_phase(c);
        json row;
        row["time"] = t;
        row["coherence"] = {{"re", c.real()}, {"im", c.imag()}};
        row["ell"] = finite_or_null(ell);
        row["phi"] = phi ? json(*phi) : json(nullptr);
        if (std::isfinite(ell)) worst_negative = std::max(worst_negative, -ell);
        if (simulate) {
            auto channel = simulate_pulsed_circuit(spec, env, t, {});
            RealMatrix m = channel_matrix(channel, gm);
            auto sp = subspace_parameters(m, gm, mu, mup);
            row["ell_simulated"] = finite_or_null(sp.ell);
            row["phi_simulated"] = sp.phi ? json(*sp.phi) : json(nullptr);
            row["leakage"] = sp.leakage;
            // compare decay magnitudes; the log form diverges near full
            // suppression while the magnitudes stay well conditioned
            double gap = std::abs(std::exp(-ell) - std::exp(-sp.ell));
            worst_route_gap = std::max(worst_route_gap, gap);
            if (phi && sp.phi && std::abs(c) > 1e-6) {
                double dphi = std::remainder(*phi - *sp.phi, 2.0 * kPi);
                worst_route_gap = std::max(worst_route_gap, std::abs(dphi));
            }
        }
        samples.push_back(std::move(row));
    }

    json outputs;
    outputs["pair"] = {{"mu", mu}, {"mu_prime", mup}};
    outputs["omega"] = omega;
    outputs["samples"] = std::move(samples);

    ctx.record_leq("strength_nonnegative", worst_negative, 1e-12);
    if (simulate)
        ctx.record_leq("closed_form_matches_simulation", worst_route_gap,
                       1e-7);
    return outputs;
}

}  // namespace

RunResult run_experiment(const json& config, const RunOptions& opts) {
    if (!config.is_object())
        throw ConfigError("config error at /: expected a JSON object");
    std::string scenario = config_string(config, "/scenario");
    if (opts.threads < 1)
        throw ConfigError("config error at /: threads must be >= 1");

    RunResult result;
    Context ctx(config, &result.asserts);

    auto start = std::chrono::steady_clock::now();
    json outputs;
    if (scenario == "tomography")
        outputs = run_tomography(ctx, opts);
    else if (scenario == "reconstruct")
        outputs = run_reconstruct(ctx, opts);
    else if (scenario == "markov-test")
        outputs = run_markov_test(ctx, opts);
    else if (scenario == "game")
        outputs = run_game(ctx, opts);
    else if (scenario == "mutualinfo")
        outputs = run_mutualinfo(ctx, opts);
    else if (scenario == "decouple")
        outputs = run_decouple(ctx, opts);
    else if (scenario == "scaling-sweep")
        outputs = run_scaling_sweep(ctx, opts);
    else
        throw ConfigError("config error at /scenario: unknown scenario '" +
                          scenario + "'");
    auto stop = std::chrono::steady_clock::now();

    double ms = opts.deterministic
                    ? 0.0
                    : std::chrono::duration<double, std::milli>(stop - start)
                          .count();
    result.report = make_report(config, scenario, std::move(outputs), ms);
    return result;
}

}  // namespace qtraj
