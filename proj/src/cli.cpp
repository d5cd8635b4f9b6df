// Copyright 2026 The ipea-bench Authors
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

#include "ipea/cli.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ipea/experiments.hpp"
#include "ipea/pea.hpp"
#include "ipea/verify.hpp"

namespace ipea::bench {

namespace {

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

template <class T>
T parse_number(const std::string& s) {
    std::size_t used = 0;
    T value{};
    try {
        if constexpr (std::is_same_v<T, int>) value = std::stoi(s, &used);
        else value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ArgumentError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw ArgumentError("not a number: '" + s + "'");
    return value;
}

struct Common {
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out;
    std::string format = "csv";

    trials::ExecPolicy exec() const { return {trials::Exec::openmp, threads}; }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "master seed");
    cmd->add_option("--threads", c.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", c.out, "output path (default: stdout)");
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + c.out);
    f << text;
    if (!f) throw std::runtime_error("failed writing " + c.out);
}

void emit_table(const Table& t, const Common& c, std::ostream& out) {
    emit(c.format == "json" ? to_json(t) : to_csv(t), c, out);
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const auto& part : split(text, ',')) {
        if (const auto dots = part.find(".."); dots != std::string::npos) {
            const int lo = parse_number<int>(part.substr(0, dots)), hi = parse_number<int>(part.substr(dots + 2));
            if (hi < lo) throw ArgumentError("empty range: " + part);
            for (int v = lo; v <= hi; ++v) values.push_back(v);
        } else {
            values.push_back(parse_number<int>(part));
        }
    }
    if (values.empty()) throw ArgumentError("empty list");
    return values;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_number<double>(part));
    if (values.empty()) throw ArgumentError("empty list");
    return values;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterative phase estimation simulator and benchmark harness", "ipea"};
    app.require_subcommand(1);

    Common common;
    std::string m_text, phi_text, delta_text, gamma_text, levels_text, cases_text, mode = "abstract",
                alpha_policy;
    std::optional<double> phi, alpha;
    double eps = 0.05, delta_x = 0.0;
    std::uint64_t trials_count = 0;

    auto* run = app.add_subcommand("run", "single IPEA run, prints the JSON transcript");
    run->add_option("--m", m_text, "bit count")->required();
    run->add_option("--phi", phi, "phase in [0,1) (abstract mode)");
    run->add_option("--alpha", alpha, "ZZ angle in radians (circuit mode)");
    run->add_option("--mode", mode, "abstract or circuit")->check(CLI::IsMember({"abstract", "circuit"}));
    run->add_option("--gamma", gamma_text, "dephasing ratio");
    run->add_option("--delta-x", delta_x, "RX over-rotation std. deviation");
    add_common(run, common);

    auto* success = app.add_subcommand("success-curve", "extraction frequency vs remainder");
    success->add_option("--m", m_text, "bit counts, e.g. 3,5,7");
    success->add_option("--delta", delta_text, "remainder grid");
    success->add_option("--trials", trials_count, "trials per grid point");
    add_common(success, common);

    auto* sweep = app.add_subcommand("noise-sweep", "success rate vs noise level, alpha averaged");
    sweep->add_option("--m", m_text, "bit counts (default 5,7)");
    sweep->add_option("--cases", cases_text, "xerr,dephasing,both");
    sweep->add_option("--levels", levels_text, "noise levels");
    sweep->add_option("--trials", trials_count, "trials per grid point");
    add_common(sweep, common);

    auto* cost = app.add_subcommand("cost-sweep", "planned measurement totals");
    cost->add_option("--m", m_text, "bit range (default 2..11)");
    cost->add_option("--gamma", gamma_text, "dephasing ratios");
    cost->add_option("--eps", eps, "error budget");
    cost->add_option("--alpha", alpha, "alpha (implies --alpha-policy fixed)");
    cost->add_option("--alpha-policy", alpha_policy, "fixed, mean-abs or worst")
        ->check(CLI::IsMember({"fixed", "mean-abs", "worst"}));
    cost->add_option("--delta-x", delta_x, "RX over-rotation std. deviation");
    add_common(cost, common);

    auto* cross = app.add_subcommand("crosscheck", "mode equivalence and trajectory-vs-formula checks");
    cross->add_option("--m", m_text, "bit counts");
    cross->add_option("--trials", trials_count, "Monte-Carlo trials");
    cross->add_option("--gamma", gamma_text, "dephasing ratio for trajectory rows");
    cross->add_option("--delta-x", delta_x, "RX over-rotation for trajectory rows");
    add_common(cross, common);

    auto* kitaev = app.add_subcommand("kitaev", "Kitaev PEA success rates");
    kitaev->add_option("--m", m_text, "bit counts");
    kitaev->add_option("--phi", phi_text, "phase grid (default 16 points)");
    kitaev->add_option("--eps", eps, "error budget");
    kitaev->add_option("--trials", trials_count, "runs per phase");
    add_common(kitaev, common);

    auto* naive = app.add_subcommand("naive", "naive PEA estimator accuracy");
    naive->add_option("--m", m_text, "bit counts");
    naive->add_option("--phi", phi_text, "phase grid");
    naive->add_option("--trials", trials_count, "repeats per phase");
    add_common(naive, common);

    auto* verify = app.add_subcommand("verify", "run the oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        try {
            if (*run) {
                const int m = parse_number<int>(m_text);
                std::optional<noise::NoiseParams> noise;
                if (!gamma_text.empty() || delta_x != 0.0)
                    noise = noise::NoiseParams{gamma_text.empty() ? 0.0 : parse_number<double>(gamma_text), delta_x};
                pea::IpeaConfig config;
                if (mode == "abstract") {
                    if (!phi || alpha) throw ArgumentError("abstract mode needs --phi (and no --alpha)");
                    config = pea::IpeaConfig::abstract(*phi, m, noise);
                } else {
                    if (!alpha || phi) throw ArgumentError("circuit mode needs --alpha (and no --phi)");
                    config = pea::IpeaConfig::circuit(*alpha, m, noise);
                }
                RngStream rng(common.seed, stream_key(ExperimentId::run, 0), 0);
                const auto t = pea::run_ipea(config, rng);
                std::string bits;
                for (auto b : t.result.bits()) bits += static_cast<char>('0' + b);
                err << "bits " << bits << "\n";
                emit(transcript_json(config, t, common.seed), common, out);
                return 0;
            }
            if (*success) {
                SuccessCurveConfig c;
                if (!m_text.empty()) c.m_list = parse_int_list(m_text);
                if (!delta_text.empty()) c.deltas = parse_real_list(delta_text);
                if (trials_count) c.trials = trials_count;
                c.seed = common.seed;
                c.exec = common.exec();
                emit_table(exp_success_curve(c), common, out);
                return 0;
            }
            if (*sweep) {
                NoiseSweepConfig c;
                if (!m_text.empty()) c.m_list = parse_int_list(m_text);
                if (!levels_text.empty()) c.levels = parse_real_list(levels_text);
                if (!cases_text.empty()) {
                    c.cases.clear();
                    for (const auto& name : split(cases_text, ',')) c.cases.push_back(parse_noise_case(name));
                }
                if (trials_count) c.trials = trials_count;
                c.seed = common.seed;
                c.exec = common.exec();
                emit_table(exp_noise_sweep(c), common, out);
                return 0;
            }
            if (*cost) {
                CostSweepConfig c;
                if (!m_text.empty()) c.m_list = parse_int_list(m_text);
                if (!gamma_text.empty()) c.gammas = parse_real_list(gamma_text);
                c.eps = eps;
                c.delta_x = delta_x;
                const auto policy = parse_alpha_policy(alpha_policy.empty() ? (alpha ? "fixed" : "mean-abs") : alpha_policy);
                if (policy == AlphaPolicy::fixed && !alpha) throw ArgumentError("--alpha-policy fixed needs --alpha");
                c.alpha = resolve_alpha(policy, alpha.value_or(0.0));
                emit_table(exp_cost_sweep(c), common, out);
                return 0;
            }
            if (*cross) {
                CrosscheckConfig c;
                if (!m_text.empty()) c.m_list = parse_int_list(m_text);
                if (trials_count) c.trials = trials_count;
                if (!gamma_text.empty()) c.noise.gamma_ratio = parse_number<double>(gamma_text);
                if (cross->count("--delta-x")) c.noise.delta_x = delta_x;
                c.seed = common.seed;
                c.exec = common.exec();
                emit_table(exp_crosscheck(c), common, out);
                return 0;
            }
            if (*kitaev) {
                KitaevConfig c;
                if (!m_text.empty()) c.m_list = parse_int_list(m_text);
                if (!phi_text.empty()) c.phases = parse_real_list(phi_text);
                c.eps = eps;
                if (trials_count) c.trials = trials_count;
                c.seed = common.seed;
                c.exec = common.exec();
                emit_table(exp_kitaev(c), common, out);
                return 0;
            }
            if (*naive) {
                NaiveConfig c;
                if (!m_text.empty()) c.m_list = parse_int_list(m_text);
                if (!phi_text.empty()) c.phases = parse_real_list(phi_text);
                if (trials_count) c.trials = trials_count;
                c.seed = common.seed;
                c.exec = common.exec();
                emit_table(exp_naive(c), common, out);
                return 0;
            }
            if (*verify) {
                bool ok = true;
                for (const auto& r : run_verify()) {
                    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
                    ok = ok && r.passed;
                }
                return ok ? 0 : 1;
            }
        } catch (const ArgumentError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            // Bad values that only surface once the model validates them.
            throw ArgumentError(e.what());
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace ipea::bench
