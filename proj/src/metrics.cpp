#include "qmap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

namespace qmap {

long long nnc_cost_1d(const Circuit& circuit, int swap_cost) {
    if (swap_cost < 1) throw std::invalid_argument("swap cost must be positive");
    long long total = 0;
    for (const Gate& gate : circuit.gates) {
        if (gate.arity() > 2) {
            throw std::invalid_argument("gate '" + gate_text(gate) + "' has arity > 2");
        }
        if (gate.arity() != 2) continue;
        const int lo = std::min(gate.operands[0], gate.operands[1]);
        const int hi = std::max(gate.operands[0], gate.operands[1]);
        total += static_cast<long long>(swap_cost) * (hi - lo - 1);
    }
    return total;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<int> shuffled_indices(int count, std::uint64_t seed) {
    std::vector<int> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), 0);
    SplitMix64 rng(seed);
    for (int i = count - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(out[static_cast<std::size_t>(i)], out[j]);
    }
    return out;
}

std::string_view Strategy::label() const {
    switch (kind) {
        case StrategyKind::LongPath:
            return "longpath";
        case StrategyKind::Identity:
            return "identity";
        case StrategyKind::Random:
            return "random";
    }
    return "?";
}

PipelineResult run_pipeline(const Circuit& circuit, const Strategy& strategy, const PipelineConfig& cfg) {
    PipelineResult result;
    result.lowered = cfg.decompose ? lower_circuit(circuit, cfg.decompose_cfg) : circuit;
    result.graph = build_interaction_graph(result.lowered);

    const int q = result.lowered.qubit_count;
    switch (strategy.kind) {
        case StrategyKind::LongPath:
            result.path = long_path(result.graph);
            break;
        case StrategyKind::Identity:
            result.path.order.resize(static_cast<std::size_t>(q));
            std::iota(result.path.order.begin(), result.path.order.end(), 0);
            break;
        case StrategyKind::Random:
            result.path.order = shuffled_indices(q, strategy.seed);
            break;
    }

    const Grid grid = spiral_place(result.path, cfg.placement);
    result.routed = route_circuit(result.lowered, grid, cfg.routing);

    CostReport& report = result.report;
    report.strategy = std::string(strategy.label());
    report.grid_rows = grid.rows();
    report.grid_cols = grid.cols();
    report.gates_in = static_cast<long long>(result.lowered.gates.size());
    report.gates_out = static_cast<long long>(result.routed.circuit.gates.size());
    report.two_qubit_gates = static_cast<long long>(
        std::count_if(result.lowered.gates.begin(), result.lowered.gates.end(),
                      [](const Gate& g) { return g.arity() == 2; }));
    report.swaps_inserted_raw = result.routed.swaps_inserted_raw;
    report.swaps_after_cancel = result.routed.swap_count;
    report.nnc_1d = nnc_cost_1d(result.lowered, 1);
    report.seed = strategy.seed;
    return result;
}

std::string report_text(const CostReport& report) {
    std::string out;
    auto row = [&](std::string_view key, const std::string& value) {
        out += key;
        out.append(16 - key.size(), ' ');
        out += value;
        out += '\n';
    };
    row("strategy", report.strategy);
    row("grid", std::to_string(report.grid_rows) + "x" + std::to_string(report.grid_cols));
    row("gates_in", std::to_string(report.gates_in));
    row("gates_out", std::to_string(report.gates_out));
    row("two_qubit_gates", std::to_string(report.two_qubit_gates));
    row("swaps_raw", std::to_string(report.swaps_inserted_raw));
    row("swaps_final", std::to_string(report.swaps_after_cancel));
    row("nnc_1d", std::to_string(report.nnc_1d));
    row("seed", std::to_string(report.seed));
    return out;
}

std::string report_json(const CostReport& report) {
    nlohmann::ordered_json j;
    j["strategy"] = report.strategy;
    j["grid"] = {{"rows", report.grid_rows}, {"cols", report.grid_cols}};
    j["gates_in"] = report.gates_in;
    j["gates_out"] = report.gates_out;
    j["two_qubit_gates"] = report.two_qubit_gates;
    j["swaps_raw"] = report.swaps_inserted_raw;
    j["swaps_final"] = report.swaps_after_cancel;
    j["nnc_1d"] = report.nnc_1d;
    j["seed"] = report.seed;
    return j.dump(2) + "\n";
}

Circuit skewed_random_circuit(const BenchmarkSpec& spec, std::uint64_t seed) {
    if (spec.qubits < 2) throw std::invalid_argument("family needs at least 2 qubits");
    if (spec.gate_count < 0) throw std::invalid_argument("negative gate count");
    if (spec.hot_gate_fraction < 0.0 || spec.hot_gate_fraction > 1.0 || spec.hot_pair_fraction < 0.0 ||
        spec.hot_pair_fraction > 1.0) {
        throw std::invalid_argument("fractions must lie in [0, 1]");
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < spec.qubits; ++i)
        for (int j = i + 1; j < spec.qubits; ++j) pairs.emplace_back(i, j);

    SplitMix64 rng(seed);
    for (std::size_t i = pairs.size() - 1; i > 0; --i) {
        std::swap(pairs[i], pairs[static_cast<std::size_t>(rng.below(i + 1))]);
    }
    const auto hot_count = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(spec.hot_pair_fraction * static_cast<double>(pairs.size()))));

    Circuit circuit;
    circuit.qubit_count = spec.qubits;
    for (int g = 0; g < spec.gate_count; ++g) {
        const bool hot = pairs.size() == hot_count || rng.unit() < spec.hot_gate_fraction;
        const std::size_t index = hot ? rng.below(hot_count)
                                      : hot_count + rng.below(pairs.size() - hot_count);
        auto [a, b] = pairs[index];
        if (rng.next() & 1) std::swap(a, b);
        circuit.gates.push_back(make_gate(Opcode::Cnot, {a, b}));
    }
    return circuit;
}

BenchmarkTable benchmark(const BenchmarkSpec& spec, int trials, std::uint64_t seed) {
    if (trials < 0) throw std::invalid_argument("negative trial count");
    BenchmarkTable table;
    table.spec = spec;
    table.trials = trials;
    table.seed = seed;
    if (trials == 0) return table;

    const Strategy strategies[] = {Strategy::longpath(), Strategy::identity(), Strategy::random(0)};
    std::vector<std::vector<long long>> raw(3), final_counts(3);

    SplitMix64 seeder(seed);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seeder.next();
        const Circuit circuit = skewed_random_circuit(spec, trial_seed);
        for (std::size_t s = 0; s < 3; ++s) {
            Strategy strategy = strategies[s];
            if (strategy.kind == StrategyKind::Random) strategy.seed = trial_seed;
            const PipelineResult result = run_pipeline(circuit, strategy);
            raw[s].push_back(result.report.swaps_inserted_raw);
            final_counts[s].push_back(result.report.swaps_after_cancel);
        }
    }

    auto mean = [](const std::vector<long long>& xs) {
        return static_cast<double>(std::accumulate(xs.begin(), xs.end(), 0ll)) / static_cast<double>(xs.size());
    };
    auto median = [](std::vector<long long> xs) {
        std::sort(xs.begin(), xs.end());
        const std::size_t n = xs.size();
        return n % 2 ? static_cast<double>(xs[n / 2])
                     : 0.5 * static_cast<double>(xs[n / 2 - 1] + xs[n / 2]);
    };
    for (std::size_t s = 0; s < 3; ++s) {
        table.rows.push_back(BenchmarkRow{std::string(strategies[s].label()), mean(raw[s]),
                                          mean(final_counts[s]), median(final_counts[s])});
    }
    return table;
}

std::string benchmark_text(const BenchmarkTable& table) {
    std::string out = "family: q=" + std::to_string(table.spec.qubits) +
                      " gates=" + std::to_string(table.spec.gate_count) + " hot_gates=" +
                      std::to_string(table.spec.hot_gate_fraction) + " hot_pairs=" +
                      std::to_string(table.spec.hot_pair_fraction) + " trials=" + std::to_string(table.trials) +
                      " seed=" + std::to_string(table.seed) + "\n";
    out += "strategy    mean_swaps_raw  mean_swaps_final  median_swaps_final\n";
    char line[128];
    for (const BenchmarkRow& row : table.rows) {
        std::snprintf(line, sizeof line, "%-10s  %14.2f  %16.2f  %18.1f\n", row.strategy.c_str(),
                      row.mean_swaps_raw, row.mean_swaps_final, row.median_swaps_final);
        out += line;
    }
    return out;
}

std::string benchmark_json(const BenchmarkTable& table) {
    nlohmann::ordered_json j;
    j["family"] = {{"qubits", table.spec.qubits},
                   {"gates", table.spec.gate_count},
                   {"hot_gate_fraction", table.spec.hot_gate_fraction},
                   {"hot_pair_fraction", table.spec.hot_pair_fraction}};
    j["trials"] = table.trials;
    j["seed"] = table.seed;
    j["rows"] = nlohmann::ordered_json::array();
    for (const BenchmarkRow& row : table.rows) {
        j["rows"].push_back({{"strategy", row.strategy},
                             {"mean_swaps_raw", row.mean_swaps_raw},
                             {"mean_swaps_final", row.mean_swaps_final},
                             {"median_swaps_final", row.median_swaps_final}});
    }
    return j.dump(2) + "\n";
}

}  // namespace qmap
