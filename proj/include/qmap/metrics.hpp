#pragma once

#include "qmap/decompose.hpp"
#include "qmap/routing.hpp"

#include <string>

namespace qmap {

/// 1D nearest-neighbor cost: swap_cost * (number of lines strictly between
/// the two operands), summed over all two-qubit gates.
long long nnc_cost_1d(const Circuit& circuit, int swap_cost);

/// Deterministic small RNG (SplitMix64). Raw engine output only, so results
/// are identical across platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);
    double unit();  // [0, 1)

private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle of 0..count-1 under the given seed.
std::vector<int> shuffled_indices(int count, std::uint64_t seed);

enum class StrategyKind { LongPath, Identity, Random };

struct Strategy {
    StrategyKind kind = StrategyKind::LongPath;
    std::uint64_t seed = 0;

    static Strategy longpath() { return {StrategyKind::LongPath, 0}; }
    static Strategy identity() { return {StrategyKind::Identity, 0}; }
    static Strategy random(std::uint64_t seed) { return {StrategyKind::Random, seed}; }

    std::string_view label() const;
};

struct PipelineConfig {
    bool decompose = false;
    DecomposeConfig decompose_cfg;
    PlacementConfig placement;
    RoutingConfig routing;
};

struct CostReport {
    std::string strategy;
    int grid_rows = 0;
    int grid_cols = 0;
    long long gates_in = 0;         // post-lowering gate count
    long long gates_out = 0;        // routed circuit gate count
    long long two_qubit_gates = 0;  // in the post-lowering circuit
    long long swaps_inserted_raw = 0;
    long long swaps_after_cancel = 0;
    long long nnc_1d = 0;  // unit-cost 1D NNC of the post-lowering circuit
    std::uint64_t seed = 0;
};

struct PipelineResult {
    Circuit lowered;
    InteractionGraph graph;
    LongPath path;
    RoutedCircuit routed;
    CostReport report;
};

/// lower (optional) -> interaction graph -> ordering -> spiral placement ->
/// routing -> report. Deterministic for a given strategy seed.
PipelineResult run_pipeline(const Circuit& circuit, const Strategy& strategy, const PipelineConfig& cfg = {});

std::string report_text(const CostReport& report);
std::string report_json(const CostReport& report);

/// Random-circuit family with skewed pair usage: hot_gate_fraction of the
/// gates land on hot_pair_fraction of the qubit pairs.
struct BenchmarkSpec {
    int qubits = 9;
    int gate_count = 100;
    double hot_gate_fraction = 0.8;
    double hot_pair_fraction = 0.2;
};

Circuit skewed_random_circuit(const BenchmarkSpec& spec, std::uint64_t seed);

struct BenchmarkRow {
    std::string strategy;
    double mean_swaps_raw = 0.0;
    double mean_swaps_final = 0.0;
    double median_swaps_final = 0.0;
};

struct BenchmarkTable {
    BenchmarkSpec spec;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<BenchmarkRow> rows;
};

/// Runs every strategy on `trials` circuits drawn from the family and
/// aggregates the swap counts. Identical seeds give identical tables.
BenchmarkTable benchmark(const BenchmarkSpec& spec, int trials, std::uint64_t seed);

std::string benchmark_text(const BenchmarkTable& table);
std::string benchmark_json(const BenchmarkTable& table);

}  // namespace qmap
