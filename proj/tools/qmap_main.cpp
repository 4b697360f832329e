// qmap: map a logical circuit onto a 2D nearest-neighbor grid.
//
// Exit codes: 0 success, 1 input or validation error, 2 internal invariant
// failure (the tool refusing to trust its own output).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qmap/metrics.hpp"
#include "qmap/verify.hpp"

namespace {

struct CommonOptions {
    std::string input;
    std::string output;
    bool decompose = false;
    bool no_restore = false;
    bool no_cancel = false;
    std::string strategy = "longpath";
    std::optional<std::uint64_t> seed;
    std::string grid_spec;
    std::string dump_graph;
    std::string dump_grid;
    bool show_grid = false;
    bool annotate = false;
    std::string report_format = "text";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

qmap::PlacementConfig parse_grid_spec(const std::string& spec) {
    qmap::PlacementConfig cfg;
    if (spec.empty()) return cfg;
    const auto x = spec.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument(spec);
        cfg.rows = std::stoi(spec.substr(0, x));
        cfg.cols = std::stoi(spec.substr(x + 1));
    } catch (const std::exception&) {
        throw UsageError("--grid expects ROWSxCOLS, e.g. 3x4");
    }
    return cfg;
}

qmap::Strategy parse_strategy(const CommonOptions& opts) {
    if (opts.strategy == "longpath") return qmap::Strategy::longpath();
    if (opts.strategy == "identity") return qmap::Strategy::identity();
    if (opts.strategy == "random") {
        if (!opts.seed) throw UsageError("--strategy random requires --seed");
        return qmap::Strategy::random(*opts.seed);
    }
    throw UsageError("unknown strategy '" + opts.strategy + "'");
}

qmap::Circuit load_circuit(const CommonOptions& opts) {
    qmap::Circuit circuit = qmap::parse_qasm_file(opts.input);
    if (!opts.decompose) {
        for (const qmap::Gate& gate : circuit.gates) {
            if (gate.arity() > 2) {
                throw UsageError("gate '" + qmap::gate_text(gate) + "' has arity > 2; pass --decompose");
            }
        }
    }
    return circuit;
}

qmap::PipelineConfig pipeline_config(const CommonOptions& opts) {
    qmap::PipelineConfig cfg;
    cfg.decompose = opts.decompose;
    cfg.placement = parse_grid_spec(opts.grid_spec);
    cfg.routing.restore = !opts.no_restore;
    cfg.routing.cancel = !opts.no_cancel;
    return cfg;
}

// Routed QASM with "# route for line k" comments ahead of each inserted
// swap block; k is the gate's index in the circuit that was routed.
std::string emit_annotated(const qmap::RoutedCircuit& routed) {
    std::string out = "qubits " + std::to_string(routed.circuit.qubit_count) + "\n";
    int open_block = -1;
    for (std::size_t i = 0; i < routed.circuit.gates.size(); ++i) {
        if (routed.inserted[i]) {
            if (routed.source_index[i] != open_block) {
                open_block = routed.source_index[i];
                out += "# route for line " + std::to_string(open_block) + "\n";
            }
        } else {
            open_block = -1;
        }
        out += qmap::gate_text(routed.circuit.gates[i]);
        out += '\n';
    }
    return out;
}

void emit_side_dumps(const CommonOptions& opts, const qmap::PipelineResult& result) {
    if (!opts.dump_graph.empty()) write_file(opts.dump_graph, result.graph.to_csv());
    if (!opts.dump_grid.empty()) {
        write_file(opts.dump_grid, qmap::spiral_place(result.path, parse_grid_spec(opts.grid_spec)).to_csv());
    }
    if (opts.show_grid) {
        std::cout << qmap::spiral_place(result.path, parse_grid_spec(opts.grid_spec)).to_art();
    }
}

int run_command(const CommonOptions& opts, bool emit_circuit, bool emit_report) {
    const qmap::Circuit circuit = load_circuit(opts);
    const qmap::PipelineResult result = run_pipeline(circuit, parse_strategy(opts), pipeline_config(opts));

    const qmap::ReplayVerdict verdict = qmap::replay_adjacency(result.routed);
    if (!verdict.ok) {
        std::cerr << "internal error: routed output fails adjacency replay: " << verdict.message << "\n";
        return 2;
    }

    emit_side_dumps(opts, result);
    if (emit_circuit) {
        const std::string text =
            opts.annotate ? emit_annotated(result.routed) : qmap::emit_qasm(result.routed.circuit);
        if (opts.output.empty()) {
            std::cout << text;
        } else {
            write_file(opts.output, text);
        }
    }
    if (emit_report) {
        std::cout << (opts.report_format == "json" ? qmap::report_json(result.report)
                                                   : qmap::report_text(result.report));
    }
    return 0;
}

int place_command(const CommonOptions& opts) {
    const qmap::Circuit circuit = load_circuit(opts);
    qmap::PipelineConfig cfg = pipeline_config(opts);

    const qmap::Circuit lowered = cfg.decompose ? qmap::lower_circuit(circuit, cfg.decompose_cfg) : circuit;
    const qmap::InteractionGraph graph = qmap::build_interaction_graph(lowered);
    qmap::LongPath path;
    const qmap::Strategy strategy = parse_strategy(opts);
    switch (strategy.kind) {
        case qmap::StrategyKind::LongPath:
            path = qmap::long_path(graph);
            break;
        case qmap::StrategyKind::Identity:
            for (int i = 0; i < lowered.qubit_count; ++i) path.order.push_back(i);
            break;
        case qmap::StrategyKind::Random:
            path.order = qmap::shuffled_indices(lowered.qubit_count, strategy.seed);
            break;
    }
    const qmap::Grid grid = qmap::spiral_place(path, cfg.placement);

    if (!opts.dump_graph.empty()) write_file(opts.dump_graph, graph.to_csv());
    if (!opts.dump_grid.empty()) write_file(opts.dump_grid, grid.to_csv());
    if (opts.show_grid || (opts.dump_grid.empty() && opts.dump_graph.empty())) std::cout << grid.to_art();
    return 0;
}

int verify_command() {
    using namespace qmap;
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    const Circuit toffoli_net{3, decompose_toffoli(make_gate(Opcode::Toffoli, {0, 1, 2}))};
    check("toffoli network matches the toffoli unitary",
          circuit_unitary(toffoli_net)
              .approx_equal_up_to_phase(gate_unitary(make_gate(Opcode::Toffoli, {0, 1, 2}), 3)));

    const Circuit fredkin_net{3, decompose_fredkin(make_gate(Opcode::Fredkin, {0, 1, 2}))};
    check("fredkin network matches the controlled-swap unitary",
          circuit_unitary(fredkin_net)
              .approx_equal_up_to_phase(gate_unitary(make_gate(Opcode::Fredkin, {0, 1, 2}), 3)));

    Circuit twice{2, {make_gate(Opcode::Cv, {0, 1}), make_gate(Opcode::Cv, {0, 1})}};
    check("controlled-V squared equals cnot",
          circuit_unitary(twice).max_abs_diff(gate_unitary(make_gate(Opcode::Cnot, {0, 1}), 2)) < 1e-12);

    for (const int k : {3, 4}) {
        const int total = 2 * k - 1;
        std::vector<int> ops(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) ops[static_cast<std::size_t>(i)] = i;
        AncillaAllocation alloc{k + 1, {}};
        for (int a = 0; a < k - 2; ++a) alloc.ancilla_indices.push_back(k + 1 + a);
        const Circuit network{total, decompose_mct(make_gate(Opcode::Mct, ops), alloc)};
        const auto perm = classical_action(network);

        const std::uint32_t ancilla_mask = (1u << (k - 2)) - 1u;
        const std::uint32_t control_mask = ((1u << k) - 1u) << (total - k);
        const std::uint32_t target_bit = 1u << (k - 2);
        bool ok = true;
        for (std::uint32_t b = 0; b < (1u << total); ++b) {
            if (b & ancilla_mask) continue;
            const std::uint32_t expected = ((b & control_mask) == control_mask) ? (b ^ target_bit) : b;
            if (perm[b] != expected) ok = false;
        }
        check("mct lowering with " + std::to_string(k) + " controls acts as C^kNOT", ok);
    }
    return failures == 0 ? 0 : 2;
}

int bench_command(int qubits, int gates, double hot_gates, double hot_pairs, int trials, std::uint64_t seed,
                  const std::string& format) {
    qmap::BenchmarkSpec spec;
    spec.qubits = qubits;
    spec.gate_count = gates;
    spec.hot_gate_fraction = hot_gates;
    spec.hot_pair_fraction = hot_pairs;
    const qmap::BenchmarkTable table = qmap::benchmark(spec, trials, seed);
    std::cout << (format == "json" ? qmap::benchmark_json(table) : qmap::benchmark_text(table));
    return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool routing_flags) {
    cmd->add_option("-i,--input", opts.input, "Input QASM file")->required();
    cmd->add_flag("--decompose", opts.decompose, "Lower toffoli/fredkin/mct gates first");
    cmd->add_option("--strategy", opts.strategy, "Placement ordering: longpath, identity or random")
        ->default_val("longpath");
    cmd->add_option("--seed", opts.seed, "Seed for --strategy random");
    cmd->add_option("--grid", opts.grid_spec, "Grid dimensions ROWSxCOLS (default: square)");
    cmd->add_option("--dump-graph", opts.dump_graph, "Write the interaction matrix as CSV");
    cmd->add_option("--dump-grid", opts.dump_grid, "Write the placement grid as CSV");
    cmd->add_flag("--show-grid", opts.show_grid, "Print the placement grid");
    if (routing_flags) {
        cmd->add_option("-o,--output", opts.output, "Routed QASM output file (default: stdout)");
        cmd->add_flag("--no-restore", opts.no_restore, "Let the placement evolve between gates");
        cmd->add_flag("--no-cancel", opts.no_cancel, "Keep redundant swap pairs");
        cmd->add_flag("--annotate", opts.annotate, "Comment each inserted swap block");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmap - spiral placement and swap routing for nearest-neighbor grids"};
    app.require_subcommand(1);

    CommonOptions run_opts, place_opts, route_opts;

    CLI::App* run = app.add_subcommand("run", "Place, route and report");
    add_common(run, run_opts, true);
    run->add_option("--report", run_opts.report_format, "Report format: text or json")->default_val("text");

    CLI::App* place = app.add_subcommand("place", "Compute the placement only");
    add_common(place, place_opts, false);

    CLI::App* route = app.add_subcommand("route", "Place and emit the routed circuit");
    add_common(route, route_opts, true);

    CLI::App* verify = app.add_subcommand("verify", "Run the decomposition self-checks");

    int bench_qubits = 9, bench_gates = 100, bench_trials = 200;
    double bench_hot_gates = 0.8, bench_hot_pairs = 0.2;
    std::uint64_t bench_seed = 1;
    std::string bench_format = "text";
    CLI::App* bench = app.add_subcommand("bench", "Compare strategies on a random family");
    bench->add_option("--qubits", bench_qubits)->default_val(9);
    bench->add_option("--gates", bench_gates)->default_val(100);
    bench->add_option("--hot-gates", bench_hot_gates, "Fraction of gates on hot pairs")->default_val(0.8);
    bench->add_option("--hot-pairs", bench_hot_pairs, "Fraction of pairs that are hot")->default_val(0.2);
    bench->add_option("--trials", bench_trials)->default_val(200);
    bench->add_option("--seed", bench_seed)->default_val(1);
    bench->add_option("--report", bench_format, "Report format: text or json")->default_val("text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(run_opts, !run_opts.output.empty(), true);
        if (place->parsed()) return place_command(place_opts);
        if (route->parsed()) return run_command(route_opts, true, false);
        if (verify->parsed()) return verify_command();
        if (bench->parsed()) {
            return bench_command(bench_qubits, bench_gates, bench_hot_gates, bench_hot_pairs, bench_trials,
                                 bench_seed, bench_format);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qmap::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
