#include "qmap/routing.hpp"

#include <algorithm>
#include <cstdlib>

namespace qmap {

namespace {

void check_whitelist(const OpcodeSet& whitelist) {
    for (int i = 0; i < kOpcodeCount; ++i) {
        auto op = static_cast<Opcode>(i);
        if (whitelist.contains(op) && !is_self_inverse(op)) {
            throw std::invalid_argument("cancel whitelist holds non-self-inverse opcode '" +
                                        std::string(opcode_name(op)) + "'");
        }
    }
}

struct WalkStep {
    Cell from;
    Cell to;
};

// Moves `mover` until it is adjacent to `anchor`, swapping cell contents as
// it goes. The anchor never lies on the walk, so its cell is stable.
std::vector<Gate> walk_to_adjacent(Grid& grid, int mover, int anchor, std::vector<WalkStep>* steps) {
    std::vector<Gate> swaps;
    Cell at = grid.position(mover);
    const Cell goal = grid.position(anchor);

    auto step_to = [&](int row, int col) {
        const int occupant = grid.cell(row, col);
        if (occupant == kEmptyCell) {
            throw std::invalid_argument("route walks through a vacant cell; fill vacant cells first");
        }
        swaps.push_back(make_gate(Opcode::Swap, {mover, occupant}));
        if (steps) steps->push_back(WalkStep{at, Cell{row, col}});
        grid.swap_qubits(mover, occupant);
        at = Cell{row, col};
    };

    if (at.col != goal.col) {
        while (at.row != goal.row) step_to(at.row + (goal.row > at.row ? 1 : -1), at.col);
        while (std::abs(at.col - goal.col) > 1) step_to(at.row, at.col + (goal.col > at.col ? 1 : -1));
    } else {
        while (std::abs(at.row - goal.row) > 1) step_to(at.row + (goal.row > at.row ? 1 : -1), at.col);
    }
    return swaps;
}

std::vector<std::size_t> kept_after_cancel(const std::vector<Gate>& gates, const OpcodeSet& whitelist) {
    std::vector<std::size_t> kept;
    kept.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!kept.empty() && whitelist.contains(gates[i].op) && gates[kept.back()] == gates[i]) {
            kept.pop_back();
        } else {
            kept.push_back(i);
        }
    }
    return kept;
}

}  // namespace

OpcodeSet default_cancel_whitelist() {
    return OpcodeSet{Opcode::Swap, Opcode::Cnot, Opcode::X, Opcode::Toffoli, Opcode::Fredkin};
}

RouteSteps route_gate(const Grid& grid, const Gate& gate) {
    if (gate.arity() > 2) throw std::invalid_argument("cannot route gate '" + gate_text(gate) + "' of arity > 2");
    if (gate.arity() <= 1) return {};
    Grid work = grid;
    RouteSteps steps;
    steps.forward = walk_to_adjacent(work, gate.operands[0], gate.operands[1], nullptr);
    steps.restore.assign(steps.forward.rbegin(), steps.forward.rend());
    return steps;
}

RoutedCircuit route_circuit(const Circuit& circuit, const Grid& placement, const RoutingConfig& cfg) {
    check_whitelist(cfg.cancel_whitelist);
    for (const Gate& gate : circuit.gates) {
        if (gate.arity() > 2) {
            throw std::invalid_argument("gate '" + gate_text(gate) + "' has arity > 2; lower the circuit first");
        }
    }
    if (placement.qubit_count() < circuit.qubit_count) {
        throw std::invalid_argument("placement holds fewer qubits than the circuit");
    }

    RoutedCircuit routed;
    routed.initial_grid = fill_vacant_cells(placement);
    Grid work = routed.initial_grid;
    routed.circuit.qubit_count = work.qubit_count();

    auto push = [&](Gate gate, int source, bool is_inserted) {
        routed.circuit.gates.push_back(std::move(gate));
        routed.source_index.push_back(source);
        routed.inserted.push_back(is_inserted ? 1 : 0);
    };

    for (std::size_t k = 0; k < circuit.gates.size(); ++k) {
        const Gate& gate = circuit.gates[k];
        if (gate.arity() <= 1) {
            push(gate, static_cast<int>(k), false);
            continue;
        }

        std::vector<WalkStep> cells;
        auto forward = walk_to_adjacent(work, gate.operands[0], gate.operands[1], &cells);
        for (Gate& swap : forward) push(std::move(swap), static_cast<int>(k), true);

        push(gate, static_cast<int>(k), false);
        // Replay treats every emitted swap as a position exchange, source
        // swaps included.
        if (gate.op == Opcode::Swap) work.swap_qubits(gate.operands[0], gate.operands[1]);

        if (cfg.restore) {
            // Walk the same cells back, naming the current occupants; a
            // source swap may have moved the operands since the forward
            // walk.
            for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
                const int u = work.cell(it->to.row, it->to.col);
                const int v = work.cell(it->from.row, it->from.col);
                push(make_gate(Opcode::Swap, {u, v}), static_cast<int>(k), true);
                work.swap_qubits(u, v);
            }
        }
    }

    routed.final_grid = work;
    routed.swaps_inserted_raw =
        static_cast<int>(std::count(routed.inserted.begin(), routed.inserted.end(), 1));

    if (cfg.cancel) {
        auto kept = kept_after_cancel(routed.circuit.gates, cfg.cancel_whitelist);
        std::vector<Gate> gates;
        std::vector<int> source;
        std::vector<std::uint8_t> inserted;
        gates.reserve(kept.size());
        for (std::size_t i : kept) {
            gates.push_back(std::move(routed.circuit.gates[i]));
            source.push_back(routed.source_index[i]);
            inserted.push_back(routed.inserted[i]);
        }
        routed.circuit.gates = std::move(gates);
        routed.source_index = std::move(source);
        routed.inserted = std::move(inserted);
    }
    routed.swap_count = static_cast<int>(std::count(routed.inserted.begin(), routed.inserted.end(), 1));
    return routed;
}

Circuit cancel_pairs(const Circuit& circuit, const OpcodeSet& whitelist) {
    check_whitelist(whitelist);
    auto kept = kept_after_cancel(circuit.gates, whitelist);
    Circuit out;
    out.qubit_count = circuit.qubit_count;
    out.gates.reserve(kept.size());
    for (std::size_t i : kept) out.gates.push_back(circuit.gates[i]);
    return out;
}

Circuit cancel_pairs(const Circuit& circuit) { return cancel_pairs(circuit, default_cancel_whitelist()); }

std::vector<int> permutation_trace(const Circuit& circuit, const Grid& grid) {
    Grid work = grid;
    for (std::size_t k = 0; k < circuit.gates.size(); ++k) {
        const Gate& gate = circuit.gates[k];
        if (gate.op != Opcode::Swap) continue;
        const Cell a = work.position(gate.operands[0]);
        const Cell b = work.position(gate.operands[1]);
        if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) {
            throw std::logic_error("gate " + std::to_string(k) + " ('" + gate_text(gate) +
                                   "') swaps non-adjacent cells");
        }
        work.swap_qubits(gate.operands[0], gate.operands[1]);
    }
    std::vector<int> perm(static_cast<std::size_t>(grid.rows()) * grid.cols());
    for (std::size_t p = 0; p < perm.size(); ++p) perm[p] = static_cast<int>(p);
    for (int qubit = 0; qubit < grid.qubit_count(); ++qubit) {
        const Cell from = grid.position(qubit);
        const Cell to = work.position(qubit);
        perm[static_cast<std::size_t>(from.row) * grid.cols() + from.col] = to.row * grid.cols() + to.col;
    }
    return perm;
}

}  // namespace qmap
