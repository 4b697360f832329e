#pragma once

#include "qmap/placement.hpp"

namespace qmap {

OpcodeSet default_cancel_whitelist();

struct RoutingConfig {
    /// Undo each gate's movement swaps afterwards so every gate routes
    /// against the same placement.
    bool restore = true;
    /// Remove identical adjacent self-inverse gate pairs afterwards.
    bool cancel = true;
    OpcodeSet cancel_whitelist = default_cancel_whitelist();
};

struct RouteSteps {
    std::vector<Gate> forward;
    std::vector<Gate> restore;  // forward reversed; each swap is self-inverse
};

/// Swaps that walk gate.operands[0] adjacent to operands[1]: first along the
/// rows of its starting column, then along the destination row, stopping one
/// cell short. |forward| = grid_distance - 1. Arity-1 gates yield empty
/// lists. The caller's grid is not modified.
RouteSteps route_gate(const Grid& grid, const Gate& gate);

struct RoutedCircuit {
    Circuit circuit;
    Grid initial_grid;
    Grid final_grid;
    /// Router-inserted swaps present in `circuit` (after cancellation when
    /// it is enabled).
    int swap_count = 0;
    /// Router-inserted swaps before cancellation.
    int swaps_inserted_raw = 0;
    /// Per output gate: index of the source gate it belongs to.
    std::vector<int> source_index;
    /// Per output gate: 1 if the gate is a router-inserted swap.
    std::vector<std::uint8_t> inserted;
};

/// Inserts movement swaps before every non-adjacent two-qubit gate (and the
/// reverse sequence after it when cfg.restore is set). Vacant cells are
/// filled with spare qubit indices first so every movement is an explicit
/// swap; the output circuit's qubit count grows accordingly.
RoutedCircuit route_circuit(const Circuit& circuit, const Grid& placement, const RoutingConfig& cfg = {});

/// Stack-based scan removing identical adjacent pairs of whitelisted
/// (self-inverse) gates; removing a pair re-exposes the gate before it, so
/// nested pairs annihilate too.
Circuit cancel_pairs(const Circuit& circuit, const OpcodeSet& whitelist);
Circuit cancel_pairs(const Circuit& circuit);

/// Net cell permutation induced by the circuit's swap gates: entry p is the
/// final cell index (row-major) of the content that started at cell p.
/// Throws std::logic_error on a swap between non-adjacent cells.
std::vector<int> permutation_trace(const Circuit& circuit, const Grid& grid);

}  // namespace qmap
