#pragma once

#include "qmap/qasm.hpp"

namespace qmap {

struct DecomposeConfig {
    bool lower_mct = true;
    bool lower_three_qubit = true;
};

/// Helper qubits available to a multi-controlled-Toffoli lowering. Ancillas
/// are assumed initialized to |0> and are returned to |0>.
struct AncillaAllocation {
    int original_qubits = 0;
    std::vector<int> ancilla_indices;
};

/// Toffoli -> five-gate controlled-V network over {cv, cvdg, cnot}.
std::vector<Gate> decompose_toffoli(const Gate& gate);

/// Fredkin -> cnot-framed Toffoli network (seven two-qubit gates).
std::vector<Gate> decompose_fredkin(const Gate& gate);

/// k-control Toffoli (k >= 3) -> V-chain of plain Toffolis using k-2
/// ancillas: compute the control conjunction up the chain, flip the target,
/// uncompute in reverse.
std::vector<Gate> decompose_mct(const Gate& gate, const AncillaAllocation& alloc);

/// Lowers every gate the config selects; ancillas are appended after the
/// original qubits and shared across mct instances.
Circuit lower_circuit(const Circuit& circuit, const DecomposeConfig& cfg);

}  // namespace qmap
