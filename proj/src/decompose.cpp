#include "qmap/decompose.hpp"

#include <algorithm>

namespace qmap {

std::vector<Gate> decompose_toffoli(const Gate& gate) {
    if (gate.op != Opcode::Toffoli) throw std::invalid_argument("decompose_toffoli: opcode is not toffoli");
    const int a = gate.operands[0], b = gate.operands[1], c = gate.operands[2];
    return {
        make_gate(Opcode::Cv, {b, c}),
        make_gate(Opcode::Cnot, {a, b}),
        make_gate(Opcode::Cvdg, {b, c}),
        make_gate(Opcode::Cnot, {a, b}),
        make_gate(Opcode::Cv, {a, c}),
    };
}

std::vector<Gate> decompose_fredkin(const Gate& gate) {
    if (gate.op != Opcode::Fredkin) throw std::invalid_argument("decompose_fredkin: opcode is not fredkin");
    const int a = gate.operands[0], b = gate.operands[1], c = gate.operands[2];
    std::vector<Gate> out;
    out.push_back(make_gate(Opcode::Cnot, {c, b}));
    auto mid = decompose_toffoli(make_gate(Opcode::Toffoli, {a, b, c}));
    out.insert(out.end(), mid.begin(), mid.end());
    out.push_back(make_gate(Opcode::Cnot, {c, b}));
    return out;
}

std::vector<Gate> decompose_mct(const Gate& gate, const AncillaAllocation& alloc) {
    if (gate.op != Opcode::Mct) throw std::invalid_argument("decompose_mct: opcode is not mct");
    const int k = gate.arity() - 1;
    if (k < 3) throw std::invalid_argument("decompose_mct: fewer than 3 controls; emit toffoli/cnot directly");
    if (static_cast<int>(alloc.ancilla_indices.size()) < k - 2) {
        throw std::invalid_argument("decompose_mct: insufficient ancillas (need " + std::to_string(k - 2) + ")");
    }
    const std::vector<int>& ops = gate.operands;
    const int target = ops.back();
    const std::vector<int>& anc = alloc.ancilla_indices;
    for (int i = 0; i < k - 2; ++i) {
        if (std::find(ops.begin(), ops.end(), anc[i]) != ops.end()) {
            throw std::invalid_argument("decompose_mct: ancilla q" + std::to_string(anc[i]) + " collides with an operand");
        }
    }

    std::vector<Gate> compute;
    compute.push_back(make_gate(Opcode::Toffoli, {ops[0], ops[1], anc[0]}));
    for (int i = 1; i <= k - 3; ++i) {
        compute.push_back(make_gate(Opcode::Toffoli, {anc[i - 1], ops[i + 1], anc[i]}));
    }

    std::vector<Gate> out = compute;
    out.push_back(make_gate(Opcode::Toffoli, {anc[k - 3], ops[k - 1], target}));
    out.insert(out.end(), compute.rbegin(), compute.rend());
    return out;
}

Circuit lower_circuit(const Circuit& circuit, const DecomposeConfig& cfg) {
    if (cfg.lower_mct && !cfg.lower_three_qubit) {
        throw std::invalid_argument("lower_mct requires lower_three_qubit (mct lowering emits toffolis)");
    }

    // Shared ancilla pool: the widest mct instance sets the count.
    int ancillas = 0;
    if (cfg.lower_mct) {
        for (const Gate& gate : circuit.gates) {
            if (gate.op == Opcode::Mct) ancillas = std::max(ancillas, gate.arity() - 1 - 2);
        }
    }

    AncillaAllocation pool{circuit.qubit_count, {}};
    for (int i = 0; i < ancillas; ++i) pool.ancilla_indices.push_back(circuit.qubit_count + i);

    std::vector<Gate> stage;
    for (const Gate& gate : circuit.gates) {
        if (gate.op == Opcode::Mct && cfg.lower_mct) {
            const int k = gate.arity() - 1;
            if (k == 2) {
                stage.push_back(make_gate(Opcode::Toffoli, gate.operands));
            } else {
                AncillaAllocation alloc{circuit.qubit_count,
                                        {pool.ancilla_indices.begin(), pool.ancilla_indices.begin() + (k - 2)}};
                auto lowered = decompose_mct(gate, alloc);
                stage.insert(stage.end(), lowered.begin(), lowered.end());
            }
        } else {
            stage.push_back(gate);
        }
    }

    Circuit out;
    out.qubit_count = circuit.qubit_count + ancillas;
    if (!cfg.lower_three_qubit) {
        out.gates = std::move(stage);
        return out;
    }
    for (const Gate& gate : stage) {
        if (gate.op == Opcode::Toffoli) {
            auto lowered = decompose_toffoli(gate);
            out.gates.insert(out.gates.end(), lowered.begin(), lowered.end());
        } else if (gate.op == Opcode::Fredkin) {
            auto lowered = decompose_fredkin(gate);
            out.gates.insert(out.gates.end(), lowered.begin(), lowered.end());
        } else {
            out.gates.push_back(gate);
        }
    }
    return out;
}

}  // namespace qmap
