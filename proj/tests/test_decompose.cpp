#include <doctest.h>

#include "qmap/decompose.hpp"
#include "qmap/verify.hpp"

using namespace qmap;

TEST_CASE("toffoli lowers to the five-gate controlled-V network") {
    const auto gates = decompose_toffoli(make_gate(Opcode::Toffoli, {0, 1, 2}));
    const std::vector<Gate> expected{
        make_gate(Opcode::Cv, {1, 2}),   make_gate(Opcode::Cnot, {0, 1}), make_gate(Opcode::Cvdg, {1, 2}),
        make_gate(Opcode::Cnot, {0, 1}), make_gate(Opcode::Cv, {0, 2}),
    };
    CHECK(gates == expected);
}

TEST_CASE("toffoli network matches the 8x8 toffoli unitary") {
    Circuit network{3, decompose_toffoli(make_gate(Opcode::Toffoli, {0, 1, 2}))};
    const ComplexMatrix target = gate_unitary(make_gate(Opcode::Toffoli, {0, 1, 2}), 3);
    CHECK(circuit_unitary(network).approx_equal_up_to_phase(target, 1e-9));

    // Self-inverse: the network applied twice is the identity.
    Circuit twice = network;
    twice.gates.insert(twice.gates.end(), network.gates.begin(), network.gates.end());
    CHECK(circuit_unitary(twice).approx_equal_up_to_phase(ComplexMatrix::identity(8), 1e-9));
}

TEST_CASE("toffoli network on permuted operands") {
    Circuit network{3, decompose_toffoli(make_gate(Opcode::Toffoli, {2, 0, 1}))};
    const ComplexMatrix target = gate_unitary(make_gate(Opcode::Toffoli, {2, 0, 1}), 3);
    CHECK(circuit_unitary(network).approx_equal_up_to_phase(target, 1e-9));
}

TEST_CASE("fredkin lowers to seven two-qubit gates equal to controlled-swap") {
    const auto gates = decompose_fredkin(make_gate(Opcode::Fredkin, {0, 1, 2}));
    CHECK(gates.size() == 7);
    for (const Gate& g : gates) CHECK(g.arity() == 2);

    Circuit network{3, gates};
    const ComplexMatrix target = gate_unitary(make_gate(Opcode::Fredkin, {0, 1, 2}), 3);
    CHECK(circuit_unitary(network).approx_equal_up_to_phase(target, 1e-9));
}

TEST_CASE("fredkin basis actions") {
    // |101> -> |110>: control on, targets exchanged.
    Circuit c{3, {make_gate(Opcode::Fredkin, {0, 1, 2})}};
    const auto perm = classical_action(c);
    CHECK(perm[0b101] == 0b110);
    CHECK(perm[0b110] == 0b101);
    // Control off: |0xy> fixed for all x, y.
    for (std::uint32_t b = 0; b < 4; ++b) CHECK(perm[b] == b);
}

TEST_CASE("mct ancilla counts follow k-2") {
    // k=3 -> 1 ancilla, k=4 -> 2 ancillas.
    AncillaAllocation one{5, {4}};
    auto k3 = decompose_mct(make_gate(Opcode::Mct, {0, 1, 2, 3}), one);
    CHECK(k3.size() == 3);  // 2(k-2)+1 plain toffolis

    AncillaAllocation two{5, {5, 6}};
    auto k4 = decompose_mct(make_gate(Opcode::Mct, {0, 1, 2, 3, 4}), two);
    CHECK(k4.size() == 5);
    for (const Gate& g : k4) CHECK(g.op == Opcode::Toffoli);
}

TEST_CASE("mct k=3 equals C^3NOT on every basis state with ancillas zero") {
    // Controls 0,1,2, target 3, ancilla 4.
    AncillaAllocation alloc{4, {4}};
    Circuit network{5, decompose_mct(make_gate(Opcode::Mct, {0, 1, 2, 3}), alloc)};
    const auto perm = classical_action(network);
    for (std::uint32_t b = 0; b < 32; ++b) {
        if (b & 1u) continue;  // ancilla (qubit 4) must start at 0
        const bool controls = (b & 0b10000u) && (b & 0b01000u) && (b & 0b00100u);
        const std::uint32_t expected = controls ? (b ^ 0b00010u) : b;
        CHECK(perm[b] == expected);
        CHECK((perm[b] & 1u) == 0);  // ancilla restored
    }
}

TEST_CASE("mct rejects bad inputs") {
    CHECK_THROWS_AS(decompose_mct(make_gate(Opcode::Mct, {0, 1, 2}), AncillaAllocation{3, {3}}),
                    std::invalid_argument);  // k=2: caller should emit a toffoli
    CHECK_THROWS_AS(decompose_mct(make_gate(Opcode::Mct, {0, 1, 2, 3}), AncillaAllocation{4, {}}),
                    std::invalid_argument);  // no ancillas
    CHECK_THROWS_AS(decompose_mct(make_gate(Opcode::Mct, {0, 1, 2, 3}), AncillaAllocation{4, {2}}),
                    std::invalid_argument);  // ancilla collides with an operand
    CHECK_THROWS_AS(decompose_toffoli(make_gate(Opcode::Cnot, {0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(decompose_fredkin(make_gate(Opcode::Toffoli, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("lower_circuit leaves two-qubit circuits alone") {
    Circuit c{3, {make_gate(Opcode::Cnot, {0, 1}), make_gate(Opcode::Cnot, {1, 2})}};
    CHECK(lower_circuit(c, DecomposeConfig{}) == c);
}

TEST_CASE("lower_circuit expands a lone toffoli without new qubits") {
    Circuit c{3, {make_gate(Opcode::Toffoli, {0, 1, 2})}};
    const Circuit lowered = lower_circuit(c, DecomposeConfig{});
    CHECK(lowered.qubit_count == 3);
    CHECK(lowered.gates.size() == 5);
}

TEST_CASE("lower_circuit flattens an mct to arity <= 2") {
    Circuit c{5, {make_gate(Opcode::Mct, {0, 1, 2, 3, 4})}};
    const Circuit lowered = lower_circuit(c, DecomposeConfig{});
    CHECK(lowered.qubit_count == 7);  // two shared ancillas appended
    for (const Gate& g : lowered.gates) CHECK(g.arity() <= 2);
}

TEST_CASE("lower_circuit reuses ancillas across mct instances") {
    Circuit c{6,
              {make_gate(Opcode::Mct, {0, 1, 2, 3}),          // k=3: 1 ancilla
               make_gate(Opcode::Mct, {0, 1, 2, 3, 4, 5})}};  // k=5: 3 ancillas
    const Circuit lowered = lower_circuit(c, DecomposeConfig{});
    CHECK(lowered.qubit_count == 9);  // max(1, 3), not the sum
}

TEST_CASE("lower_circuit maps two-control mct to toffoli") {
    Circuit c{3, {make_gate(Opcode::Mct, {0, 1, 2})}};
    DecomposeConfig keep3;
    keep3.lower_mct = true;
    keep3.lower_three_qubit = true;
    const Circuit lowered = lower_circuit(c, keep3);
    CHECK(lowered.qubit_count == 3);
    CHECK(lowered.gates.size() == 5);  // toffoli then its network
}

TEST_CASE("lower_mct without lower_three_qubit is rejected") {
    DecomposeConfig cfg;
    cfg.lower_mct = true;
    cfg.lower_three_qubit = false;
    Circuit c{3, {}};
    CHECK_THROWS_AS(lower_circuit(c, cfg), std::invalid_argument);
}

TEST_CASE("lowered circuits preserve the unitary") {
    Circuit c{4, {make_gate(Opcode::H, {0}), make_gate(Opcode::Toffoli, {0, 1, 3}),
                  make_gate(Opcode::Cnot, {3, 2}), make_gate(Opcode::Fredkin, {1, 2, 0})}};
    const Circuit lowered = lower_circuit(c, DecomposeConfig{});
    CHECK(lowered.qubit_count == 4);
    CHECK(circuit_unitary(lowered).approx_equal_up_to_phase(circuit_unitary(c), 1e-9));
}
