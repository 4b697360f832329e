#include <doctest.h>

#include <numeric>
#include <random>

#include "qmap/verify.hpp"

using namespace qmap;

namespace {

Circuit random_circuit(std::mt19937_64& rng, int q, int gates, bool classical_only) {
    Circuit c;
    c.qubit_count = q;
    const Opcode any[] = {Opcode::X,  Opcode::H,    Opcode::T,    Opcode::S,
                          Opcode::Cnot, Opcode::Cv, Opcode::Swap};
    const Opcode classical[] = {Opcode::X, Opcode::Cnot, Opcode::Swap};
    for (int g = 0; g < gates; ++g) {
        const Opcode op = classical_only ? classical[rng() % 3] : any[rng() % 7];
        if (opcode_arity(op) == 1) {
            c.gates.push_back(make_gate(op, {static_cast<int>(rng() % static_cast<unsigned>(q))}));
        } else {
            int a = static_cast<int>(rng() % static_cast<unsigned>(q));
            int b = static_cast<int>(rng() % static_cast<unsigned>(q - 1));
            if (b >= a) ++b;
            c.gates.push_back(make_gate(op, {a, b}));
        }
    }
    return c;
}

}  // namespace

TEST_CASE("empty circuit gives the identity") {
    const auto u = circuit_unitary(Circuit{1, {}});
    CHECK(u.max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("x gate is Pauli-X") {
    const auto u = circuit_unitary(Circuit{1, {make_gate(Opcode::X, {0})}});
    CHECK(u.at(0, 1) == std::complex<double>(1.0));
    CHECK(u.at(1, 0) == std::complex<double>(1.0));
    CHECK(u.at(0, 0) == std::complex<double>(0.0));
}

TEST_CASE("qubit 0 is the most significant bit") {
    // x on qubit 0 of two: |00> -> |10>, i.e. column 0 maps to row 2.
    const auto u = circuit_unitary(Circuit{2, {make_gate(Opcode::X, {0})}});
    CHECK(u.at(2, 0) == std::complex<double>(1.0));
    CHECK(u.at(3, 1) == std::complex<double>(1.0));
}

TEST_CASE("later gates multiply on the left") {
    std::mt19937_64 rng(0xc0ffeeu);
    for (int trial = 0; trial < 25; ++trial) {
        const Circuit a = random_circuit(rng, 3, 5, false);
        Circuit b = random_circuit(rng, 3, 5, false);
        Circuit ab = a;
        ab.gates.insert(ab.gates.end(), b.gates.begin(), b.gates.end());
        const auto lhs = circuit_unitary(ab);
        const auto rhs = circuit_unitary(b) * circuit_unitary(a);
        CHECK(lhs.max_abs_diff(rhs) < 1e-12);
    }
}

TEST_CASE("controlled-V squares to cnot") {
    Circuit twice{2, {make_gate(Opcode::Cv, {0, 1}), make_gate(Opcode::Cv, {0, 1})}};
    const auto cnot = gate_unitary(make_gate(Opcode::Cnot, {0, 1}), 2);
    CHECK(circuit_unitary(twice).max_abs_diff(cnot) < 1e-12);

    Circuit cancel{2, {make_gate(Opcode::Cv, {0, 1}), make_gate(Opcode::Cvdg, {0, 1})}};
    CHECK(circuit_unitary(cancel).max_abs_diff(ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("circuit unitaries are unitary") {
    std::mt19937_64 rng(0x7711u);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit c = random_circuit(rng, 4, 12, false);
        CHECK(circuit_unitary(c).is_unitary(1e-9));
    }
}

TEST_CASE("classical action of a swap exchanges 01 and 10") {
    const auto perm = classical_action(Circuit{2, {make_gate(Opcode::Swap, {0, 1})}});
    CHECK(perm[0b01] == 0b10);
    CHECK(perm[0b10] == 0b01);
    CHECK(perm[0b00] == 0b00);
    CHECK(perm[0b11] == 0b11);
}

TEST_CASE("double cnot is the identity permutation") {
    const auto perm =
        classical_action(Circuit{2, {make_gate(Opcode::Cnot, {0, 1}), make_gate(Opcode::Cnot, {0, 1})}});
    for (std::uint32_t b = 0; b < 4; ++b) CHECK(perm[b] == b);
}

TEST_CASE("classical action rejects non-classical opcodes") {
    CHECK_THROWS_AS(classical_action(Circuit{1, {make_gate(Opcode::H, {0})}}), std::invalid_argument);
}

TEST_CASE("unitary simulation is capped at six qubits") {
    CHECK_THROWS_AS(circuit_unitary(Circuit{7, {}}), std::invalid_argument);
}

TEST_CASE("classical action agrees with the unitary on basis columns") {
    std::mt19937_64 rng(0x1234u);
    for (int trial = 0; trial < 30; ++trial) {
        const int q = 2 + static_cast<int>(rng() % 3);
        const Circuit c = random_circuit(rng, q, 10, true);
        const auto perm = classical_action(c);
        const auto u = circuit_unitary(c);
        for (std::uint32_t b = 0; b < (1u << q); ++b) {
            CHECK(std::abs(u.at(static_cast<int>(perm[b]), static_cast<int>(b)) -
                           std::complex<double>(1.0)) < 1e-12);
        }
    }
}

TEST_CASE("replay_adjacency accepts routed circuits and empty circuits") {
    std::mt19937_64 rng(0xddccu);
    for (int trial = 0; trial < 40; ++trial) {
        const int q = 4 + static_cast<int>(rng() % 9);
        Circuit c = random_circuit(rng, q, 20, false);
        LongPath path;
        path.order.resize(static_cast<std::size_t>(q));
        std::iota(path.order.begin(), path.order.end(), 0);
        std::shuffle(path.order.begin(), path.order.end(), rng);
        RoutingConfig cfg;
        cfg.restore = (trial % 2 == 0);
        const RoutedCircuit routed = route_circuit(c, spiral_place(path), cfg);
        const ReplayVerdict verdict = replay_adjacency(routed);
        INFO(verdict.message);
        CHECK(verdict.ok);
    }

    RoutedCircuit empty;
    empty.circuit.qubit_count = 4;
    empty.initial_grid = Grid::from_cells(2, 2, {0, 1, 2, 3});
    empty.final_grid = empty.initial_grid;
    CHECK(replay_adjacency(empty).ok);
}

TEST_CASE("replay_adjacency reports the first violation") {
    RoutedCircuit bogus;
    bogus.circuit.qubit_count = 4;
    bogus.circuit.gates.push_back(make_gate(Opcode::Cnot, {0, 3}));  // distance 2 on 2x2
    bogus.initial_grid = Grid::from_cells(2, 2, {0, 1, 2, 3});
    bogus.final_grid = bogus.initial_grid;
    const ReplayVerdict verdict = replay_adjacency(bogus);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.violation_index == 0);
    CHECK(!verdict.message.empty());
}
