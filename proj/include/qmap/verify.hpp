#pragma once

#include "qmap/routing.hpp"

#include <complex>

namespace qmap {

inline constexpr int kMaxUnitaryQubits = 6;
inline constexpr int kMaxClassicalQubits = 24;
inline constexpr double kUnitaryTolerance = 1e-9;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    std::complex<double>& at(int row, int col) { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
    const std::complex<double>& at(int row, int col) const {
        return a_[static_cast<std::size_t>(row) * dim_ + col];
    }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

    double max_abs_diff(const ComplexMatrix& other) const;
    bool is_unitary(double tol = kUnitaryTolerance) const;
    /// Elementwise comparison after rotating both matrices' first
    /// significant entry onto the positive real axis.
    bool approx_equal_up_to_phase(const ComplexMatrix& other, double tol = kUnitaryTolerance) const;

private:
    int dim_ = 0;
    std::vector<std::complex<double>> a_;
};

/// Unitary of one gate embedded on `qubit_count` wires. Convention: qubit 0
/// is the most significant bit of the basis index.
ComplexMatrix gate_unitary(const Gate& gate, int qubit_count);

/// Product of the circuit's gate unitaries; later gates multiply on the
/// left, so unitary(A ++ B) = unitary(B) * unitary(A).
ComplexMatrix circuit_unitary(const Circuit& circuit);

/// Image of each computational basis state under a classical-reversible
/// circuit ({x, cnot, swap, toffoli, fredkin, mct} only).
using BasisPermutation = std::vector<std::uint32_t>;
BasisPermutation classical_action(const Circuit& circuit);

struct ReplayVerdict {
    bool ok = true;
    int violation_index = -1;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Replays the routed circuit's swaps on a copy of its initial grid and
/// checks that every two-qubit gate touches adjacent cells.
ReplayVerdict replay_adjacency(const RoutedCircuit& routed);

}  // namespace qmap
