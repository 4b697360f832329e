#include "qmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace qmap {

namespace {

using cdouble = std::complex<double>;

// Basis-state image of a classical gate on its own sub-index; operand 0 is
// the most significant bit, the target the least significant.
std::uint32_t classical_sub_image(Opcode op, int arity, std::uint32_t sub) {
    auto bit = [&](int operand) -> std::uint32_t { return (sub >> (arity - 1 - operand)) & 1u; };
    auto flip = [&](int operand) { sub ^= 1u << (arity - 1 - operand); };
    switch (op) {
        case Opcode::X:
            flip(0);
            break;
        case Opcode::Cnot:
            if (bit(0)) flip(1);
            break;
        case Opcode::Swap:
            if (bit(0) != bit(1)) {
                flip(0);
                flip(1);
            }
            break;
        case Opcode::Toffoli:
            if (bit(0) && bit(1)) flip(2);
            break;
        case Opcode::Fredkin:
            if (bit(0) && bit(1) != bit(2)) {
                flip(1);
                flip(2);
            }
            break;
        case Opcode::Mct: {
            bool all = true;
            for (int i = 0; i < arity - 1; ++i) all = all && bit(i);
            if (all) flip(arity - 1);
            break;
        }
        default:
            throw std::invalid_argument("opcode '" + std::string(opcode_name(op)) + "' is not classical");
    }
    return sub;
}

ComplexMatrix base_matrix(const Gate& gate) {
    const cdouble i1(0.0, 1.0);
    const int m = gate.arity();
    ComplexMatrix out(1 << m);
    auto perm = [&]() {
        for (std::uint32_t sub = 0; sub < (1u << m); ++sub) {
            out.at(static_cast<int>(classical_sub_image(gate.op, m, sub)), static_cast<int>(sub)) = 1.0;
        }
    };
    const cdouble v00 = 0.5 * (1.0 + i1), v01 = 0.5 * (1.0 - i1);  // V = sqrt(X)
    switch (gate.op) {
        case Opcode::H: {
            const double s = 1.0 / std::sqrt(2.0);
            out.at(0, 0) = s;
            out.at(0, 1) = s;
            out.at(1, 0) = s;
            out.at(1, 1) = -s;
            break;
        }
        case Opcode::T:
        case Opcode::Tdg: {
            out.at(0, 0) = 1.0;
            cdouble phase = std::exp(i1 * (std::numbers::pi / 4.0));
            out.at(1, 1) = gate.op == Opcode::T ? phase : std::conj(phase);
            break;
        }
        case Opcode::S:
        case Opcode::Sdg:
            out.at(0, 0) = 1.0;
            out.at(1, 1) = gate.op == Opcode::S ? i1 : -i1;
            break;
        case Opcode::Cv:
        case Opcode::Cvdg: {
            out.at(0, 0) = 1.0;
            out.at(1, 1) = 1.0;
            const bool dagger = gate.op == Opcode::Cvdg;
            out.at(2, 2) = dagger ? std::conj(v00) : v00;
            out.at(2, 3) = dagger ? std::conj(v01) : v01;
            out.at(3, 2) = dagger ? std::conj(v01) : v01;
            out.at(3, 3) = dagger ? std::conj(v00) : v00;
            break;
        }
        default:
            perm();
            break;
    }
    return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    a_.assign(static_cast<std::size_t>(dim) * dim, cdouble{});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimensions differ");
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int k = 0; k < dim_; ++k) {
            const cdouble lhs = at(r, k);
            if (lhs == 0.0) continue;
            for (int c = 0; c < dim_; ++c) out.at(r, c) += lhs * rhs.at(k, c);
        }
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
    return worst;
}

bool ComplexMatrix::is_unitary(double tol) const {
    ComplexMatrix product(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            cdouble sum{};
            for (int k = 0; k < dim_; ++k) sum += at(k, r) * std::conj(at(k, c));
            product.at(r, c) = sum;
        }
    }
    return product.max_abs_diff(identity(dim_)) <= tol;
}

bool ComplexMatrix::approx_equal_up_to_phase(const ComplexMatrix& other, double tol) const {
    if (dim_ != other.dim_) return false;
    auto normalized = [](ComplexMatrix m) {
        for (auto& z : m.a_) {
            if (std::abs(z) > 1e-12) {
                const cdouble rotation = std::conj(z) / std::abs(z);
                for (auto& w : m.a_) w *= rotation;
                break;
            }
        }
        return m;
    };
    return normalized(*this).max_abs_diff(normalized(other)) <= tol;
}

ComplexMatrix gate_unitary(const Gate& gate, int qubit_count) {
    if (qubit_count < 1 || qubit_count > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary simulation supports 1.." + std::to_string(kMaxUnitaryQubits) +
                                    " qubits");
    }
    for (int operand : gate.operands) {
        if (operand >= qubit_count) throw std::invalid_argument("gate operand out of range");
    }
    const int m = gate.arity();
    const ComplexMatrix base = base_matrix(gate);
    const int dim = 1 << qubit_count;
    ComplexMatrix full(dim);

    std::vector<int> shift(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) shift[static_cast<std::size_t>(t)] = qubit_count - 1 - gate.operands[static_cast<std::size_t>(t)];

    for (int in = 0; in < dim; ++in) {
        int sub_in = 0;
        int rest = in;
        for (int t = 0; t < m; ++t) {
            sub_in |= ((in >> shift[static_cast<std::size_t>(t)]) & 1) << (m - 1 - t);
            rest &= ~(1 << shift[static_cast<std::size_t>(t)]);
        }
        for (int sub_out = 0; sub_out < (1 << m); ++sub_out) {
            const cdouble amp = base.at(sub_out, sub_in);
            if (amp == 0.0) continue;
            int out = rest;
            for (int t = 0; t < m; ++t) out |= ((sub_out >> (m - 1 - t)) & 1) << shift[static_cast<std::size_t>(t)];
            full.at(out, in) = amp;
        }
    }
    return full;
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
    if (circuit.qubit_count > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary simulation supports at most " +
                                    std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    ComplexMatrix u = ComplexMatrix::identity(1 << circuit.qubit_count);
    for (const Gate& gate : circuit.gates) u = gate_unitary(gate, circuit.qubit_count) * u;
    return u;
}

BasisPermutation classical_action(const Circuit& circuit) {
    const int q = circuit.qubit_count;
    if (q > kMaxClassicalQubits) {
        throw std::invalid_argument("classical simulation supports at most " +
                                    std::to_string(kMaxClassicalQubits) + " qubits");
    }
    for (const Gate& gate : circuit.gates) {
        if (!is_classical(gate.op)) {
            throw std::invalid_argument("opcode '" + std::string(opcode_name(gate.op)) + "' is not classical");
        }
    }
    const std::uint32_t size = 1u << q;
    BasisPermutation perm(size);
    for (std::uint32_t b = 0; b < size; ++b) {
        std::uint32_t x = b;
        for (const Gate& gate : circuit.gates) {
            const int m = gate.arity();
            std::uint32_t sub = 0;
            for (int t = 0; t < m; ++t) sub |= ((x >> (q - 1 - gate.operands[static_cast<std::size_t>(t)])) & 1u) << (m - 1 - t);
            const std::uint32_t image = classical_sub_image(gate.op, m, sub);
            for (int t = 0; t < m; ++t) {
                const std::uint32_t bit = (image >> (m - 1 - t)) & 1u;
                const int pos = q - 1 - gate.operands[static_cast<std::size_t>(t)];
                x = (x & ~(1u << pos)) | (bit << pos);
            }
        }
        perm[b] = x;
    }
    return perm;
}

ReplayVerdict replay_adjacency(const RoutedCircuit& routed) {
    Grid work = routed.initial_grid;
    for (std::size_t k = 0; k < routed.circuit.gates.size(); ++k) {
        const Gate& gate = routed.circuit.gates[k];
        if (gate.arity() < 2) continue;
        if (gate.arity() > 2) {
            return {false, static_cast<int>(k),
                    "gate " + std::to_string(k) + " ('" + gate_text(gate) + "') has arity > 2"};
        }
        const int a = gate.operands[0], b = gate.operands[1];
        if (!work.placed(a) || !work.placed(b)) {
            return {false, static_cast<int>(k),
                    "gate " + std::to_string(k) + " ('" + gate_text(gate) + "') touches an unplaced qubit"};
        }
        const Cell pa = work.position(a);
        const Cell pb = work.position(b);
        const int distance = std::abs(pa.row - pb.row) + std::abs(pa.col - pb.col);
        if (distance != 1) {
            return {false, static_cast<int>(k),
                    "gate " + std::to_string(k) + " ('" + gate_text(gate) + "') acts on cells at distance " +
                        std::to_string(distance)};
        }
        if (gate.op == Opcode::Swap) work.swap_qubits(a, b);
    }
    return {};
}

}  // namespace qmap
