#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmap {

enum class Opcode : std::uint8_t {
    X,
    H,
    T,
    Tdg,
    S,
    Sdg,
    Cnot,
    Cv,
    Cvdg,
    Swap,
    Toffoli,
    Fredkin,
    Mct,
};

inline constexpr int kOpcodeCount = 13;

/// Fixed operand count of an opcode, or -1 for mct (controls..., target last).
int opcode_arity(Opcode op);

std::string_view opcode_name(Opcode op);
std::optional<Opcode> opcode_from_name(std::string_view name);

/// True for gates that square to the identity.
bool is_self_inverse(Opcode op);

/// True for gates that permute computational basis states.
bool is_classical(Opcode op);

/// Small value-type set of opcodes.
class OpcodeSet {
public:
    constexpr OpcodeSet() = default;
    OpcodeSet(std::initializer_list<Opcode> ops) {
        for (Opcode op : ops) insert(op);
    }
    void insert(Opcode op) { bits_ |= mask(op); }
    bool contains(Opcode op) const { return (bits_ & mask(op)) != 0; }
    friend bool operator==(const OpcodeSet&, const OpcodeSet&) = default;

private:
    static constexpr std::uint16_t mask(Opcode op) {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(op));
    }
    std::uint16_t bits_ = 0;
};

struct Gate {
    Opcode op{};
    std::vector<int> operands;

    int arity() const { return static_cast<int>(operands.size()); }
    int target() const { return operands.back(); }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Builds a gate, normalizing swap operands to ascending order. Throws
/// std::invalid_argument on arity mismatch or duplicate operands.
Gate make_gate(Opcode op, std::vector<int> operands);

/// Canonical single-line text of a gate, e.g. "cnot q0,q1".
std::string gate_text(const Gate& gate);

struct Circuit {
    int qubit_count = 0;
    std::vector<Gate> gates;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Throws std::invalid_argument if any gate breaks the circuit invariants
/// (arity, duplicate operands, operand range, swap normalization).
void validate_circuit(const Circuit& circuit);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

Circuit parse_qasm(std::string_view text);
Circuit parse_qasm_file(const std::string& path);
std::string emit_qasm(const Circuit& circuit);

}  // namespace qmap
