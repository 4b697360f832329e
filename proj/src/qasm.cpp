#include "qmap/qasm.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <sstream>

namespace qmap {

namespace {

struct OpcodeInfo {
    std::string_view name;
    int arity;  // -1: variadic (>= 3 operands)
    bool self_inverse;
    bool classical;
};

constexpr std::array<OpcodeInfo, kOpcodeCount> kOpcodes{{
    {"x", 1, true, true},
    {"h", 1, true, false},
    {"t", 1, false, false},
    {"tdg", 1, false, false},
    {"s", 1, false, false},
    {"sdg", 1, false, false},
    {"cnot", 2, true, true},
    {"cv", 2, false, false},
    {"cvdg", 2, false, false},
    {"swap", 2, true, true},
    {"toffoli", 3, true, true},
    {"fredkin", 3, true, true},
    {"mct", -1, true, true},
}};

const OpcodeInfo& info(Opcode op) { return kOpcodes[static_cast<std::size_t>(op)]; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_uint(std::string_view s, int& out) {
    if (s.empty()) return false;
    long long value = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + (ch - '0');
        if (value > std::numeric_limits<int>::max()) return false;
    }
    out = static_cast<int>(value);
    return true;
}

void check_gate(const Gate& gate, int line_for_error = -1) {
    auto fail = [&](const std::string& reason) {
        if (line_for_error >= 0) throw ParseError(line_for_error, reason);
        throw std::invalid_argument(reason);
    };
    const int want = info(gate.op).arity;
    const int got = gate.arity();
    if (want >= 0 && got != want) {
        fail("opcode '" + std::string(opcode_name(gate.op)) + "' expects " + std::to_string(want) +
             " operand(s), got " + std::to_string(got));
    }
    if (want < 0 && got < 3) {
        fail("opcode 'mct' expects at least 3 operands, got " + std::to_string(got));
    }
    for (std::size_t i = 0; i < gate.operands.size(); ++i) {
        if (gate.operands[i] < 0) fail("negative qubit index");
        for (std::size_t j = i + 1; j < gate.operands.size(); ++j) {
            if (gate.operands[i] == gate.operands[j]) {
                fail("duplicate operand q" + std::to_string(gate.operands[i]));
            }
        }
    }
}

}  // namespace

int opcode_arity(Opcode op) { return info(op).arity; }
std::string_view opcode_name(Opcode op) { return info(op).name; }
bool is_self_inverse(Opcode op) { return info(op).self_inverse; }
bool is_classical(Opcode op) { return info(op).classical; }

std::optional<Opcode> opcode_from_name(std::string_view name) {
    for (int i = 0; i < kOpcodeCount; ++i) {
        if (kOpcodes[static_cast<std::size_t>(i)].name == name) return static_cast<Opcode>(i);
    }
    return std::nullopt;
}

Gate make_gate(Opcode op, std::vector<int> operands) {
    Gate gate{op, std::move(operands)};
    if (op == Opcode::Swap && gate.operands.size() == 2 && gate.operands[0] > gate.operands[1]) {
        std::swap(gate.operands[0], gate.operands[1]);
    }
    check_gate(gate);
    return gate;
}

std::string gate_text(const Gate& gate) {
    std::string out(opcode_name(gate.op));
    out += ' ';
    for (std::size_t i = 0; i < gate.operands.size(); ++i) {
        if (i > 0) out += ',';
        out += 'q';
        out += std::to_string(gate.operands[i]);
    }
    return out;
}

void validate_circuit(const Circuit& circuit) {
    if (circuit.qubit_count <= 0) throw std::invalid_argument("qubit count must be positive");
    for (const Gate& gate : circuit.gates) {
        check_gate(gate);
        if (gate.op == Opcode::Swap && gate.operands[0] > gate.operands[1]) {
            throw std::invalid_argument("swap operands not in ascending order");
        }
        for (int qubit : gate.operands) {
            if (qubit >= circuit.qubit_count) {
                throw std::invalid_argument("operand q" + std::to_string(qubit) + " out of range for " +
                                            std::to_string(circuit.qubit_count) + " qubits");
            }
        }
    }
}

Circuit parse_qasm(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
        ++line_no;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::size_t sp = line.find_first_of(" \t");
        std::string_view head = line.substr(0, sp);
        std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

        if (!have_header) {
            if (head != "qubits") throw ParseError(line_no, "expected header 'qubits <count>'");
            int count = 0;
            if (!parse_uint(rest, count)) throw ParseError(line_no, "malformed qubit count '" + std::string(rest) + "'");
            if (count <= 0) throw ParseError(line_no, "qubit count must be positive");
            circuit.qubit_count = count;
            have_header = true;
            continue;
        }

        auto op = opcode_from_name(head);
        if (!op) throw ParseError(line_no, "unknown opcode '" + std::string(head) + "'");

        std::vector<int> operands;
        if (rest.empty()) throw ParseError(line_no, "missing operands");
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string_view tok =
                trim(rest.substr(start, comma == std::string_view::npos ? rest.size() - start : comma - start));
            int index = 0;
            if (tok.size() < 2 || tok.front() != 'q' || !parse_uint(tok.substr(1), index)) {
                throw ParseError(line_no, "operand '" + std::string(tok) + "' is not of the form q<index>");
            }
            if (index >= circuit.qubit_count) {
                throw ParseError(line_no, "operand q" + std::to_string(index) + " out of range for " +
                                              std::to_string(circuit.qubit_count) + " qubits");
            }
            operands.push_back(index);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }

        Gate gate{*op, std::move(operands)};
        if (gate.op == Opcode::Swap && gate.operands.size() == 2 && gate.operands[0] > gate.operands[1]) {
            std::swap(gate.operands[0], gate.operands[1]);
        }
        check_gate(gate, line_no);
        circuit.gates.push_back(std::move(gate));
    }
    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'qubits' header");
    return circuit;
}

Circuit parse_qasm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_qasm(buffer.str());
}

std::string emit_qasm(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
    for (const Gate& gate : circuit.gates) {
        out += gate_text(gate);
        out += '\n';
    }
    return out;
}

}  // namespace qmap
