#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmap/metrics.hpp"
#include "qmap/verify.hpp"

namespace py = pybind11;
using namespace qmap;

namespace {

py::array_t<std::complex<double>> matrix_to_numpy(const ComplexMatrix& m) {
    py::array_t<std::complex<double>> out({m.dim(), m.dim()});
    auto view = out.mutable_unchecked<2>();
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) view(r, c) = m.at(r, c);
    return out;
}

std::vector<Opcode> whitelist_to_list(const OpcodeSet& set) {
    std::vector<Opcode> out;
    for (int i = 0; i < kOpcodeCount; ++i) {
        if (set.contains(static_cast<Opcode>(i))) out.push_back(static_cast<Opcode>(i));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qmap, m) {
    m.doc() = "Spiral placement and swap routing for nearest-neighbor grids";

    py::enum_<Opcode>(m, "Opcode")
        .value("X", Opcode::X)
        .value("H", Opcode::H)
        .value("T", Opcode::T)
        .value("TDG", Opcode::Tdg)
        .value("S", Opcode::S)
        .value("SDG", Opcode::Sdg)
        .value("CNOT", Opcode::Cnot)
        .value("CV", Opcode::Cv)
        .value("CVDG", Opcode::Cvdg)
        .value("SWAP", Opcode::Swap)
        .value("TOFFOLI", Opcode::Toffoli)
        .value("FREDKIN", Opcode::Fredkin)
        .value("MCT", Opcode::Mct);

    py::class_<Gate>(m, "Gate")
        .def(py::init(&make_gate), py::arg("op"), py::arg("operands"))
        .def_readonly("op", &Gate::op)
        .def_readonly("operands", &Gate::operands)
        .def_property_readonly("arity", &Gate::arity)
        .def(py::self == py::self)
        .def("__repr__", [](const Gate& g) { return "<Gate " + gate_text(g) + ">"; });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init([](int qubit_count, std::vector<Gate> gates) {
                 Circuit c{qubit_count, std::move(gates)};
                 validate_circuit(c);
                 return c;
             }),
             py::arg("qubit_count"), py::arg("gates") = std::vector<Gate>{})
        .def_readwrite("qubit_count", &Circuit::qubit_count)
        .def_readwrite("gates", &Circuit::gates)
        .def(py::self == py::self)
        .def("__len__", [](const Circuit& c) { return c.gates.size(); })
        .def("__repr__", [](const Circuit& c) {
            return "<Circuit qubits=" + std::to_string(c.qubit_count) +
                   " gates=" + std::to_string(c.gates.size()) + ">";
        });

    m.def("parse_qasm", &parse_qasm, py::arg("text"));
    m.def("emit_qasm", &emit_qasm, py::arg("circuit"));

    py::class_<DecomposeConfig>(m, "DecomposeConfig")
        .def(py::init<>())
        .def_readwrite("lower_mct", &DecomposeConfig::lower_mct)
        .def_readwrite("lower_three_qubit", &DecomposeConfig::lower_three_qubit);

    py::class_<AncillaAllocation>(m, "AncillaAllocation")
        .def(py::init([](int original_qubits, std::vector<int> ancillas) {
                 return AncillaAllocation{original_qubits, std::move(ancillas)};
             }),
             py::arg("original_qubits"), py::arg("ancilla_indices"))
        .def_readonly("original_qubits", &AncillaAllocation::original_qubits)
        .def_readonly("ancilla_indices", &AncillaAllocation::ancilla_indices);

    m.def("decompose_toffoli", &decompose_toffoli, py::arg("gate"));
    m.def("decompose_fredkin", &decompose_fredkin, py::arg("gate"));
    m.def("decompose_mct", &decompose_mct, py::arg("gate"), py::arg("alloc"));
    m.def("lower_circuit", &lower_circuit, py::arg("circuit"), py::arg("config") = DecomposeConfig{});

    py::class_<InteractionGraph>(m, "InteractionGraph")
        .def(py::init<int>(), py::arg("qubit_count"))
        .def_property_readonly("qubit_count", &InteractionGraph::qubit_count)
        .def("weight", &InteractionGraph::weight, py::arg("i"), py::arg("j"))
        .def("set_weight", &InteractionGraph::set_weight, py::arg("i"), py::arg("j"), py::arg("weight"))
        .def("add_interaction", &InteractionGraph::add_interaction, py::arg("i"), py::arg("j"))
        .def("to_csv", &InteractionGraph::to_csv);

    m.def("build_interaction_graph", &build_interaction_graph, py::arg("circuit"));

    py::class_<DegreeInfo>(m, "DegreeInfo")
        .def_readonly("degree", &DegreeInfo::degree)
        .def_readonly("maxdeg_vertex", &DegreeInfo::maxdeg_vertex);
    m.def("degree_info", &degree_info, py::arg("graph"));

    py::class_<LongPath>(m, "LongPath")
        .def(py::init([](std::vector<int> order) { return LongPath{std::move(order)}; }), py::arg("order"))
        .def_readonly("order", &LongPath::order);
    m.def("long_path", &long_path, py::arg("graph"));

    py::class_<Cell>(m, "Cell")
        .def_readonly("row", &Cell::row)
        .def_readonly("col", &Cell::col)
        .def("__repr__",
             [](const Cell& c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; });

    py::class_<Grid>(m, "Grid")
        .def_static("from_cells", &Grid::from_cells, py::arg("rows"), py::arg("cols"), py::arg("cells"))
        .def_property_readonly("rows", &Grid::rows)
        .def_property_readonly("cols", &Grid::cols)
        .def_property_readonly("qubit_count", &Grid::qubit_count)
        .def("cell", &Grid::cell, py::arg("row"), py::arg("col"))
        .def("cells", &Grid::cells)
        .def("position", &Grid::position, py::arg("qubit"))
        .def("to_art", &Grid::to_art)
        .def("to_csv", &Grid::to_csv)
        .def(py::self == py::self);

    m.def("spiral_order", &spiral_order, py::arg("rows"), py::arg("cols"), py::arg("count"));
    m.def(
        "spiral_place",
        [](const LongPath& path, std::optional<int> rows, std::optional<int> cols) {
            PlacementConfig cfg;
            cfg.rows = rows;
            cfg.cols = cols;
            return spiral_place(path, cfg);
        },
        py::arg("path"), py::arg("rows") = std::nullopt, py::arg("cols") = std::nullopt);
    m.def("grid_distance", &grid_distance, py::arg("grid"), py::arg("i"), py::arg("j"));
    m.def("fill_vacant_cells", &fill_vacant_cells, py::arg("grid"));

    py::class_<RoutingConfig>(m, "RoutingConfig")
        .def(py::init<>())
        .def_readwrite("restore", &RoutingConfig::restore)
        .def_readwrite("cancel", &RoutingConfig::cancel)
        .def_property(
            "cancel_whitelist",
            [](const RoutingConfig& cfg) { return whitelist_to_list(cfg.cancel_whitelist); },
            [](RoutingConfig& cfg, const std::vector<Opcode>& ops) {
                cfg.cancel_whitelist = OpcodeSet{};
                for (Opcode op : ops) cfg.cancel_whitelist.insert(op);
            });

    py::class_<RouteSteps>(m, "RouteSteps")
        .def_readonly("forward", &RouteSteps::forward)
        .def_readonly("restore", &RouteSteps::restore);
    m.def("route_gate", &route_gate, py::arg("grid"), py::arg("gate"));

    py::class_<RoutedCircuit>(m, "RoutedCircuit")
        .def_readonly("circuit", &RoutedCircuit::circuit)
        .def_readonly("initial_grid", &RoutedCircuit::initial_grid)
        .def_readonly("final_grid", &RoutedCircuit::final_grid)
        .def_readonly("swap_count", &RoutedCircuit::swap_count)
        .def_readonly("swaps_inserted_raw", &RoutedCircuit::swaps_inserted_raw)
        .def_readonly("source_index", &RoutedCircuit::source_index);

    m.def("route_circuit", &route_circuit, py::arg("circuit"), py::arg("placement"),
          py::arg("config") = RoutingConfig{});
    m.def("cancel_pairs", py::overload_cast<const Circuit&>(&cancel_pairs), py::arg("circuit"));
    m.def("permutation_trace", &permutation_trace, py::arg("circuit"), py::arg("grid"));

    m.def("circuit_unitary", [](const Circuit& c) { return matrix_to_numpy(circuit_unitary(c)); },
          py::arg("circuit"));
    m.def("gate_unitary",
          [](const Gate& g, int qubit_count) { return matrix_to_numpy(gate_unitary(g, qubit_count)); },
          py::arg("gate"), py::arg("qubit_count"));
    m.def("classical_action", &classical_action, py::arg("circuit"));

    py::class_<ReplayVerdict>(m, "ReplayVerdict")
        .def_readonly("ok", &ReplayVerdict::ok)
        .def_readonly("violation_index", &ReplayVerdict::violation_index)
        .def_readonly("message", &ReplayVerdict::message)
        .def("__bool__", [](const ReplayVerdict& v) { return v.ok; });
    m.def("replay_adjacency", &replay_adjacency, py::arg("routed"));

    m.def("nnc_cost_1d", &nnc_cost_1d, py::arg("circuit"), py::arg("swap_cost") = 1);

    py::class_<Strategy>(m, "Strategy")
        .def_static("longpath", &Strategy::longpath)
        .def_static("identity", &Strategy::identity)
        .def_static("random", &Strategy::random, py::arg("seed"))
        .def_property_readonly("label", [](const Strategy& s) { return std::string(s.label()); });

    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init<>())
        .def_readwrite("decompose", &PipelineConfig::decompose)
        .def_readwrite("decompose_cfg", &PipelineConfig::decompose_cfg)
        .def_readwrite("routing", &PipelineConfig::routing)
        .def_property(
            "grid",
            [](const PipelineConfig& cfg) {
                return std::make_pair(cfg.placement.rows, cfg.placement.cols);
            },
            [](PipelineConfig& cfg, std::pair<std::optional<int>, std::optional<int>> dims) {
                cfg.placement.rows = dims.first;
                cfg.placement.cols = dims.second;
            });

    py::class_<CostReport>(m, "CostReport")
        .def_readonly("strategy", &CostReport::strategy)
        .def_readonly("grid_rows", &CostReport::grid_rows)
        .def_readonly("grid_cols", &CostReport::grid_cols)
        .def_readonly("gates_in", &CostReport::gates_in)
        .def_readonly("gates_out", &CostReport::gates_out)
        .def_readonly("two_qubit_gates", &CostReport::two_qubit_gates)
        .def_readonly("swaps_inserted_raw", &CostReport::swaps_inserted_raw)
        .def_readonly("swaps_after_cancel", &CostReport::swaps_after_cancel)
        .def_readonly("nnc_1d", &CostReport::nnc_1d)
        .def_readonly("seed", &CostReport::seed)
        .def("to_json", &report_json)
        .def("to_text", &report_text);

    py::class_<PipelineResult>(m, "PipelineResult")
        .def_readonly("lowered", &PipelineResult::lowered)
        .def_readonly("graph", &PipelineResult::graph)
        .def_readonly("path", &PipelineResult::path)
        .def_readonly("routed", &PipelineResult::routed)
        .def_readonly("report", &PipelineResult::report);

    m.def("run_pipeline", &run_pipeline, py::arg("circuit"), py::arg("strategy") = Strategy::longpath(),
          py::arg("config") = PipelineConfig{});

    py::class_<BenchmarkSpec>(m, "BenchmarkSpec")
        .def(py::init<>())
        .def_readwrite("qubits", &BenchmarkSpec::qubits)
        .def_readwrite("gate_count", &BenchmarkSpec::gate_count)
        .def_readwrite("hot_gate_fraction", &BenchmarkSpec::hot_gate_fraction)
        .def_readwrite("hot_pair_fraction", &BenchmarkSpec::hot_pair_fraction);

    py::class_<BenchmarkRow>(m, "BenchmarkRow")
        .def_readonly("strategy", &BenchmarkRow::strategy)
        .def_readonly("mean_swaps_raw", &BenchmarkRow::mean_swaps_raw)
        .def_readonly("mean_swaps_final", &BenchmarkRow::mean_swaps_final)
        .def_readonly("median_swaps_final", &BenchmarkRow::median_swaps_final);

    py::class_<BenchmarkTable>(m, "BenchmarkTable")
        .def_readonly("trials", &BenchmarkTable::trials)
        .def_readonly("seed", &BenchmarkTable::seed)
        .def_readonly("rows", &BenchmarkTable::rows)
        .def("to_json", &benchmark_json)
        .def("to_text", &benchmark_text);

    m.def("benchmark", &benchmark, py::arg("spec"), py::arg("trials"), py::arg("seed"));
    m.def("skewed_random_circuit", &skewed_random_circuit, py::arg("spec"), py::arg("seed"));

    py::register_exception<ParseError>(m, "QasmParseError", PyExc_ValueError);

    m.attr("__version__") = "0.1.0";
}
